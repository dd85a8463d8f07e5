#include <benchmark/benchmark.h>

#include <random>

#include "kast/alt_smith.hpp"
#include "kast/cokernel.hpp"
#include "kast/det.hpp"
#include "kast/exact_matrix.hpp"
#include "kast/families.hpp"
#include "kast/laurent_smith.hpp"
#include "kast/matching.hpp"
#include "kast/smith.hpp"

namespace kast {
namespace {

Matrix<BigInteger> random_matrix(size_t n, uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> d(-9, 9);
  Matrix<BigInteger> m(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

void BM_IntegerSmith(benchmark::State& state) {
  auto m = random_matrix(static_cast<size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m, false));
}
BENCHMARK(BM_IntegerSmith)->RangeMultiplier(2)->Range(4, 32);

void BM_IntegerSmithWithTransforms(benchmark::State& state) {
  auto m = random_matrix(static_cast<size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m, true));
}
BENCHMARK(BM_IntegerSmithWithTransforms)->RangeMultiplier(2)->Range(4, 32);

void BM_AlternatingSmith(benchmark::State& state) {
  size_t n = static_cast<size_t>(state.range(0));
  auto u = random_matrix(n, 3);
  Matrix<BigInteger> a(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      a(i, j) = u(i, j);
      a(j, i) = -u(i, j);
    }
  for (auto _ : state) benchmark::DoNotOptimize(alternating_smith_form(a));
}
BENCHMARK(BM_AlternatingSmith)->RangeMultiplier(2)->Range(4, 32);

void BM_AztecCokernel(benchmark::State& state) {
  auto m = specialize(family_matrix(FamilySpec::aztec(state.range(0))).matrix, BigInteger(1));
  for (auto _ : state) benchmark::DoNotOptimize(cokernel_of(m));
}
BENCHMARK(BM_AztecCokernel)->DenseRange(2, 8, 2);

void BM_BoxLaurentSmith(benchmark::State& state) {
  long a = state.range(0);
  auto m = family_matrix(FamilySpec::ppbox(a, a, a, WeightMode::Cube)).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(laurent_smith_attempt(m, kDefaultLaurentStepLimit, false));
}
// The size 3 box stops early at the growth cap; it is timed as such.
BENCHMARK(BM_BoxLaurentSmith)->DenseRange(1, 3);

void BM_BoxRationalInvariants(benchmark::State& state) {
  long a = state.range(0);
  auto m = family_matrix(FamilySpec::ppbox(a, a, a, WeightMode::Cube)).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(stable_invariants_rational(m));
}
BENCHMARK(BM_BoxRationalInvariants)->DenseRange(1, 3);

void BM_LaurentDeterminant(benchmark::State& state) {
  long a = state.range(0);
  auto m = family_matrix(FamilySpec::ppbox(a, a, a, WeightMode::Cube)).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_LaurentDeterminant)->DenseRange(1, 4);

void BM_FamilyMatrixBuild(benchmark::State& state) {
  long a = state.range(0);
  FamilySpec s = FamilySpec::quotient(SymmetryGroup::Tau, a, a, a, WeightMode::Cube);
  for (auto _ : state) benchmark::DoNotOptimize(family_matrix(s));
}
BENCHMARK(BM_FamilyMatrixBuild)->DenseRange(1, 4);

void BM_MatchingEnumeration(benchmark::State& state) {
  EmbeddedGraph g = build_family_graph(FamilySpec::aztec(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_matchings(g, {false, 200}));
}
BENCHMARK(BM_MatchingEnumeration)->DenseRange(1, 4);

}  // namespace
}  // namespace kast

BENCHMARK_MAIN();
