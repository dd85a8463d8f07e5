#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <stdexcept>

#include "kast/aztec.hpp"
#include "kast/cokernel.hpp"
#include "kast/det.hpp"
#include "kast/exact_matrix.hpp"
#include "kast/families.hpp"
#include "kast/gv.hpp"
#include "kast/hexagon.hpp"
#include "kast/kasteleyn.hpp"
#include "kast/laurent_smith.hpp"
#include "kast/matching.hpp"
#include "kast/qfactor.hpp"
#include "kast/skew.hpp"

namespace kast {
namespace {

using G = SymmetryGroup;
using MZ = Matrix<BigInteger>;

constexpr size_t kGuard = 400;

BigInteger matching_count(const EmbeddedGraph& g) { return enumerate_matchings(g, {false, kGuard}).count; }
LaurentPoly matching_weight(const EmbeddedGraph& g) { return enumerate_matchings(g, {false, kGuard}).total_weight; }

size_t polygamous_count(const EmbeddedGraph& g) {
  size_t k = 0;
  for (const auto& v : g.vertices) k += v.kind != VertexKind::Monogamous;
  return k;
}

LaurentPoly family_det(const FamilyMatrix& fm) {
  return fm.mode == MatrixMode::Bipartite ? determinant(fm.matrix) : pfaffian(fm.matrix);
}

Matrix<LaurentPoly> lift(const MZ& m) {
  Matrix<LaurentPoly> r(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r(i, j) = LaurentPoly(m(i, j));
  return r;
}

MZ mul(const MZ& a, const MZ& b) {
  MZ c(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k)
      for (size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
  return c;
}

MZ identity(size_t n) {
  MZ m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

// Sum over semistandard tableaux of shape lambda/mu with entries 1..a of
// q^(sum of (entry - 1)), by filling cells row by row.
LaurentPoly skew_schur_oracle(const Partition& lambda, const Partition& mu, long a) {
  std::vector<std::pair<long, long>> cells;
  for (size_t r = 1; r <= lambda.length(); ++r)
    for (long c = mu.part(r) + 1; c <= lambda.part(r); ++c) cells.push_back({static_cast<long>(r), c});
  std::map<std::pair<long, long>, long> fill;
  LaurentPoly sum;
  std::function<void(size_t, long)> rec = [&](size_t k, long exponent) {
    if (k == cells.size()) {
      sum += LaurentPoly::q(exponent);
      return;
    }
    auto [r, c] = cells[k];
    long lo = 1;
    if (auto it = fill.find({r, c - 1}); it != fill.end()) lo = std::max(lo, it->second);
    if (auto it = fill.find({r - 1, c}); it != fill.end()) lo = std::max(lo, it->second + 1);
    for (long x = lo; x <= a; ++x) {
      fill[{r, c}] = x;
      rec(k + 1, exponent + x - 1);
    }
    fill.erase({r, c});
  };
  rec(0, 0);
  return sum;
}

std::vector<std::pair<Partition, Partition>> small_skew_shapes(long max_size) {
  std::vector<std::pair<Partition, Partition>> out;
  for (long n = 1; n <= max_size; ++n)
    for (const auto& lambda : partitions_of(n)) {
      out.push_back({lambda, Partition{}});
      for (long m = 1; m < n; ++m)
        for (const auto& mu : partitions_of(m))
          if (lambda.contains(mu)) out.push_back({lambda, mu});
    }
  return out;
}

// ---- Hexagons --------------------------------------------------------------

TEST(Hexagon, UnitHexagonIsASixCycle) {
  EmbeddedGraph g = build_hexagon_graph(1, 1, 1);
  EXPECT_EQ(g.vertices.size(), 6u);
  EXPECT_EQ(g.edges.size(), 6u);
  EXPECT_EQ(matching_count(g), 2);
}

TEST(Hexagon, CountsMatchMacMahonAtQEqualsOne) {
  for (long a = 1; a <= 3; ++a)
    for (long b = 1; b <= 3; ++b)
      for (long c = 1; c <= 3; ++c) {
        LaurentPoly gf = plane_partition_generating_function(a, b, c, G::Trivial, WeightMode::None);
        EXPECT_EQ(matching_count(build_hexagon_graph(a, b, c)), specialize_integer(gf, 1)) << a << b << c;
      }
}

TEST(Hexagon, VerticesAreBalancedAndColoredByOrientation) {
  CellGraph z = hexagon_cells(2, 3, 4);
  size_t up = 0;
  for (size_t v = 0; v < z.cells.size(); ++v) {
    up += z.cells[v].up;
    EXPECT_EQ(z.graph.vertices[v].color, z.cells[v].up ? Color::Black : Color::White);
    EXPECT_EQ(z.graph.vertices[v].label, z.cells[v].label());
  }
  EXPECT_EQ(2 * up, z.cells.size());
  EXPECT_EQ(z.cells.size(), static_cast<size_t>(2 * (2 * 3 + 3 * 4 + 4 * 2)));
  EXPECT_TRUE(validate_embedding(z.graph).ok);
}

TEST(Hexagon, DeterminantAndCokernelOfTwoCube) {
  FamilyMatrix fm = family_matrix(FamilySpec::ppbox(2, 2, 2));
  ASSERT_EQ(fm.mode, MatrixMode::Bipartite);
  MZ m = specialize(fm.matrix, 1);
  EXPECT_EQ(abs(determinant(m)), 20);
  EXPECT_EQ(cokernel_of(m).str(), "Z/2 + Z/10");
}

TEST(Hexagon, CubeWeightsGiveThePlanePartitionGeneratingFunction) {
  for (long a = 1; a <= 3; ++a)
    for (long b = 1; b <= 3; ++b)
      for (long c = 1; c <= 3; ++c) {
        FamilySpec s = FamilySpec::ppbox(a, b, c, WeightMode::Cube);
        LaurentPoly w = matching_weight(build_family_graph(s));
        LaurentPoly gf = plane_partition_generating_function(a, b, c, G::Trivial, WeightMode::Cube);
        EXPECT_EQ(w.unit_normalized(), gf.unit_normalized()) << s.str();
      }
}

TEST(Hexagon, UnitBoxGeneratingFunction) {
  LaurentPoly w = matching_weight(build_family_graph(FamilySpec::ppbox(1, 1, 1, WeightMode::Cube)));
  EXPECT_EQ(w.unit_normalized(), LaurentPoly(1) + LaurentPoly::q(1));
}

TEST(Hexagon, WeightedDeterminantOfTwoCube) {
  // The volume generating function of plane partitions in a 2 x 2 x 2 box is
  // (1 + q^2)^2 (1 + q + q^2 + q^3 + q^4).
  FamilyMatrix fm = family_matrix(FamilySpec::ppbox(2, 2, 2, WeightMode::Cube));
  LaurentPoly five = q_integer(5);
  LaurentPoly phi4 = LaurentPoly(1) + LaurentPoly::q(2);
  EXPECT_EQ(family_det(fm).unit_normalized(), (phi4 * phi4 * five).unit_normalized());
  StableInvariants inv = stable_invariants_rational(fm.matrix);
  ASSERT_EQ(inv.factors.size(), 2u);
  EXPECT_EQ(inv.factors[0], phi4.str());
  EXPECT_EQ(inv.factors[1], (phi4 * five).str());
}

TEST(Hexagon, WeightsSpecializeToTheUnweightedGraph) {
  for (long k = 1; k <= 3; ++k) {
    FamilySpec plain = FamilySpec::ppbox(k, k, k + 1);
    FamilySpec weighted = FamilySpec::ppbox(k, k, k + 1, WeightMode::Cube);
    EXPECT_EQ(specialize(family_matrix(weighted).matrix, 1).entries(),
              specialize(family_matrix(plain).matrix, 1).entries());
  }
}

TEST(Hexagon, ApplyQWeightsMatchesTheWeightedBuild) {
  FamilySpec s = FamilySpec::quotient(G::Tau, 2, 2, 2);
  EmbeddedGraph plain = build_family_graph(s);
  EmbeddedGraph reweighted = apply_q_weights(plain, s, WeightMode::Orbit);
  s.weights = WeightMode::Orbit;
  EmbeddedGraph direct = build_family_graph(s);
  ASSERT_EQ(reweighted.edges.size(), direct.edges.size());
  for (size_t e = 0; e < direct.edges.size(); ++e) EXPECT_EQ(reweighted.edges[e].weight, direct.edges[e].weight);
}

// ---- Symmetry quotients ----------------------------------------------------

TEST(Quotient, RhoOfTwoCubeHasEightVertices) {
  EmbeddedGraph q = symmetry_quotient(FamilySpec::quotient(G::Rho, 2, 2, 2));
  EXPECT_EQ(q.vertices.size(), 8u);
  EXPECT_EQ(matching_count(q), 5);
}

TEST(Quotient, KappaWithTwoEvenDimensionsKeepsTheCentralVertices) {
  FamilySpec s = FamilySpec::quotient(G::Kappa, 2, 2, 3);
  EmbeddedGraph z = build_hexagon_graph(2, 2, 3);
  EmbeddedGraph q = symmetry_quotient(s);
  // Deleting e but not its vertices and halving keeps half of all vertices.
  EXPECT_EQ(q.vertices.size(), z.vertices.size() / 2);
  EXPECT_EQ(q.edges.size(), (z.edges.size() - 1) / 2);
}

TEST(Quotient, KappaWithOneEvenDimensionDropsTheCentralVertices) {
  EmbeddedGraph z = build_hexagon_graph(1, 2, 3);
  EmbeddedGraph q = symmetry_quotient(FamilySpec::quotient(G::Kappa, 1, 2, 3));
  EXPECT_EQ(q.vertices.size(), (z.vertices.size() - 2) / 2);
}

TEST(Quotient, TauOfTwoCubeHasOneOddPolygamousVertex) {
  EmbeddedGraph q = symmetry_quotient(FamilySpec::quotient(G::Tau, 2, 2, 2));
  ASSERT_EQ(polygamous_count(q), 1u);
  size_t monogamous = q.vertices.size() - 1;
  bool odd = false;
  for (const auto& v : q.vertices) odd = odd || v.kind == VertexKind::OddPolygamous;
  // The polygamous vertex absorbs an odd number of edges exactly when the
  // monogamous vertices alone have odd parity.
  EXPECT_EQ(odd, monogamous % 2 == 1);
  EXPECT_EQ(matching_count(q), 10);
}

TEST(Quotient, WrongParityTauHasNoMatchings) {
  EmbeddedGraph q = symmetry_quotient(FamilySpec::quotient(G::Tau, 2, 2, 2));
  EmbeddedGraph w = impossible_variant(FamilySpec::impossible(G::Tau, 2, 2, 2));
  ASSERT_EQ(q.vertices.size(), w.vertices.size());
  ASSERT_EQ(q.edges.size(), w.edges.size());
  for (size_t v = 0; v < q.vertices.size(); ++v)
    if (q.vertices[v].kind != VertexKind::Monogamous) EXPECT_NE(q.vertices[v].kind, w.vertices[v].kind);
  EXPECT_EQ(matching_count(w), 0);
}

TEST(Quotient, KappaOfUnitHexagonIsOdd) {
  FamilySpec s = FamilySpec::impossible(G::Kappa, 1, 1, 1);
  EmbeddedGraph q = impossible_variant(s);
  EXPECT_EQ(q.vertices.size() % 2, 1u);
  FamilyMatrix fm = family_matrix(s);
  EXPECT_GE(cokernel_of(specialize(fm.matrix, 1)).free_rank, 1u);
  EXPECT_THROW(symmetry_quotient(FamilySpec::quotient(G::Kappa, 1, 1, 1)), std::domain_error);
}

TEST(Quotient, CountsEqualInvariantMatchingsOfTheFullHexagon) {
  const G groups[] = {G::Rho,      G::Kappa,    G::Tau,         G::KappaTau, G::RhoKappa,
                      G::RhoKappaTau, G::TauKappa, G::TauRhoKappa, G::TauRho};
  size_t checked = 0;
  for (long a = 1; a <= 3; ++a)
    for (long b = 1; b <= 3; ++b)
      for (long c = 1; c <= 3; ++c)
        for (G g : groups) {
          FamilySpec s = FamilySpec::quotient(g, a, b, c);
          EmbeddedGraph q;
          try {
            q = symmetry_quotient(s);
          } catch (const std::domain_error&) {
            continue;
          }
          EXPECT_EQ(matching_count(q), count_symmetric_matchings(s, kGuard)) << s.str();
          ++checked;
        }
  EXPECT_GE(checked, 40u);
}

TEST(Quotient, DeterminantsAreTheQuotientCounts) {
  for (G g : {G::Rho, G::Kappa, G::Tau, G::KappaTau, G::TauKappa, G::TauRho}) {
    FamilySpec s = FamilySpec::quotient(g, 2, 2, 2);
    FamilyMatrix fm = family_matrix(s);
    EXPECT_EQ(normalize_unit(specialize_integer(family_det(fm), 1)), matching_count(build_family_graph(s))) << s.str();
  }
}

TEST(Quotient, CubeWeightsGiveSymmetricGeneratingFunctions) {
  const G groups[] = {G::Rho, G::Kappa, G::Tau, G::KappaTau, G::RhoKappa, G::TauKappa, G::TauRho};
  for (long a = 1; a <= 3; ++a)
    for (long b = 1; b <= 3; ++b)
      for (long c = 1; c <= 3; ++c)
        for (G g : groups) {
          FamilySpec s = FamilySpec::quotient(g, a, b, c, WeightMode::Cube);
          EmbeddedGraph q;
          try {
            q = build_family_graph(s);
          } catch (const std::domain_error&) {
            continue;
          }
          LaurentPoly gf = plane_partition_generating_function(a, b, c, g, WeightMode::Cube);
          EXPECT_EQ(matching_weight(q).unit_normalized(), gf.unit_normalized()) << s.str();
        }
}

TEST(Quotient, OrbitWeightsCountCubeOrbitsForTau) {
  for (long a = 1; a <= 3; ++a)
    for (long b = 1; b <= 3; ++b) {
      FamilySpec s = FamilySpec::quotient(G::Tau, a, b, b, WeightMode::Orbit);
      LaurentPoly gf = plane_partition_generating_function(a, b, b, G::Tau, WeightMode::Orbit);
      EXPECT_EQ(matching_weight(build_family_graph(s)).unit_normalized(), gf.unit_normalized()) << s.str();
    }
}

TEST(Quotient, RejectsIncompatibleDimensions) {
  EXPECT_THROW(symmetry_quotient(FamilySpec::quotient(G::Rho, 1, 2, 2)), std::domain_error);
  EXPECT_THROW(symmetry_quotient(FamilySpec::quotient(G::Tau, 2, 1, 2)), std::domain_error);
  EXPECT_THROW(symmetry_quotient(FamilySpec::quotient(G::KappaTau, 3, 2, 2)), std::domain_error);
}

// ---- Hexagon minus a triangle -----------------------------------------------

TEST(HexMinusTriangle, BalancedCase) {
  CellGraph z = hexagon_minus_triangle_cells(2, 2, 2, 1, 1);
  // Sides 2, 3, 2, 3, 2, 3 enclose 37 unit triangles; one is removed.
  EXPECT_EQ(z.cells.size(), 36u);
  size_t up = 0;
  for (const auto& c : z.cells) up += c.up;
  EXPECT_EQ(2 * up, z.cells.size());
  EXPECT_TRUE(validate_embedding(z.graph).ok);
  FamilyMatrix fm = family_matrix(FamilySpec::hex_minus_triangle(2, 2, 2, 1, 1));
  EXPECT_EQ(abs(determinant(specialize(fm.matrix, 1))), matching_count(z.graph));
  EXPECT_GT(matching_count(z.graph), 0);
}

TEST(HexMinusTriangle, ZeroTriangleIsTheHexagon) {
  EXPECT_EQ(hexagon_minus_triangle_cells(2, 2, 2, 0, 0).cells, hexagon_cells(2, 2, 2).cells);
}

TEST(HexMinusTriangle, UnbalancedVariantsHaveNoMatchings) {
  for (long e : {0L, 2L, -1L}) {
    CellGraph z = hexagon_minus_triangle_cells(2, 2, 2, 1, e);
    size_t up = 0;
    for (const auto& c : z.cells) up += c.up;
    EXPECT_NE(2 * up, z.cells.size()) << e;
    EXPECT_EQ(matching_count(z.graph), 0) << e;
  }
  EXPECT_THROW(impossible_variant(FamilySpec::hex_minus_triangle(2, 2, 2, 1, 1)), std::domain_error);
}

TEST(HexMinusTriangle, UpsideDownTriangleRemovesUpCells) {
  CellGraph full = hexagon_minus_triangle_cells(2, 2, 2, 1, 0);
  CellGraph down = hexagon_minus_triangle_cells(2, 2, 2, 1, 1);
  CellGraph up = hexagon_minus_triangle_cells(2, 2, 2, 1, -1);
  auto count_up = [](const CellGraph& z) {
    size_t k = 0;
    for (const auto& c : z.cells) k += c.up;
    return k;
  };
  EXPECT_EQ(count_up(down), count_up(full));
  EXPECT_EQ(count_up(up) + 1, count_up(full));
}

// ---- Skew shapes -----------------------------------------------------------

TEST(Skew, MatchingWeightIsTheSkewSchurFunction) {
  for (const auto& [lambda, mu] : small_skew_shapes(4))
    for (long a = 1; a <= 3; ++a) {
      LaurentPoly w = matching_weight(build_skew_graph(lambda, mu, a));
      LaurentPoly oracle = skew_schur_oracle(lambda, mu, a);
      EXPECT_EQ(w.unit_normalized(), oracle.unit_normalized()) << lambda.str() << "/" << mu.str() << " a=" << a;
    }
}

TEST(Skew, SingleCellInTwoVariables) {
  LaurentPoly w = matching_weight(build_skew_graph(Partition{1}, Partition{}, 2));
  EXPECT_EQ(w.unit_normalized(), LaurentPoly(1) + LaurentPoly::q(1));
}

TEST(Skew, ExampleRegionWithNotches) {
  CellGraph z = skew_cells(Partition{2, 2}, Partition{1}, 4);
  // Four rows of width 4, two notches below and two above.
  EXPECT_EQ(z.cells.size(), static_cast<size_t>(4 * 2 * 4 - 4));
  EXPECT_TRUE(validate_embedding(z.graph).ok);
  EXPECT_EQ(matching_weight(z.graph).unit_normalized(),
            skew_schur_oracle(Partition{2, 2}, Partition{1}, 4).unit_normalized());
}

TEST(Skew, HookMatchesJacobiTrudi) {
  LaurentPoly w = matching_weight(build_skew_graph(Partition{2, 1}, Partition{}, 3));
  EXPECT_EQ(w.unit_normalized(), determinant(jacobi_trudi(Partition{2, 1}, Partition{}, 3)).unit_normalized());
}

TEST(Skew, JacobiTrudiAndDualAgree) {
  for (const auto& [lambda, mu] : small_skew_shapes(5))
    for (long a = 1; a <= 4; ++a) {
      LaurentPoly j = determinant(jacobi_trudi(lambda, mu, a));
      LaurentPoly d = determinant(jacobi_trudi(lambda, mu, a, true));
      EXPECT_EQ(j, d) << lambda.str() << "/" << mu.str() << " a=" << a;
      EXPECT_EQ(j, skew_schur_oracle(lambda, mu, a)) << lambda.str() << "/" << mu.str() << " a=" << a;
    }
}

TEST(Skew, ElementaryAndCompleteSpecializations) {
  EXPECT_EQ(complete_homogeneous_q(0, 3), LaurentPoly(1));
  EXPECT_EQ(complete_homogeneous_q(-1, 3), LaurentPoly(0));
  EXPECT_EQ(complete_homogeneous_q(1, 3), q_integer(3));
  EXPECT_EQ(elementary_q(4, 3), LaurentPoly(0));
  EXPECT_EQ(elementary_q(3, 3), LaurentPoly::q(3));
  EXPECT_EQ(elementary_q(1, 3), q_integer(3));
}

TEST(Skew, RejectsNonContainedShapes) {
  EXPECT_THROW(build_skew_graph(Partition{2}, Partition{1, 1}, 2), std::domain_error);
  EXPECT_THROW(jacobi_trudi(Partition{1}, Partition{2}, 2), std::domain_error);
}

// ---- Gessel-Viennot graphs -------------------------------------------------

TEST(GesselViennot, GridMatrixIsTheTransposedJacobiTrudiMatrix) {
  for (const auto& [lambda, mu] : small_skew_shapes(4))
    for (long a = 1; a <= 3; ++a)
      EXPECT_EQ(gv_matrix(skew_gv_graph(lambda, mu, a)).transpose().entries(),
                jacobi_trudi(lambda, mu, a).entries())
          << lambda.str() << "/" << mu.str() << " a=" << a;
}

TEST(GesselViennot, ResolutionIsFlatAndStablyEquivalent) {
  for (const auto& [lambda, mu] : small_skew_shapes(4))
    for (long a = 2; a <= 3; ++a) {
      GVGraph x = skew_gv_graph(lambda, mu, a);
      EmbeddedGraph r = transit_free_resolution(x);
      EXPECT_TRUE(verify_flatness(r, FlatnessRule::Percus).flat) << lambda.str() << "/" << mu.str();
      Matrix<LaurentPoly> m = adjacency_matrix(r, MatrixMode::Bipartite);
      Matrix<LaurentPoly> v = gv_matrix(x);
      ASSERT_TRUE(m.square());
      EXPECT_EQ(determinant(m).unit_normalized(), determinant(v).unit_normalized());
      EXPECT_EQ(stable_invariants_rational(m), stable_invariants_rational(v)) << lambda.str() << "/" << mu.str();
    }
}

TEST(GesselViennot, SingleRowGridIsNotSegregated) {
  EXPECT_THROW(transit_free_resolution(skew_gv_graph(Partition{2, 1}, Partition{1}, 1)), std::domain_error);
}

TEST(GesselViennot, RejectsCycles) {
  GVGraph g;
  size_t u = g.add_vertex(0, 0), v = g.add_vertex(1, 0);
  g.add_edge(u, v);
  g.add_edge(v, u);
  EXPECT_THROW(topological_order(g), std::domain_error);
}

TEST(GesselViennot, DelannoyGraphMatrix) {
  for (long n = 1; n <= 5; ++n) EXPECT_EQ(gv_matrix(delannoy_gv_graph(n)).entries(), lift(delannoy_matrix(n + 1)).entries());
}

TEST(GesselViennot, DelannoyResolutionIsTheAztecDiamond) {
  for (long n = 1; n <= 4; ++n) {
    EmbeddedGraph r = transit_free_resolution(delannoy_gv_graph(n));
    EmbeddedGraph az = build_aztec_graph(n);
    EXPECT_EQ(r.vertices.size(), az.vertices.size());
    EXPECT_EQ(r.edges.size(), az.edges.size());
    EXPECT_TRUE(verify_flatness(r, FlatnessRule::Percus).flat);
    EXPECT_EQ(matching_count(r), BigInteger(1) << static_cast<unsigned long>(n * (n + 1) / 2));
    EXPECT_EQ(stable_invariants(specialize(adjacency_matrix(r, MatrixMode::Bipartite), 1)),
              stable_invariants(aztec_matrix_closed_form(n)));
  }
}

// ---- Aztec diamonds --------------------------------------------------------

TEST(Aztec, SmallDiamonds) {
  EmbeddedGraph one = build_aztec_graph(1);
  EXPECT_EQ(one.vertices.size(), 4u);
  EXPECT_EQ(one.edges.size(), 4u);
  EXPECT_EQ(matching_count(one), 2);
  EXPECT_EQ(matching_count(build_aztec_graph(2)), 8);
  EXPECT_EQ(build_aztec_graph(3).vertices.size(), 24u);
  EXPECT_THROW(build_aztec_graph(0), std::domain_error);
}

TEST(Aztec, MatchingCountsArePowersOfTwo) {
  for (long n = 1; n <= 4; ++n)
    EXPECT_EQ(matching_count(build_aztec_graph(n)), BigInteger(1) << static_cast<unsigned long>(n * (n + 1) / 2));
}

TEST(Aztec, ClosedFormInvariants) {
  for (long n = 1; n <= 6; ++n) {
    MZ m = aztec_matrix_closed_form(n);
    EXPECT_EQ(abs(determinant(m)), BigInteger(1) << static_cast<unsigned long>(n * (n + 1) / 2));
    Cokernel coker = cokernel_of(m);
    ASSERT_EQ(coker.torsion.size(), static_cast<size_t>(n));
    for (long k = 1; k <= n; ++k) EXPECT_EQ(coker.torsion[static_cast<size_t>(k - 1)], BigInteger(1) << static_cast<unsigned long>(k));
  }
}

TEST(Aztec, ClosedFormIsStablyTheGraphMatrix) {
  for (long n = 1; n <= 4; ++n) {
    MZ g = specialize(adjacency_matrix(kasteleyn_percus_sign(build_aztec_graph(n)), MatrixMode::Bipartite), 1);
    EXPECT_EQ(stable_invariants(g), stable_invariants(aztec_matrix_closed_form(n)));
  }
}

TEST(Aztec, BinomialShiftIdentities) {
  for (long n = 1; n <= 6; ++n) {
    MZ b = binomial_matrix(n), b1 = binomial_matrix(n + 1);
    EXPECT_EQ(mul(b, binomial_matrix_inverse(n)).entries(), identity(static_cast<size_t>(n)).entries());
    // B(n) L = L B(n+1) and B(n) (L + R) = R B(n+1) by Pascal's rule.
    MZ l = shift_left(n), r = shift_right(n);
    EXPECT_EQ(mul(b, l).entries(), mul(l, b1).entries());
    MZ lr = l;
    for (size_t i = 0; i < lr.rows(); ++i)
      for (size_t j = 0; j < lr.cols(); ++j) lr(i, j) += r(i, j);
    EXPECT_EQ(mul(b, lr).entries(), mul(r, b1).entries());
  }
}

TEST(Aztec, ReductionIsUnimodular) {
  for (long n = 1; n <= 4; ++n) {
    AztecReduction red = aztec_reduction(n);
    EXPECT_EQ(abs(determinant(red.p)), 1);
    EXPECT_EQ(abs(determinant(red.q)), 1);
    MZ l = shift_left(n), r = shift_right(n);
    MZ want = kronecker(r, r.transpose());
    MZ ll = kronecker(l, l.transpose());
    for (size_t i = 0; i < want.rows(); ++i)
      for (size_t j = 0; j < want.cols(); ++j) want(i, j) -= 2 * ll(i, j);
    EXPECT_EQ(red.reduced.entries(), want.entries());
  }
}

TEST(Aztec, ReducedMatrixSplitsIntoBlocks) {
  for (long n = 1; n <= 5; ++n) {
    std::vector<AztecBlock> blocks = aztec_blocks(n);
    ASSERT_EQ(blocks.size(), static_cast<size_t>(2 * n));
    size_t covered = 0;
    for (size_t k = 0; k < blocks.size(); ++k) {
      const AztecBlock& blk = blocks[k];
      EXPECT_EQ(blk.is_y, k >= static_cast<size_t>(n));
      EXPECT_EQ(blk.k, static_cast<long>(k % static_cast<size_t>(n)) + 1);
      covered += blk.rows.size();
      MZ m = blk.is_y ? aztec_block_y(blk.k) : aztec_block_x(blk.k);
      Cokernel c = cokernel_of(m);
      if (blk.is_y)
        EXPECT_EQ(c.str(), "Z/" + BigInteger(BigInteger(1) << static_cast<unsigned long>(blk.k)).get_str());
      else
        EXPECT_EQ(c.str(), "0");
    }
    EXPECT_EQ(covered, static_cast<size_t>(n * (n + 1)));
  }
}

// ---- Delannoy matrices -----------------------------------------------------

TEST(Delannoy, RecurrenceMatchesClosedForm) {
  for (long n = 1; n <= 8; ++n) EXPECT_EQ(delannoy_matrix(n).entries(), delannoy_closed_form(n).entries());
  MZ v = delannoy_matrix(4);
  EXPECT_EQ(v(3, 3), 63);
  EXPECT_EQ(v(2, 3), 25);
}

TEST(Delannoy, FactorsThroughBinomialMatrices) {
  for (long n = 1; n <= 7; ++n) {
    MZ b = binomial_matrix(n);
    EXPECT_EQ(mul(mul(b, delannoy_diagonal(n)), b.transpose()).entries(), delannoy_matrix(n).entries());
  }
}

TEST(Delannoy, SmithFormIsPowersOfTwo) {
  for (long n = 1; n <= 7; ++n) {
    Cokernel c = cokernel_of(delannoy_matrix(n));
    ASSERT_EQ(c.torsion.size(), static_cast<size_t>(n - 1));
    for (long k = 1; k < n; ++k) EXPECT_EQ(c.torsion[static_cast<size_t>(k - 1)], BigInteger(1) << static_cast<unsigned long>(k));
  }
}

// ---- Family specs ----------------------------------------------------------

TEST(FamilySpec, JsonRoundTrip) {
  std::vector<FamilySpec> specs = {
      FamilySpec::ppbox(2, 2, 3, WeightMode::Cube),  FamilySpec::quotient(G::Tau, 2, 2, 2, WeightMode::Orbit),
      FamilySpec::impossible(G::Kappa, 1, 1, 1),     FamilySpec::hex_minus_triangle(2, 2, 2, 1, -1),
      FamilySpec::skew(Partition{2, 2}, Partition{1}, 4), FamilySpec::aztec(3),
      FamilySpec::delannoy(4),
  };
  for (const auto& s : specs) {
    FamilySpec t = family_spec_from_json(family_spec_to_json(s));
    EXPECT_EQ(t.str(), s.str());
    EXPECT_EQ(family_spec_to_json(t), family_spec_to_json(s));
  }
}

TEST(FamilySpec, NamesRoundTrip) {
  for (G g : {G::Trivial, G::Rho, G::Kappa, G::Tau, G::KappaTau, G::RhoKappa, G::RhoKappaTau, G::TauKappa,
              G::TauRhoKappa, G::TauRho})
    EXPECT_EQ(parse_group(group_name(g)), g);
  for (Variant v : {Variant::PPBox, Variant::PPBoxQuotient, Variant::PPBoxImpossible, Variant::HexMinusTriangle,
                    Variant::SkewShape, Variant::Aztec, Variant::Delannoy})
    EXPECT_EQ(parse_variant(variant_name(v)), v);
  for (WeightMode m : {WeightMode::None, WeightMode::Cube, WeightMode::Orbit})
    EXPECT_EQ(parse_weight_mode(weight_mode_name(m)), m);
  EXPECT_THROW(parse_group("sigma"), std::invalid_argument);
}

TEST(FamilySpec, ValidationErrors) {
  EXPECT_THROW(FamilySpec::ppbox(0, 1, 1).validate(), std::domain_error);
  EXPECT_THROW(FamilySpec::aztec(0).validate(), std::domain_error);
  EXPECT_THROW(FamilySpec::skew(Partition{1}, Partition{2}, 2).validate(), std::domain_error);
  EXPECT_THROW(FamilySpec::quotient(G::Rho, 1, 2, 3).validate(), std::domain_error);
  EXPECT_THROW(family_spec_from_json("{\"variant\": \"ppbox\", \"a\": \"x\"}"), std::invalid_argument);
  EXPECT_THROW(build_family_graph(FamilySpec::delannoy(2)), std::domain_error);
}

TEST(FamilySpec, PartitionParsing) {
  Partition p = Partition::parse("3,1,1");
  EXPECT_EQ(p.parts(), (std::vector<long>{3, 1, 1}));
  EXPECT_EQ(p.conjugate().parts(), (std::vector<long>{3, 1, 1}));
  EXPECT_EQ(Partition::parse("").length(), 0u);
  EXPECT_THROW(Partition::parse("1,2"), std::domain_error);
  EXPECT_THROW(Partition::parse("1,x"), std::invalid_argument);
  EXPECT_EQ(partitions_of(5).size(), 7u);
}

TEST(FamilySpec, DelannoyMatrixHasNoGraph) {
  FamilyMatrix fm = family_matrix(FamilySpec::delannoy(3));
  EXPECT_FALSE(fm.has_graph);
  EXPECT_EQ(specialize(fm.matrix, 1).entries(), delannoy_matrix(3).entries());
}

TEST(LaurentSmithOnFamilies, GrowthCapStopsCyclingReduction) {
  // The 3x3x3 box leaves a 2x2 block the heuristic cannot close; without the
  // span cap it runs to the step limit with ever larger entries.
  auto m = family_matrix(FamilySpec::ppbox(3, 3, 3, WeightMode::Cube)).matrix;
  auto a = laurent_smith_attempt(m, kDefaultLaurentStepLimit, false);
  EXPECT_EQ(a.outcome, NormalFormAttempt::Outcome::Inconclusive);
  EXPECT_EQ(a.message, "entry growth limit exceeded");
  EXPECT_LT(a.steps, 500u);  // both orientations
}

TEST(LaurentSmithOnFamilies, TransposeRetryMapsTransformsBack) {
  // The 2x3x2 box cycles in the original orientation and closes transposed.
  auto m = family_matrix(FamilySpec::ppbox(2, 3, 2, WeightMode::Cube)).matrix;
  auto a = laurent_smith_attempt(m);
  ASSERT_TRUE(a.success()) << a.message;
  std::string why;
  EXPECT_TRUE(verify_smith(m, a.form, &why)) << why;
  LaurentPoly prod(1);
  for (const auto& d : a.form.diagonal) prod *= d;
  EXPECT_EQ(prod.unit_normalized(), determinant(m).unit_normalized());
}

TEST(LaurentSmithOnFamilies, GrowthCapKeepsSmallBoxes) {
  for (long c = 1; c <= 3; ++c) {
    auto m = family_matrix(FamilySpec::ppbox(1, 2, c, WeightMode::Cube)).matrix;
    auto a = laurent_smith_attempt(m, kDefaultLaurentStepLimit, false);
    ASSERT_TRUE(a.success()) << c;
    LaurentPoly prod(1);
    for (const auto& d : a.form.diagonal) prod *= d;
    EXPECT_EQ(prod.unit_normalized(), determinant(m).unit_normalized()) << c;
  }
}

}  // namespace
}  // namespace kast
