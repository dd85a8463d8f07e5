#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "kast/bigint.hpp"
#include "kast/graph.hpp"
#include "kast/kasteleyn.hpp"

namespace kast {

inline constexpr size_t kDefaultCountGuard = 64;
inline constexpr size_t kDefaultListGuard = 28;

// Count guard, overridden by KASTELEYN_ORACLE_GUARD when set to a positive integer.
size_t oracle_count_guard();

struct Matching {
  std::vector<size_t> edges;  // ascending edge ids
  LaurentPoly weight;
};

struct MatchingSet {
  BigInteger count;
  LaurentPoly total_weight;
  bool listed = false;
  std::vector<Matching> matchings;
};

struct EnumerationOptions {
  bool list = false;
  size_t count_guard = 0;  // 0: oracle_count_guard()
  size_t list_guard = kDefaultListGuard;
};

// A matching uses each monogamous vertex once, each odd-polygamous vertex an
// odd number of times and each even-polygamous vertex an even number of
// times. Self-loops never participate. Throws std::length_error over the guard.
MatchingSet enumerate_matchings(const EmbeddedGraph& g, const EnumerationOptions& opt = {});

// Visits every matching (edge ids ascending). Returning false stops the walk.
void for_each_matching(const EmbeddedGraph& g,
                       const std::function<bool(const std::vector<size_t>&)>& visit,
                       size_t guard = 0);

// Sign of the matching's term in det M (bipartite) or Pf A (alternating),
// including the edge decorations. Requires a monogamous matching.
int matching_sign(const EmbeddedGraph& g, const std::vector<size_t>& edges, MatrixMode mode);

// Sign of a permutation given as images of 0..n-1.
int permutation_sign(const std::vector<size_t>& perm);

}  // namespace kast
