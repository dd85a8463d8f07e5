#include "kast/matching.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace kast {
namespace {

class Enumerator {
 public:
  Enumerator(const EmbeddedGraph& g, const std::function<bool(const std::vector<size_t>&)>& visit)
      : g_(g), visit_(visit), n_(g.vertices.size()), load_(n_, 0), incident_(n_) {
    for (size_t e = 0; e < g.edges.size(); ++e) {
      if (g.is_loop(e)) continue;
      incident_[g.edges[e].u].push_back(e);
      incident_[g.edges[e].v].push_back(e);
      if (!mono(g.edges[e].u) && !mono(g.edges[e].v)) poly_edges_.push_back(e);
    }
    last_use_.assign(n_, -1);
    for (size_t i = 0; i < poly_edges_.size(); ++i) {
      last_use_[g.edges[poly_edges_[i]].u] = static_cast<long>(i);
      last_use_[g.edges[poly_edges_[i]].v] = static_cast<long>(i);
    }
  }

  void run() { branch_monogamous(); }

 private:
  bool mono(size_t v) const { return g_.vertices[v].kind == VertexKind::Monogamous; }
  int target(size_t v) const { return g_.vertices[v].kind == VertexKind::OddPolygamous ? 1 : 0; }
  bool usable(size_t e) const {
    const Edge& ed = g_.edges[e];
    return (!mono(ed.u) || load_[ed.u] == 0) && (!mono(ed.v) || load_[ed.v] == 0);
  }
  void take(size_t e, int d) {
    load_[g_.edges[e].u] += d;
    load_[g_.edges[e].v] += d;
    if (d > 0) chosen_.push_back(e);
    else chosen_.pop_back();
  }

  // Returns false once the visitor asks to stop.
  bool branch_monogamous() {
    size_t best = n_, best_options = 0;
    for (size_t v = 0; v < n_; ++v) {
      if (!mono(v) || load_[v] != 0) continue;
      size_t options = 0;
      for (size_t e : incident_[v]) options += usable(e);
      if (best == n_ || options < best_options) {
        best = v;
        best_options = options;
        if (options == 0) return true;
      }
    }
    if (best == n_) return branch_polygamous(0);
    for (size_t e : incident_[best]) {
      if (!usable(e)) continue;
      take(e, 1);
      bool go = branch_monogamous();
      take(e, -1);
      if (!go) return false;
    }
    return true;
  }

  bool parity_closed(size_t i) const {
    for (size_t v : {g_.edges[poly_edges_[i]].u, g_.edges[poly_edges_[i]].v})
      if (last_use_[v] == static_cast<long>(i) && load_[v] % 2 != target(v)) return false;
    return true;
  }

  bool branch_polygamous(size_t i) {
    if (i == poly_edges_.size()) {
      for (size_t v = 0; v < n_; ++v)
        if (!mono(v) && last_use_[v] < 0 && load_[v] % 2 != target(v)) return true;
      std::vector<size_t> sorted = chosen_;
      std::sort(sorted.begin(), sorted.end());
      return visit_(sorted);
    }
    size_t e = poly_edges_[i];
    for (int use = 0; use < 2; ++use) {
      if (use) take(e, 1);
      bool go = !parity_closed(i) || branch_polygamous(i + 1);
      if (use) take(e, -1);
      if (!go) return false;
    }
    return true;
  }

  const EmbeddedGraph& g_;
  const std::function<bool(const std::vector<size_t>&)>& visit_;
  size_t n_;
  std::vector<int> load_;
  std::vector<std::vector<size_t>> incident_;
  std::vector<size_t> poly_edges_;
  std::vector<long> last_use_;
  std::vector<size_t> chosen_;
};

void check_guard(const EmbeddedGraph& g, size_t guard, const char* what) {
  if (g.vertices.size() > guard)
    throw std::length_error(std::string(what) + ": " + std::to_string(g.vertices.size()) +
                            " vertices exceeds the guard of " + std::to_string(guard));
}

}  // namespace

size_t oracle_count_guard() {
  if (const char* env = std::getenv("KASTELEYN_ORACLE_GUARD")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultCountGuard;
}

void for_each_matching(const EmbeddedGraph& g,
                       const std::function<bool(const std::vector<size_t>&)>& visit, size_t guard) {
  check_guard(g, guard ? guard : oracle_count_guard(), "matching enumeration");
  Enumerator(g, visit).run();
}

MatchingSet enumerate_matchings(const EmbeddedGraph& g, const EnumerationOptions& opt) {
  size_t guard = opt.count_guard ? opt.count_guard : oracle_count_guard();
  if (opt.list) guard = std::min(guard, opt.list_guard);
  MatchingSet out;
  out.listed = opt.list;
  unsigned long long count = 0;
  for_each_matching(
      g,
      [&](const std::vector<size_t>& edges) {
        LaurentPoly w = 1;
        for (size_t e : edges) w *= g.edges[e].weight;
        out.total_weight += w;
        ++count;
        if (opt.list) out.matchings.push_back({edges, w});
        return true;
      },
      guard);
  out.count = BigInteger(static_cast<unsigned long>(count));
  return out;
}

int permutation_sign(const std::vector<size_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    size_t len = 0;
    for (size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

int matching_sign(const EmbeddedGraph& g, const std::vector<size_t>& edges, MatrixMode mode) {
  if (mode == MatrixMode::Bipartite) {
    auto bl = black_vertices(g), wh = white_vertices(g);
    std::vector<size_t> index(g.vertices.size());
    for (size_t i = 0; i < bl.size(); ++i) index[bl[i]] = i;
    for (size_t j = 0; j < wh.size(); ++j) index[wh[j]] = j;
    std::vector<size_t> perm(bl.size());
    int sign = 1;
    for (size_t e : edges) {
      const Edge& ed = g.edges[e];
      bool u_black = g.vertices[ed.u].color == Color::Black;
      perm[index[u_black ? ed.u : ed.v]] = index[u_black ? ed.v : ed.u];
      if (ed.sign < 0) sign = -sign;
    }
    return sign * permutation_sign(perm);
  }
  std::vector<size_t> word;
  int sign = 1;
  for (size_t e : edges) {
    const Edge& ed = g.edges[e];
    size_t i = std::min(ed.u, ed.v), j = std::max(ed.u, ed.v);
    bool i_to_j = (ed.orientation > 0) == (ed.u == i);
    if (!i_to_j) sign = -sign;
    word.push_back(i);
    word.push_back(j);
  }
  // word lists vertices as i1 j1 i2 j2 ...; its sign as a permutation of the
  // sorted vertex list.
  std::vector<size_t> sorted = word;
  std::sort(sorted.begin(), sorted.end());
  std::vector<size_t> perm(word.size());
  for (size_t k = 0; k < word.size(); ++k)
    perm[k] = static_cast<size_t>(std::lower_bound(sorted.begin(), sorted.end(), word[k]) - sorted.begin());
  return sign * permutation_sign(perm);
}

}  // namespace kast
