#pragma once

#include <cstddef>
#include <vector>

#include "kast/bigint.hpp"
#include "kast/graph.hpp"

namespace kast {

// Origin of each vertex and edge of a derived graph; kNoOrigin marks new ones.
inline constexpr size_t kNoOrigin = static_cast<size_t>(-1);
struct Provenance {
  std::vector<size_t> vertex_origin, edge_origin;
};

// Editable rotation system over a sphere graph. Edge and vertex ids stay
// stable while editing; finish() compacts dead ids and retraces faces.
class MapBuilder {
 public:
  explicit MapBuilder(const EmbeddedGraph& g);

  size_t add_vertex(Vertex v);
  size_t add_edge(size_t u, size_t v, LaurentPoly weight = 1);
  // Moves the tail of dart d to vertex w (the caller fixes the rotations).
  void retail(Dart d, size_t w);
  void remove_edge(size_t e);
  void remove_vertex(size_t v);  // removes incident edges too

  size_t degree(size_t v) const { return rot[v].size(); }
  EmbeddedGraph finish(Provenance* prov = nullptr) const;

  EmbeddedGraph graph;  // may contain dead vertices and edges
  Rotation rot;
  std::vector<bool> vertex_alive, edge_alive;
  std::vector<Dart> infinite_hints;
};

// Replaces polygamous vertices by monogamous gadgets (new edges have weight 1)
// so that matchings correspond bijectively with equal weights.
EmbeddedGraph monogamous_resolution(const EmbeddedGraph& g);

// A reflection of a sphere graph: an involution on vertices and edges that
// reverses the embedding. Bisected edges are the edges crossing the axis.
struct Reflection {
  std::vector<size_t> vertex_map;
  std::vector<size_t> edge_map;
  std::vector<size_t> bisected;
};

struct QuotientOptions {
  bool wrong_parity = false;
};

// Keeps one side of the axis and ties the bisected edges to a new polygamous
// vertex whose parity makes the total parity even (or odd with wrong_parity).
// Matchings of the result correspond to reflection-invariant matchings.
EmbeddedGraph reflection_quotient(const EmbeddedGraph& g, const Reflection& s,
                                  const QuotientOptions& opt = {}, Provenance* prov = nullptr);

// Ties dangling edges to one new polygamous vertex. `kept` selects the
// surviving vertices; each listed edge must have exactly one kept endpoint and
// all of them must reach a common face of the kept subgraph.
EmbeddedGraph tie_half_edges(const EmbeddedGraph& g, const std::vector<bool>& kept,
                             const std::vector<size_t>& cut_edges, bool wrong_parity = false,
                             Provenance* prov = nullptr);

// Subgraph on the kept vertices without the dropped edges, embedding inherited.
EmbeddedGraph induced_subgraph(const EmbeddedGraph& g, const std::vector<bool>& kept,
                               const std::vector<size_t>& dropped_edges = {}, Provenance* prov = nullptr);

// Number of matchings of g mapped to themselves by the edge permutation.
BigInteger count_invariant_matchings(const EmbeddedGraph& g, const std::vector<size_t>& edge_map,
                                     size_t guard = 0);
// Invariant under every listed edge permutation.
BigInteger count_invariant_matchings(const EmbeddedGraph& g, const std::vector<std::vector<size_t>>& edge_maps,
                                     size_t guard = 0);

// Each parallel edge beyond the first of its class becomes a path of three
// edges; the first keeps the weight, the others weigh 1. Loops are kept.
EmbeddedGraph triple_edges(const EmbeddedGraph& g);

// Splits vertex v into v, m, r joined by the path v -> m -> r: v keeps the
// first k darts of its rotation, r takes the rest. m and r get the next ids.
// Decorated orientations stay flat.
EmbeddedGraph split_vertex(const EmbeddedGraph& g, size_t v, size_t k);

}  // namespace kast
