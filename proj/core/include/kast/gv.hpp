#pragma once

#include <string>
#include <vector>

#include "kast/graph.hpp"
#include "kast/laurent.hpp"
#include "kast/matrix.hpp"

namespace kast {

struct GVEdge {
  size_t from = 0, to = 0;
  LaurentPoly weight = 1;
};

// Weighted acyclic digraph with ordered left and right endpoints. A vertex may
// be both a left and a right endpoint. Positions, when present, give a planar
// straight-line drawing.
struct GVGraph {
  size_t vertex_count = 0;
  std::vector<GVEdge> edges;
  std::vector<size_t> lefts, rights;
  std::vector<std::pair<double, double>> positions;
  std::vector<std::string> labels;

  size_t add_vertex(double x, double y, std::string label = {});
  void add_edge(size_t from, size_t to, LaurentPoly weight = 1);
};

// Vertices in topological order; throws std::domain_error on a directed cycle.
std::vector<size_t> topological_order(const GVGraph& g);

// V_ij = total weight of the directed paths from left i to right j; a vertex
// that is both gives the empty path of weight 1.
Matrix<LaurentPoly> gv_matrix(const GVGraph& g);

// Drops edges that no disjoint path family can use and vertices that are
// sources or sinks without being endpoints, removes coinciding endpoints
// (each contributes a unit 1 x 1 block), then splits every transit vertex p
// into a sink q and a source r joined by an edge of matrix entry -1 (weight 1,
// sign -1). Sources (left endpoints and the r's) are black, sinks white; all
// other edges get sign +1. Needs positions; the endpoints must lie on the
// outer face with the left ones segregated from the right ones, and at each
// transit vertex the incoming edges must be consecutive.
EmbeddedGraph transit_free_resolution(const GVGraph& g);

// The underlying undirected embedded graph (edge k is GV edge k).
EmbeddedGraph gv_embedding(const GVGraph& g);

}  // namespace kast
