#pragma once

#include <string>
#include <vector>

#include "kast/bigint.hpp"
#include "kast/families.hpp"
#include "kast/graph.hpp"

namespace kast {

// Unit triangle of the triangular lattice spanned by e1 = (1,0) and
// e2 = (1/2, sqrt(3)/2). Up(i,j) has corners (i,j), (i+1,j), (i,j+1); Down(i,j)
// has corners (i+1,j), (i,j+1), (i+1,j+1).
struct Cell {
  long i = 0, j = 0;
  bool up = true;
  std::string label() const;  // "U(i,j)" or "D(i,j)"
  friend bool operator==(const Cell& x, const Cell& y) { return x.i == y.i && x.j == y.j && x.up == y.up; }
  friend bool operator<(const Cell& x, const Cell& y);
};

// Dual graph of a set of unit triangles: vertices sorted by (j, i, up), up
// triangles black, straight-line embedding through the centroids.
struct CellGraph {
  EmbeddedGraph graph;
  std::vector<Cell> cells;  // per vertex
};

CellGraph cell_graph(std::vector<Cell> cells);

// Z(a,b,c): triangles inside the hexagon with sides a, b, c, a, b, c.
CellGraph hexagon_cells(long a, long b, long c);
EmbeddedGraph build_hexagon_graph(long a, long b, long c);

// Z(a,b,c,d,e): the hexagon with sides a, b+d, c, a+d, b, c+d minus a central
// triangle of size |e|; negative e turns the triangle upside down.
CellGraph hexagon_minus_triangle_cells(long a, long b, long c, long d, long e);
EmbeddedGraph build_hexagon_minus_triangle(long a, long b, long c, long d, long e);

// Cube weights: the edge across the horizontal lattice edge from (i,j) to
// (i+1,j) gets q^(i - i0), i0 the leftmost such edge in row j. Matching
// weights are then q-weights of plane partitions up to a common power of q.
void apply_cube_weights(CellGraph& z);

// Symmetric quotient Z_G(a,b,c) (or its impossible variant), weighted per spec.
EmbeddedGraph symmetry_quotient(const FamilySpec& spec);
EmbeddedGraph impossible_variant(const FamilySpec& spec);

// Reweights a graph built by this module for `spec` (same shape, weights none).
EmbeddedGraph apply_q_weights(const EmbeddedGraph& z, const FamilySpec& spec, WeightMode mode);

// Brute-force count of the G-invariant matchings of the full hexagon graph.
BigInteger count_symmetric_matchings(const FamilySpec& spec, size_t guard = 0);

// Plane partitions in an a x b x c box (a x b base, heights at most c),
// enumerated directly; the sum of q^(statistic) over those invariant under
// the group, where the statistic counts cubes or orbits of cubes.
LaurentPoly plane_partition_generating_function(long a, long b, long c, SymmetryGroup g, WeightMode mode);

}  // namespace kast
