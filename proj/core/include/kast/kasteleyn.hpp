#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kast/graph.hpp"
#include "kast/matrix.hpp"

namespace kast {

struct DecorationOptions {
  // 0 keeps the deterministic BFS dual tree; other values shuffle the tree
  // and randomize the free (non-tree) edges.
  uint64_t seed = 0;
};

struct DecorationReport {
  bool finite_faces_flat = true;
  bool infinite_faces_flat = true;
  // Components with an odd number of vertices (flat only on finite faces).
  std::vector<size_t> odd_components;
};

// Percus signs on a bipartite sphere graph: a finite face with 4k sides gets
// an odd number of minus signs, a face with 4k+2 sides an even number.
EmbeddedGraph kasteleyn_percus_sign(const EmbeddedGraph& g, const DecorationOptions& opt = {},
                                    DecorationReport* report = nullptr);

// Clockwise-odd orientation on the sphere; on the projective plane each face
// gets an odd number of edges in each direction.
EmbeddedGraph kasteleyn_orient(const EmbeddedGraph& g, const DecorationOptions& opt = {},
                               DecorationReport* report = nullptr);

// Orientation black -> white on + edges and white -> black on - edges; flat
// whenever the signs are.
EmbeddedGraph orientation_from_signs(const EmbeddedGraph& g);

enum class FlatnessRule { Percus, Clockwise, Auto };

struct FaceFlatness {
  size_t face = 0;
  bool infinite = false;
  size_t length = 0;
  size_t count = 0;     // minus signs, or edges against the walk
  bool required_odd = true;
  bool pass = false;
  bool counted = true;  // part of the overall verdict
};

struct FlatnessReport {
  FlatnessRule rule = FlatnessRule::Clockwise;
  std::vector<FaceFlatness> faces;
  bool flat = true;
};

FlatnessReport verify_flatness(const EmbeddedGraph& g, FlatnessRule rule = FlatnessRule::Auto);

enum class MatrixMode { Bipartite, Alternating };

// Bipartite: black x white (each sorted by vertex index), entries summed
// sign * weight. Alternating: vertex-indexed, A_uv += w for u -> v.
Matrix<LaurentPoly> adjacency_matrix(const EmbeddedGraph& g, MatrixMode mode);
std::vector<size_t> black_vertices(const EmbeddedGraph& g);
std::vector<size_t> white_vertices(const EmbeddedGraph& g);

// Assigns a proper 2-coloring (lowest index black in each component).
// Throws std::domain_error if the graph is not bipartite.
EmbeddedGraph with_bipartite_coloring(const EmbeddedGraph& g);
bool is_bipartite(const EmbeddedGraph& g);

}  // namespace kast
