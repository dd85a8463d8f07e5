#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kast/laurent.hpp"

namespace kast {

enum class VertexKind { Monogamous, OddPolygamous, EvenPolygamous };
enum class Color { None, Black, White };
enum class Surface { Sphere, Projective };

std::string kind_name(VertexKind k);
VertexKind parse_kind(const std::string& s);
std::string color_name(Color c);
Color parse_color(const std::string& s);
std::string surface_name(Surface s);
Surface parse_surface(const std::string& s);

struct Vertex {
  VertexKind kind = VertexKind::Monogamous;
  Color color = Color::None;
  std::string label;
  bool has_position = false;
  double x = 0, y = 0;
};

struct Edge {
  size_t u = 0, v = 0;
  LaurentPoly weight = 1;
  int sign = 0;         // +1 or -1 once signed
  int orientation = 0;  // +1: u->v, -1: v->u, 0: unset
};

// Dart 2e is edge e traversed u->v, dart 2e+1 is v->u.
using Dart = size_t;
inline Dart make_dart(size_t e, bool forward) { return 2 * e + (forward ? 0 : 1); }
inline size_t dart_edge(Dart d) { return d / 2; }
inline bool dart_forward(Dart d) { return d % 2 == 0; }
inline Dart reverse(Dart d) { return d ^ 1; }

struct Face {
  std::vector<Dart> darts;  // closed walk
};

// Planar (sphere) or projective embedded graph with explicit faces. On the
// sphere every dart lies on exactly one face and faces are traced with the
// face on the left; on the projective plane every edge lies on exactly two
// face sides, directions arbitrary.
class EmbeddedGraph {
 public:
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<Face> faces;
  Surface surface = Surface::Sphere;
  std::vector<size_t> infinite_faces;  // one per component on the sphere

  size_t add_vertex(Vertex v = {});
  size_t add_vertex(VertexKind kind, Color color, std::string label, double x, double y);
  size_t add_edge(size_t u, size_t v, LaurentPoly weight = 1);

  size_t tail(Dart d) const { return dart_forward(d) ? edges[d / 2].u : edges[d / 2].v; }
  size_t head(Dart d) const { return dart_forward(d) ? edges[d / 2].v : edges[d / 2].u; }
  bool is_loop(size_t e) const { return edges[e].u == edges[e].v; }
  bool is_infinite(size_t f) const;
  bool has_polygamy() const;
  bool is_bipartite_colored() const;  // every vertex colored, every edge proper
  size_t count_color(Color c) const;
  // Connected component index per vertex (isolated vertices get their own).
  std::vector<size_t> components(size_t* count = nullptr) const;
};

// Counterclockwise darts leaving each vertex.
using Rotation = std::vector<std::vector<Dart>>;

Rotation rotation_from_positions(const EmbeddedGraph& g);
// Sphere only: the rotation induced by the face walks.
Rotation rotation_from_faces(const EmbeddedGraph& g);
// Faces with the face on the left: next(d) = clockwise successor of reverse(d).
std::vector<Face> trace_faces(const EmbeddedGraph& g, const Rotation& rot);

// Replaces faces by those of the rotation system. Infinite faces are the
// faces containing a hint dart; components without a hint use the most
// negative signed area when all positions are known, else their longest face.
void embed(EmbeddedGraph& g, const Rotation& rot, const std::vector<Dart>& infinite_hints = {});
// embed() using the straight-line rotation of the vertex positions.
void embed_from_positions(EmbeddedGraph& g);

struct EmbeddingCheck {
  bool ok = true;
  std::string error;
};
// Closed walks, edge/dart multiplicities, disk links (sphere), Euler
// characteristic per component, proper coloring.
EmbeddingCheck validate_embedding(const EmbeddedGraph& g);

// Signed area of a face walk from vertex positions (positive = ccw).
double signed_area(const EmbeddedGraph& g, const Face& f);

}  // namespace kast
