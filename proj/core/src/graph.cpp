#include "kast/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace kast {

std::string kind_name(VertexKind k) {
  switch (k) {
    case VertexKind::Monogamous:
      return "monogamous";
    case VertexKind::OddPolygamous:
      return "odd-polygamous";
    case VertexKind::EvenPolygamous:
      return "even-polygamous";
  }
  return "?";
}

VertexKind parse_kind(const std::string& s) {
  if (s == "monogamous") return VertexKind::Monogamous;
  if (s == "odd-polygamous") return VertexKind::OddPolygamous;
  if (s == "even-polygamous") return VertexKind::EvenPolygamous;
  throw std::invalid_argument("unknown vertex kind '" + s + "'");
}

std::string color_name(Color c) {
  switch (c) {
    case Color::None:
      return "none";
    case Color::Black:
      return "black";
    case Color::White:
      return "white";
  }
  return "?";
}

Color parse_color(const std::string& s) {
  if (s == "none" || s.empty()) return Color::None;
  if (s == "black") return Color::Black;
  if (s == "white") return Color::White;
  throw std::invalid_argument("unknown color '" + s + "'");
}

std::string surface_name(Surface s) { return s == Surface::Sphere ? "sphere" : "projective"; }

Surface parse_surface(const std::string& s) {
  if (s == "sphere") return Surface::Sphere;
  if (s == "projective") return Surface::Projective;
  throw std::invalid_argument("unknown surface '" + s + "'");
}

size_t EmbeddedGraph::add_vertex(Vertex v) {
  vertices.push_back(std::move(v));
  return vertices.size() - 1;
}

size_t EmbeddedGraph::add_vertex(VertexKind kind, Color color, std::string label, double x,
                                 double y) {
  return add_vertex(Vertex{kind, color, std::move(label), true, x, y});
}

size_t EmbeddedGraph::add_edge(size_t u, size_t v, LaurentPoly weight) {
  if (u >= vertices.size() || v >= vertices.size()) throw std::out_of_range("edge endpoint");
  edges.push_back(Edge{u, v, std::move(weight), 0, 0});
  return edges.size() - 1;
}

bool EmbeddedGraph::is_infinite(size_t f) const {
  return std::find(infinite_faces.begin(), infinite_faces.end(), f) != infinite_faces.end();
}

bool EmbeddedGraph::has_polygamy() const {
  for (const auto& v : vertices)
    if (v.kind != VertexKind::Monogamous) return true;
  return false;
}

bool EmbeddedGraph::is_bipartite_colored() const {
  for (const auto& v : vertices)
    if (v.color == Color::None) return false;
  for (const auto& e : edges)
    if (vertices[e.u].color == vertices[e.v].color) return false;
  return true;
}

size_t EmbeddedGraph::count_color(Color c) const {
  return static_cast<size_t>(std::count_if(vertices.begin(), vertices.end(),
                                           [&](const Vertex& v) { return v.color == c; }));
}

std::vector<size_t> EmbeddedGraph::components(size_t* count) const {
  std::vector<size_t> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges) parent[find(e.u)] = find(e.v);
  std::map<size_t, size_t> id;
  std::vector<size_t> out(vertices.size());
  for (size_t v = 0; v < vertices.size(); ++v) {
    size_t r = find(v);
    auto it = id.emplace(r, id.size()).first;
    out[v] = it->second;
  }
  if (count) *count = id.size();
  return out;
}

Rotation rotation_from_positions(const EmbeddedGraph& g) {
  Rotation rot(g.vertices.size());
  for (size_t e = 0; e < g.edges.size(); ++e) {
    if (g.is_loop(e)) throw std::domain_error("self-loops need explicit faces");
    rot[g.edges[e].u].push_back(make_dart(e, true));
    rot[g.edges[e].v].push_back(make_dart(e, false));
  }
  for (size_t v = 0; v < rot.size(); ++v) {
    const Vertex& p = g.vertices[v];
    if (!p.has_position && !rot[v].empty())
      throw std::domain_error("vertex " + std::to_string(v) + " has no position");
    auto angle = [&](Dart d) {
      const Vertex& q = g.vertices[g.head(d)];
      return std::atan2(q.y - p.y, q.x - p.x);
    };
    std::sort(rot[v].begin(), rot[v].end(), [&](Dart a, Dart b) { return angle(a) < angle(b); });
    for (size_t i = 0; i + 1 < rot[v].size(); ++i)
      if (std::abs(angle(rot[v][i]) - angle(rot[v][i + 1])) < 1e-12)
        throw std::domain_error("parallel edges at vertex " + std::to_string(v) +
                                " need explicit faces");
  }
  return rot;
}

Rotation rotation_from_faces(const EmbeddedGraph& g) {
  if (g.surface != Surface::Sphere) throw std::domain_error("rotation needs an orientable surface");
  const size_t nd = 2 * g.edges.size();
  std::vector<long> ccw_next(nd, -1);
  for (const auto& f : g.faces)
    for (size_t i = 0; i < f.darts.size(); ++i) {
      Dart d = f.darts[i], nx = f.darts[(i + 1) % f.darts.size()];
      if (ccw_next[nx] != -1) throw std::domain_error("dart on two faces");
      ccw_next[nx] = static_cast<long>(reverse(d));
    }
  Rotation rot(g.vertices.size());
  std::vector<bool> seen(nd, false);
  std::vector<size_t> degree(g.vertices.size(), 0);
  for (Dart d = 0; d < nd; ++d) ++degree[g.tail(d)];
  for (Dart d = 0; d < nd; ++d) {
    size_t v = g.tail(d);
    if (!rot[v].empty()) continue;
    Dart c = d;
    do {
      if (ccw_next[c] < 0) throw std::domain_error("dart missing from the faces");
      if (seen[c]) throw std::domain_error("vertex link is not a cycle");
      seen[c] = true;
      rot[v].push_back(c);
      c = static_cast<Dart>(ccw_next[c]);
      if (g.tail(c) != v) throw std::domain_error("faces are not closed walks");
    } while (c != d);
    if (rot[v].size() != degree[v])
      throw std::domain_error("vertex " + std::to_string(v) + " link is not a single cycle");
  }
  return rot;
}

std::vector<Face> trace_faces(const EmbeddedGraph& g, const Rotation& rot) {
  const size_t nd = 2 * g.edges.size();
  std::vector<size_t> pos(nd, 0);
  std::vector<bool> placed(nd, false);
  for (const auto& r : rot)
    for (size_t i = 0; i < r.size(); ++i) {
      pos[r[i]] = i;
      placed[r[i]] = true;
    }
  for (Dart d = 0; d < nd; ++d)
    if (!placed[d]) throw std::domain_error("rotation misses dart " + std::to_string(d));
  std::vector<bool> used(nd, false);
  std::vector<Face> faces;
  for (Dart s = 0; s < nd; ++s) {
    if (used[s]) continue;
    Face f;
    Dart d = s;
    while (!used[d]) {
      used[d] = true;
      f.darts.push_back(d);
      Dart r = reverse(d);
      const auto& around = rot[g.tail(r)];
      d = around[(pos[r] + around.size() - 1) % around.size()];
    }
    if (d != s) throw std::domain_error("face tracing did not close");
    faces.push_back(std::move(f));
  }
  return faces;
}

double signed_area(const EmbeddedGraph& g, const Face& f) {
  double a = 0;
  for (Dart d : f.darts) {
    const Vertex& p = g.vertices[g.tail(d)];
    const Vertex& q = g.vertices[g.head(d)];
    a += p.x * q.y - q.x * p.y;
  }
  return a / 2;
}

void embed(EmbeddedGraph& g, const Rotation& rot, const std::vector<Dart>& infinite_hints) {
  g.faces = trace_faces(g, rot);
  g.infinite_faces.clear();
  if (g.surface != Surface::Sphere) return;
  size_t ncomp = 0;
  auto comp = g.components(&ncomp);
  std::vector<long> chosen(ncomp, -1);
  std::vector<long> face_of(2 * g.edges.size(), -1);
  for (size_t f = 0; f < g.faces.size(); ++f)
    for (Dart d : g.faces[f].darts) face_of[d] = static_cast<long>(f);
  for (Dart d : infinite_hints) {
    if (d >= face_of.size()) continue;
    size_t c = comp[g.tail(d)];
    if (chosen[c] < 0) chosen[c] = face_of[d];
  }
  bool positions = std::all_of(g.vertices.begin(), g.vertices.end(),
                               [](const Vertex& v) { return v.has_position; });
  // Fallback choices for components without a hint.
  std::vector<bool> hinted(ncomp, false);
  for (size_t c = 0; c < ncomp; ++c) hinted[c] = chosen[c] >= 0;
  for (size_t f = 0; f < g.faces.size(); ++f) {
    size_t c = comp[g.tail(g.faces[f].darts[0])];
    if (hinted[c]) continue;
    if (chosen[c] < 0) {
      chosen[c] = static_cast<long>(f);
      continue;
    }
    const Face& cur = g.faces[chosen[c]];
    bool better = positions ? signed_area(g, g.faces[f]) < signed_area(g, cur)
                            : g.faces[f].darts.size() > cur.darts.size();
    if (better) chosen[c] = static_cast<long>(f);
  }
  for (long f : chosen)
    if (f >= 0) g.infinite_faces.push_back(static_cast<size_t>(f));
  std::sort(g.infinite_faces.begin(), g.infinite_faces.end());
}

void embed_from_positions(EmbeddedGraph& g) { embed(g, rotation_from_positions(g)); }

EmbeddingCheck validate_embedding(const EmbeddedGraph& g) {
  auto fail = [](std::string msg) { return EmbeddingCheck{false, std::move(msg)}; };
  const size_t nd = 2 * g.edges.size();
  for (const auto& e : g.edges)
    if (e.u >= g.vertices.size() || e.v >= g.vertices.size()) return fail("edge endpoint out of range");
  std::vector<int> dart_uses(nd, 0), edge_uses(g.edges.size(), 0);
  for (size_t f = 0; f < g.faces.size(); ++f) {
    const auto& ds = g.faces[f].darts;
    if (ds.empty()) return fail("face " + std::to_string(f) + " is empty");
    for (size_t i = 0; i < ds.size(); ++i) {
      if (ds[i] >= nd) return fail("face " + std::to_string(f) + " names a missing edge");
      if (g.head(ds[i]) != g.tail(ds[(i + 1) % ds.size()]))
        return fail("face " + std::to_string(f) + " is not a closed walk");
      ++dart_uses[ds[i]];
      ++edge_uses[dart_edge(ds[i])];
    }
  }
  for (size_t e = 0; e < g.edges.size(); ++e)
    if (edge_uses[e] != 2)
      return fail("edge " + std::to_string(e) + " lies on " + std::to_string(edge_uses[e]) +
                  " face sides (expected 2)");
  size_t ncomp = 0;
  auto comp = g.components(&ncomp);
  std::vector<long> ev(ncomp, 0), ee(ncomp, 0), ef(ncomp, 0);
  for (size_t v = 0; v < g.vertices.size(); ++v) ++ev[comp[v]];
  for (const auto& e : g.edges) ++ee[comp[e.u]];
  for (const auto& f : g.faces) ++ef[comp[g.tail(f.darts[0])]];
  if (g.surface == Surface::Sphere) {
    for (Dart d = 0; d < nd; ++d)
      if (dart_uses[d] != 1) return fail("dart " + std::to_string(d) + " is not on exactly one face");
    try {
      rotation_from_faces(g);
    } catch (const std::domain_error& e) {
      return fail(e.what());
    }
    std::vector<int> inf(ncomp, 0);
    for (size_t f : g.infinite_faces) {
      if (f >= g.faces.size()) return fail("infinite face index out of range");
      ++inf[comp[g.tail(g.faces[f].darts[0])]];
    }
    for (size_t c = 0; c < ncomp; ++c) {
      if (ee[c] == 0) continue;
      if (ev[c] - ee[c] + ef[c] != 2)
        return fail("Euler characteristic " + std::to_string(ev[c] - ee[c] + ef[c]) +
                    " != 2 on a component");
      if (inf[c] != 1) return fail("each component needs exactly one infinite face");
    }
  } else {
    if (ncomp != 1) return fail("projective embeddings must be connected");
    long chi = static_cast<long>(g.vertices.size()) - static_cast<long>(g.edges.size()) +
               static_cast<long>(g.faces.size());
    if (chi != 1) return fail("Euler characteristic " + std::to_string(chi) + " != 1");
  }
  bool any_color = false;
  for (const auto& v : g.vertices) any_color |= v.color != Color::None;
  if (any_color)
    for (const auto& e : g.edges) {
      Color a = g.vertices[e.u].color, b = g.vertices[e.v].color;
      if (a != Color::None && a == b) return fail("coloring is not proper");
    }
  return {};
}

}  // namespace kast
