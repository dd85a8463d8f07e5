#include "kast/polygamy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "kast/matching.hpp"

namespace kast {

MapBuilder::MapBuilder(const EmbeddedGraph& g)
    : graph(g),
      rot(rotation_from_faces(g)),
      vertex_alive(g.vertices.size(), true),
      edge_alive(g.edges.size(), true) {
  for (size_t f : g.infinite_faces)
    for (Dart d : g.faces[f].darts) infinite_hints.push_back(d);
}

size_t MapBuilder::add_vertex(Vertex v) {
  vertex_alive.push_back(true);
  rot.emplace_back();
  return graph.add_vertex(std::move(v));
}

size_t MapBuilder::add_edge(size_t u, size_t v, LaurentPoly weight) {
  edge_alive.push_back(true);
  return graph.add_edge(u, v, std::move(weight));
}

void MapBuilder::retail(Dart d, size_t w) {
  Edge& e = graph.edges[dart_edge(d)];
  (dart_forward(d) ? e.u : e.v) = w;
}

void MapBuilder::remove_edge(size_t e) {
  for (Dart d : {make_dart(e, true), make_dart(e, false)}) {
    auto& r = rot[graph.tail(d)];
    r.erase(std::remove(r.begin(), r.end(), d), r.end());
  }
  edge_alive[e] = false;
}

void MapBuilder::remove_vertex(size_t v) {
  while (!rot[v].empty()) remove_edge(dart_edge(rot[v].front()));
  vertex_alive[v] = false;
}

EmbeddedGraph MapBuilder::finish(Provenance* prov) const {
  const size_t none = static_cast<size_t>(-1);
  std::vector<size_t> vmap(graph.vertices.size(), none), emap(graph.edges.size(), none);
  EmbeddedGraph out;
  out.surface = Surface::Sphere;
  for (size_t v = 0; v < graph.vertices.size(); ++v)
    if (vertex_alive[v]) vmap[v] = out.add_vertex(graph.vertices[v]);
  for (size_t e = 0; e < graph.edges.size(); ++e) {
    if (!edge_alive[e]) continue;
    Edge ed = graph.edges[e];
    ed.u = vmap[ed.u];
    ed.v = vmap[ed.v];
    if (ed.u == none || ed.v == none) throw std::logic_error("live edge at a dead vertex");
    emap[e] = out.edges.size();
    out.edges.push_back(ed);
  }
  auto map_dart = [&](Dart d) { return make_dart(emap[dart_edge(d)], dart_forward(d)); };
  Rotation r(out.vertices.size());
  for (size_t v = 0; v < graph.vertices.size(); ++v)
    if (vertex_alive[v])
      for (Dart d : rot[v]) r[vmap[v]].push_back(map_dart(d));
  std::vector<Dart> hints;
  for (Dart d : infinite_hints)
    if (dart_edge(d) < emap.size() && emap[dart_edge(d)] != none) hints.push_back(map_dart(d));
  embed(out, r, hints);
  if (prov) {
    prov->vertex_origin.clear();
    prov->edge_origin.clear();
    for (size_t v = 0; v < graph.vertices.size(); ++v)
      if (vertex_alive[v]) prov->vertex_origin.push_back(v);
    for (size_t e = 0; e < graph.edges.size(); ++e)
      if (edge_alive[e]) prov->edge_origin.push_back(e);
  }
  return out;
}

namespace {

Vertex derived_vertex(const Vertex& base, VertexKind kind, const std::string& suffix) {
  Vertex v = base;
  v.kind = kind;
  v.color = Color::None;
  v.label = base.label.empty() ? "" : base.label + suffix;
  return v;
}

// Faces of the live part of a builder (face on the left).
std::vector<Face> live_faces(const MapBuilder& b) {
  const size_t nd = 2 * b.graph.edges.size();
  std::vector<size_t> pos(nd, 0);
  for (const auto& r : b.rot)
    for (size_t i = 0; i < r.size(); ++i) pos[r[i]] = i;
  std::vector<bool> used(nd, false);
  std::vector<Face> faces;
  for (Dart s = 0; s < nd; ++s) {
    if (used[s] || !b.edge_alive[dart_edge(s)]) continue;
    Face f;
    for (Dart d = s; !used[d];) {
      used[d] = true;
      f.darts.push_back(d);
      Dart r = reverse(d);
      const auto& around = b.rot[b.graph.tail(r)];
      d = around[(pos[r] + around.size() - 1) % around.size()];
    }
    faces.push_back(std::move(f));
  }
  return faces;
}

}  // namespace

EmbeddedGraph monogamous_resolution(const EmbeddedGraph& g) {
  MapBuilder b(g);
  for (auto& v : b.graph.vertices) v.color = Color::None;
  for (size_t e = 0; e < g.edges.size(); ++e)
    if (g.is_loop(e) && g.vertices[g.edges[e].u].kind != VertexKind::Monogamous) b.remove_edge(e);
  for (size_t v = 0; v < b.graph.vertices.size(); ++v) {
    while (b.vertex_alive[v] && b.graph.vertices[v].kind != VertexKind::Monogamous) {
      const VertexKind kind = b.graph.vertices[v].kind;
      const std::vector<Dart> r = b.rot[v];
      const size_t d = r.size();
      const bool odd = kind == VertexKind::OddPolygamous;
      if (!odd && d <= 1) {
        b.remove_vertex(v);
      } else if (odd && d <= 2) {
        b.graph.vertices[v].kind = VertexKind::Monogamous;
      } else if (odd && d == 3) {
        size_t t1 = b.add_vertex(derived_vertex(b.graph.vertices[v], VertexKind::Monogamous, "'"));
        size_t t2 = b.add_vertex(derived_vertex(b.graph.vertices[v], VertexKind::Monogamous, "''"));
        b.graph.vertices[v].kind = VertexKind::Monogamous;
        b.retail(r[1], t1);
        b.retail(r[2], t2);
        size_t e01 = b.add_edge(v, t1), e12 = b.add_edge(t1, t2), e20 = b.add_edge(t2, v);
        b.rot[v] = {r[0], make_dart(e01, true), make_dart(e20, false)};
        b.rot[t1] = {r[1], make_dart(e12, true), make_dart(e01, false)};
        b.rot[t2] = {r[2], make_dart(e20, true), make_dart(e12, false)};
      } else {
        // Split off a new vertex y joined to v; (v keeps, y takes) darts.
        size_t keep;
        VertexKind vk, yk;
        if (d == 2) {
          keep = 1, vk = VertexKind::Monogamous, yk = VertexKind::Monogamous;
        } else if (d == 3) {
          keep = 1, vk = VertexKind::OddPolygamous, yk = VertexKind::OddPolygamous;
        } else {
          keep = 2, vk = VertexKind::EvenPolygamous, yk = kind;
        }
        size_t y = b.add_vertex(derived_vertex(b.graph.vertices[v], yk, "'"));
        b.graph.vertices[v].kind = vk;
        size_t e = b.add_edge(v, y);
        std::vector<Dart> rv(r.begin(), r.begin() + static_cast<long>(keep));
        std::vector<Dart> ry(r.begin() + static_cast<long>(keep), r.end());
        for (Dart x : ry) b.retail(x, y);
        rv.push_back(make_dart(e, true));
        ry.push_back(make_dart(e, false));
        b.rot[v] = rv;
        b.rot[y] = ry;
      }
    }
  }
  return b.finish();
}

namespace {

void check_reflection(const EmbeddedGraph& g, const Reflection& s) {
  const size_t n = g.vertices.size(), m = g.edges.size();
  if (g.surface != Surface::Sphere) throw std::domain_error("reflection needs a sphere embedding");
  if (s.vertex_map.size() != n || s.edge_map.size() != m)
    throw std::domain_error("reflection maps have the wrong size");
  for (size_t v = 0; v < n; ++v) {
    if (s.vertex_map[v] >= n || s.vertex_map[s.vertex_map[v]] != v)
      throw std::domain_error("vertex map is not an involution");
    if (s.vertex_map[v] == v) throw std::domain_error("reflection fixes vertex " + std::to_string(v));
  }
  std::set<size_t> bis(s.bisected.begin(), s.bisected.end());
  for (size_t e = 0; e < m; ++e) {
    size_t f = s.edge_map[e];
    if (f >= m || s.edge_map[f] != e) throw std::domain_error("edge map is not an involution");
    const Edge &a = g.edges[e], &b = g.edges[f];
    std::multiset<size_t> img{s.vertex_map[a.u], s.vertex_map[a.v]}, ends{b.u, b.v};
    if (img != ends) throw std::domain_error("edge map disagrees with the vertex map at edge " + std::to_string(e));
    bool on_axis = f == e && s.vertex_map[a.u] == a.v;
    if (on_axis != (bis.count(e) > 0))
      throw std::domain_error("edge " + std::to_string(e) + (on_axis ? " crosses the axis but is not listed"
                                                                     : " is listed but does not cross the axis"));
  }
  // The image of each face walk, read backwards, must be a face.
  auto image = [&](Dart d) {
    size_t e = s.edge_map[dart_edge(d)];
    return make_dart(e, g.edges[e].u == s.vertex_map[g.tail(d)]);
  };
  std::vector<std::pair<size_t, size_t>> where(2 * m);
  for (size_t f = 0; f < g.faces.size(); ++f)
    for (size_t i = 0; i < g.faces[f].darts.size(); ++i) where[g.faces[f].darts[i]] = {f, i};
  for (const auto& face : g.faces) {
    std::vector<Dart> w;
    for (auto it = face.darts.rbegin(); it != face.darts.rend(); ++it) w.push_back(reverse(image(*it)));
    auto [f, start] = where[w[0]];
    const auto& target = g.faces[f].darts;
    bool ok = target.size() == w.size();
    for (size_t i = 0; ok && i < w.size(); ++i) ok = target[(start + i) % target.size()] == w[i];
    if (!ok) throw std::domain_error("reflection does not preserve the faces");
  }
}

}  // namespace

EmbeddedGraph reflection_quotient(const EmbeddedGraph& g, const Reflection& s, const QuotientOptions& opt,
                                  Provenance* prov) {
  check_reflection(g, s);
  const size_t n = g.vertices.size();
  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::set<size_t> bis(s.bisected.begin(), s.bisected.end());
  for (size_t e = 0; e < g.edges.size(); ++e)
    if (!bis.count(e)) parent[find(g.edges[e].u)] = find(g.edges[e].v);
  std::vector<size_t> min_id(n, n);
  for (size_t v = 0; v < n; ++v) min_id[find(v)] = std::min(min_id[find(v)], v);
  std::vector<bool> kept(n);
  for (size_t v = 0; v < n; ++v) {
    size_t c = find(v), d = find(s.vertex_map[v]);
    if (c == d) throw std::domain_error("the axis does not separate the graph");
    kept[v] = min_id[c] < min_id[d];
  }
  return tie_half_edges(g, kept, s.bisected, opt.wrong_parity, prov);
}

EmbeddedGraph tie_half_edges(const EmbeddedGraph& g, const std::vector<bool>& kept,
                             const std::vector<size_t>& cut_edges, bool wrong_parity, Provenance* prov) {
  MapBuilder b(g);
  // Hang each cut edge from a temporary leaf on the far side.
  std::vector<std::pair<size_t, Dart>> leaves;  // (leaf vertex, dart leaving the kept end)
  for (size_t e : cut_edges) {
    const Edge& ed = g.edges[e];
    if (kept[ed.u] == kept[ed.v]) throw std::domain_error("cut edge " + std::to_string(e) + " is not cut");
    Dart inner = make_dart(e, kept[ed.u]);
    Dart outer = reverse(inner);
    size_t far = b.graph.tail(outer);
    auto& rf = b.rot[far];
    rf.erase(std::remove(rf.begin(), rf.end(), outer), rf.end());
    size_t leaf = b.add_vertex(Vertex{});
    b.retail(outer, leaf);
    b.rot[leaf] = {outer};
    leaves.push_back({leaf, inner});
  }
  for (size_t v = 0; v < g.vertices.size(); ++v)
    if (!kept[v]) b.remove_vertex(v);
  size_t parity = 0;
  for (size_t v = 0; v < g.vertices.size(); ++v)
    if (kept[v] && g.vertices[v].kind != VertexKind::EvenPolygamous) ++parity;
  if (!leaves.empty()) {
    std::map<Dart, size_t> leaf_of;
    for (const auto& [leaf, inner] : leaves) leaf_of[inner] = leaf;
    std::vector<Dart> order;
    for (const auto& f : live_faces(b)) {
      std::vector<Dart> here;
      for (Dart d : f.darts)
        if (leaf_of.count(d)) here.push_back(d);
      if (here.empty()) continue;
      if (here.size() != leaves.size()) throw std::domain_error("cut edges do not share a face");
      order = here;
    }
    bool odd = (parity % 2 == 1) != wrong_parity;
    Vertex p;
    p.kind = odd ? VertexKind::OddPolygamous : VertexKind::EvenPolygamous;
    p.label = "P";
    size_t pv = b.add_vertex(p);
    for (Dart inner : order) {
      size_t leaf = leaf_of[inner];
      b.retail(reverse(inner), pv);
      b.rot[pv].push_back(reverse(inner));
      b.rot[leaf].clear();
      b.vertex_alive[leaf] = false;
    }
  }
  EmbeddedGraph out = b.finish(prov);
  if (prov)
    for (auto& v : prov->vertex_origin)
      if (v >= g.vertices.size()) v = kNoOrigin;
  for (auto& v : out.vertices) v.color = Color::None;
  return out;
}

EmbeddedGraph induced_subgraph(const EmbeddedGraph& g, const std::vector<bool>& kept,
                               const std::vector<size_t>& dropped_edges, Provenance* prov) {
  MapBuilder b(g);
  for (size_t e : dropped_edges)
    if (b.edge_alive[e]) b.remove_edge(e);
  for (size_t v = 0; v < g.vertices.size(); ++v)
    if (!kept[v]) b.remove_vertex(v);
  return b.finish(prov);
}

BigInteger count_invariant_matchings(const EmbeddedGraph& g, const std::vector<size_t>& edge_map, size_t guard) {
  return count_invariant_matchings(g, std::vector<std::vector<size_t>>{edge_map}, guard);
}

BigInteger count_invariant_matchings(const EmbeddedGraph& g, const std::vector<std::vector<size_t>>& edge_maps,
                                     size_t guard) {
  unsigned long count = 0;
  std::vector<bool> in(g.edges.size(), false);
  for_each_matching(
      g,
      [&](const std::vector<size_t>& edges) {
        for (size_t e : edges) in[e] = true;
        bool invariant = true;
        for (const auto& map : edge_maps)
          invariant = invariant && std::all_of(edges.begin(), edges.end(), [&](size_t e) { return in[map[e]]; });
        for (size_t e : edges) in[e] = false;
        count += invariant;
        return true;
      },
      guard);
  return BigInteger(count);
}

EmbeddedGraph triple_edges(const EmbeddedGraph& g) {
  MapBuilder b(g);
  std::set<std::pair<size_t, size_t>> seen;
  for (size_t e = 0; e < g.edges.size(); ++e) {
    if (g.is_loop(e)) continue;
    const Edge ed = g.edges[e];
    if (seen.insert({std::min(ed.u, ed.v), std::max(ed.u, ed.v)}).second) continue;
    Vertex va, vb;
    va.color = g.vertices[ed.v].color;
    vb.color = g.vertices[ed.u].color;
    size_t a = b.add_vertex(va), c = b.add_vertex(vb);
    Dart at_v = make_dart(e, false);
    b.retail(at_v, a);
    size_t eab = b.add_edge(a, c), ecv = b.add_edge(c, ed.v);
    auto& rv = b.rot[ed.v];
    std::replace(rv.begin(), rv.end(), at_v, make_dart(ecv, false));
    b.rot[a] = {at_v, make_dart(eab, true)};
    b.rot[c] = {make_dart(eab, false), make_dart(ecv, true)};
  }
  return b.finish();
}

EmbeddedGraph split_vertex(const EmbeddedGraph& g, size_t v, size_t k) {
  MapBuilder b(g);
  const std::vector<Dart> r = b.rot[v];
  if (k > r.size()) throw std::domain_error("split position exceeds the degree");
  Vertex mid = g.vertices[v], right = g.vertices[v];
  if (mid.color != Color::None) mid.color = mid.color == Color::Black ? Color::White : Color::Black;
  size_t m = b.add_vertex(mid), rv = b.add_vertex(right);
  size_t evm = b.add_edge(v, m), emr = b.add_edge(m, rv);
  b.graph.edges[evm].orientation = 1;
  b.graph.edges[emr].orientation = 1;
  std::vector<Dart> left(r.begin(), r.begin() + static_cast<long>(k));
  std::vector<Dart> rest(r.begin() + static_cast<long>(k), r.end());
  for (Dart d : rest) b.retail(d, rv);
  left.push_back(make_dart(evm, true));
  rest.push_back(make_dart(emr, false));
  b.rot[v] = left;
  b.rot[m] = {make_dart(evm, false), make_dart(emr, true)};
  b.rot[rv] = rest;
  return b.finish();
}

}  // namespace kast
