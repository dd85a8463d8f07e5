#include "kast/gv.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "kast/polygamy.hpp"

namespace kast {

size_t GVGraph::add_vertex(double x, double y, std::string label) {
  positions.push_back({x, y});
  labels.push_back(std::move(label));
  return vertex_count++;
}

void GVGraph::add_edge(size_t from, size_t to, LaurentPoly weight) {
  if (from >= vertex_count || to >= vertex_count) throw std::out_of_range("GV edge endpoint out of range");
  edges.push_back({from, to, std::move(weight)});
}

std::vector<size_t> topological_order(const GVGraph& g) {
  std::vector<size_t> indeg(g.vertex_count, 0);
  std::vector<std::vector<size_t>> out(g.vertex_count);
  for (const auto& e : g.edges) {
    ++indeg[e.to];
    out[e.from].push_back(e.to);
  }
  std::deque<size_t> ready;
  for (size_t v = 0; v < g.vertex_count; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::vector<size_t> order;
  while (!ready.empty()) {
    size_t v = ready.front();
    ready.pop_front();
    order.push_back(v);
    for (size_t w : out[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  if (order.size() != g.vertex_count) throw std::domain_error("GV graph has a directed cycle");
  return order;
}

Matrix<LaurentPoly> gv_matrix(const GVGraph& g) {
  if (g.lefts.size() != g.rights.size()) throw std::domain_error("left and right endpoint counts differ");
  std::vector<size_t> order = topological_order(g);
  std::vector<std::vector<const GVEdge*>> out(g.vertex_count);
  for (const auto& e : g.edges) out[e.from].push_back(&e);
  const size_t n = g.lefts.size();
  Matrix<LaurentPoly> v(n, n);
  for (size_t i = 0; i < n; ++i) {
    std::vector<LaurentPoly> paths(g.vertex_count);
    paths[g.lefts[i]] = 1;
    for (size_t x : order) {
      if (paths[x].is_zero()) continue;
      for (const GVEdge* e : out[x]) paths[e->to] += paths[x] * e->weight;
    }
    for (size_t j = 0; j < n; ++j) v(i, j) = paths[g.rights[j]];
  }
  return v;
}

EmbeddedGraph gv_embedding(const GVGraph& g) {
  if (g.positions.size() != g.vertex_count) throw std::invalid_argument("GV graph has no drawing");
  EmbeddedGraph h;
  for (size_t v = 0; v < g.vertex_count; ++v)
    h.add_vertex(VertexKind::Monogamous, Color::None, v < g.labels.size() ? g.labels[v] : std::string(),
                 g.positions[v].first, g.positions[v].second);
  for (const auto& e : g.edges) h.add_edge(e.from, e.to, e.weight);
  embed_from_positions(h);
  return h;
}

EmbeddedGraph transit_free_resolution(const GVGraph& g) {
  topological_order(g);
  EmbeddedGraph h = gv_embedding(g);
  const size_t nv = g.vertex_count, ne = g.edges.size();
  std::vector<bool> is_left(nv, false), is_right(nv, false);
  for (size_t v : g.lefts) is_left[v] = true;
  for (size_t v : g.rights) is_right[v] = true;

  // Segregation along the outer face of each component.
  std::vector<bool> on_outer(nv, false);
  for (size_t f : h.infinite_faces) {
    std::vector<int> seq;
    std::vector<bool> seen(nv, false);
    for (Dart d : h.faces[f].darts) {
      size_t v = h.tail(d);
      on_outer[v] = true;
      if (seen[v] || is_left[v] == is_right[v]) continue;
      seen[v] = true;
      seq.push_back(is_left[v] ? 0 : 1);
    }
    size_t changes = 0;
    for (size_t k = 0; k < seq.size(); ++k) changes += seq[k] != seq[(k + 1) % seq.size()];
    if (changes > 2) throw std::domain_error("left endpoints are not segregated from right endpoints");
  }
  for (size_t v = 0; v < nv; ++v)
    if ((is_left[v] || is_right[v]) && !on_outer[v] && !h.faces.empty())
      throw std::domain_error("an endpoint is not on the outer face");

  MapBuilder b(h);
  for (size_t e = 0; e < ne; ++e)
    if (is_left[g.edges[e].to] || is_right[g.edges[e].from]) b.remove_edge(e);
  auto degrees = [&](size_t v, size_t& in, size_t& out) {
    in = out = 0;
    for (Dart d : b.rot[v]) (g.edges[dart_edge(d)].to == v ? in : out) += 1;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t v = 0; v < nv; ++v) {
      if (!b.vertex_alive[v] || is_left[v] || is_right[v]) continue;
      size_t in, out;
      degrees(v, in, out);
      if (in == 0 || out == 0) {
        b.remove_vertex(v);
        changed = true;
      }
    }
  }
  for (size_t v = 0; v < nv; ++v)
    if (is_left[v] && is_right[v]) b.remove_vertex(v);

  std::vector<int> sign(ne, 1);
  std::vector<Color> color(nv, Color::None);
  for (size_t v = 0; v < nv; ++v) {
    if (!b.vertex_alive[v]) continue;
    if (is_left[v]) {
      color[v] = Color::Black;
      continue;
    }
    if (is_right[v]) {
      color[v] = Color::White;
      continue;
    }
    std::vector<Dart> r = b.rot[v];
    auto incoming = [&](Dart d) { return g.edges[dart_edge(d)].to == v; };
    size_t changes = 0, start = 0;
    for (size_t k = 0; k < r.size(); ++k) {
      bool a = incoming(r[k]), c = incoming(r[(k + 1) % r.size()]);
      if (a != c) ++changes;
      if (!a && c) start = (k + 1) % r.size();
    }
    if (changes != 2) throw std::domain_error("incoming edges are not consecutive at a transit vertex");
    std::rotate(r.begin(), r.begin() + static_cast<long>(start), r.end());
    std::vector<Dart> ins, outs;
    for (Dart d : r) (incoming(d) ? ins : outs).push_back(d);
    Vertex src = b.graph.vertices[v];
    src.label = src.label.empty() ? std::string() : src.label + "'";
    size_t rv = b.add_vertex(src);
    color.push_back(Color::Black);
    color[v] = Color::White;
    for (Dart d : outs) b.retail(d, rv);
    size_t link = b.add_edge(v, rv);
    sign.push_back(-1);
    ins.push_back(make_dart(link, true));
    outs.push_back(make_dart(link, false));
    b.rot[v] = ins;
    b.rot[rv] = outs;
  }
  for (size_t v = 0; v < b.graph.vertices.size(); ++v) b.graph.vertices[v].color = color[v];
  for (size_t e = 0; e < b.graph.edges.size(); ++e) b.graph.edges[e].sign = sign[e];
  return b.finish();
}

}  // namespace kast
