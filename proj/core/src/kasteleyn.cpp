#include "kast/kasteleyn.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>

namespace kast {
namespace {

// Solves sum_e coeff(f,e) x_e = rhs_f (mod 2) for every non-root face using a
// spanning tree of the dual graph: faces are fixed leaf-to-root, each through
// the edge joining it to its parent. Root faces are left unconstrained.
std::vector<int> solve_face_parities(const EmbeddedGraph& g, const std::vector<int>& rhs,
                                     const std::vector<size_t>& roots, uint64_t seed) {
  const size_t nf = g.faces.size(), ne = g.edges.size();
  std::vector<std::vector<std::pair<size_t, size_t>>> adj(nf);  // (neighbor face, edge)
  std::vector<std::vector<size_t>> edge_faces(ne);
  for (size_t f = 0; f < nf; ++f)
    for (Dart d : g.faces[f].darts) edge_faces[dart_edge(d)].push_back(f);
  for (size_t e = 0; e < ne; ++e) {
    const auto& fs = edge_faces[e];
    if (fs.size() == 2 && fs[0] != fs[1]) {
      adj[fs[0]].push_back({fs[1], e});
      adj[fs[1]].push_back({fs[0], e});
    }
  }
  std::mt19937_64 rng(seed);
  std::vector<int> x(ne, 0);
  if (seed) {
    for (auto& a : adj) std::shuffle(a.begin(), a.end(), rng);
    for (auto& v : x) v = static_cast<int>(rng() & 1);
  }
  const size_t none = static_cast<size_t>(-1);
  std::vector<size_t> parent_edge(nf, none);
  std::vector<bool> seen(nf, false);
  std::vector<size_t> order;
  for (size_t r : roots) {
    if (seen[r]) continue;
    std::deque<size_t> q{r};
    seen[r] = true;
    while (!q.empty()) {
      size_t f = q.front();
      q.pop_front();
      order.push_back(f);
      for (auto [h, e] : adj[f])
        if (!seen[h]) {
          seen[h] = true;
          parent_edge[h] = e;
          q.push_back(h);
        }
    }
  }
  for (size_t f = 0; f < nf; ++f)
    if (!seen[f]) throw std::domain_error("dual graph has a face unreachable from the roots");
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    size_t f = *it, pe = parent_edge[f];
    if (pe == none) continue;
    x[pe] = 0;
    int s = 0;
    for (Dart d : g.faces[f].darts) s ^= x[dart_edge(d)];
    x[pe] = s ^ rhs[f];
  }
  return x;
}

std::vector<size_t> component_vertex_counts(const EmbeddedGraph& g, std::vector<size_t>& comp) {
  size_t n = 0;
  comp = g.components(&n);
  std::vector<size_t> counts(n, 0);
  for (size_t c : comp) ++counts[c];
  return counts;
}

void fill_report(const EmbeddedGraph& g, FlatnessRule rule, DecorationReport* report) {
  if (!report) return;
  *report = {};
  auto fr = verify_flatness(g, rule);
  for (const auto& f : fr.faces) {
    if (f.infinite) report->infinite_faces_flat &= f.pass;
    else report->finite_faces_flat &= f.pass;
  }
  std::vector<size_t> comp;
  auto counts = component_vertex_counts(g, comp);
  for (size_t c = 0; c < counts.size(); ++c)
    if (counts[c] % 2) report->odd_components.push_back(c);
}

}  // namespace

bool is_bipartite(const EmbeddedGraph& g) {
  try {
    with_bipartite_coloring(g);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

EmbeddedGraph with_bipartite_coloring(const EmbeddedGraph& g) {
  const size_t n = g.vertices.size();
  std::vector<std::vector<size_t>> adj(n);
  for (const auto& e : g.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> side(n, -1);
  for (size_t s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<size_t> q{s};
    while (!q.empty()) {
      size_t v = q.front();
      q.pop_front();
      for (size_t w : adj[v]) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          q.push_back(w);
        } else if (side[w] == side[v]) {
          throw std::domain_error("graph is not bipartite");
        }
      }
    }
  }
  EmbeddedGraph out = g;
  for (size_t v = 0; v < n; ++v) out.vertices[v].color = side[v] ? Color::White : Color::Black;
  return out;
}

EmbeddedGraph kasteleyn_percus_sign(const EmbeddedGraph& g, const DecorationOptions& opt,
                                    DecorationReport* report) {
  if (g.surface != Surface::Sphere) throw std::domain_error("Percus signs need a sphere embedding");
  EmbeddedGraph out = g;
  if (!g.is_bipartite_colored()) {
    bool any = std::any_of(g.vertices.begin(), g.vertices.end(),
                           [](const Vertex& v) { return v.color != Color::None; });
    if (any) throw std::domain_error("coloring is not a proper bipartition");
    out = with_bipartite_coloring(g);
  }
  std::vector<int> rhs(g.faces.size());
  for (size_t f = 0; f < g.faces.size(); ++f) {
    size_t len = g.faces[f].darts.size();
    if (len % 2) throw std::domain_error("odd face in a bipartite graph");
    rhs[f] = static_cast<int>((len / 2 + 1) % 2);
  }
  auto x = solve_face_parities(out, rhs, g.infinite_faces, opt.seed);
  for (size_t e = 0; e < out.edges.size(); ++e) out.edges[e].sign = x[e] ? -1 : 1;
  fill_report(out, FlatnessRule::Percus, report);
  return out;
}

EmbeddedGraph kasteleyn_orient(const EmbeddedGraph& g, const DecorationOptions& opt,
                               DecorationReport* report) {
  std::vector<size_t> roots = g.infinite_faces;
  if (g.surface == Surface::Projective) {
    for (const auto& f : g.faces)
      if (f.darts.size() % 2)
        throw std::domain_error("projective graph has an odd face (contractible odd cycle)");
    if (is_bipartite(g)) throw std::domain_error("projective graph is globally bipartite");
    roots = {0};
  }
  std::vector<int> rhs(g.faces.size());
  for (size_t f = 0; f < g.faces.size(); ++f) {
    int s = 1;
    for (Dart d : g.faces[f].darts) s ^= static_cast<int>(d & 1);
    rhs[f] = s;
  }
  if (g.faces.empty()) roots.clear();
  auto x = solve_face_parities(g, rhs, roots, opt.seed);
  EmbeddedGraph out = g;
  for (size_t e = 0; e < out.edges.size(); ++e) out.edges[e].orientation = x[e] ? -1 : 1;
  if (g.surface == Surface::Projective) {
    auto fr = verify_flatness(out, FlatnessRule::Clockwise);
    if (!fr.flat) throw std::domain_error("no Kasteleyn-flat orientation for this projective embedding");
  }
  fill_report(out, FlatnessRule::Clockwise, report);
  return out;
}

EmbeddedGraph orientation_from_signs(const EmbeddedGraph& g) {
  EmbeddedGraph out = g;
  for (auto& e : out.edges) {
    if (e.sign == 0) throw std::domain_error("edge without a sign");
    bool u_black = out.vertices[e.u].color == Color::Black;
    e.orientation = (u_black == (e.sign > 0)) ? 1 : -1;
  }
  return out;
}

FlatnessReport verify_flatness(const EmbeddedGraph& g, FlatnessRule rule) {
  FlatnessReport rep;
  if (rule == FlatnessRule::Auto) {
    bool oriented = std::any_of(g.edges.begin(), g.edges.end(),
                                [](const Edge& e) { return e.orientation != 0; });
    rule = oriented ? FlatnessRule::Clockwise : FlatnessRule::Percus;
  }
  rep.rule = rule;
  std::vector<size_t> comp;
  auto counts = component_vertex_counts(g, comp);
  for (size_t f = 0; f < g.faces.size(); ++f) {
    const auto& ds = g.faces[f].darts;
    FaceFlatness r;
    r.face = f;
    r.infinite = g.surface == Surface::Sphere && g.is_infinite(f);
    r.length = ds.size();
    for (Dart d : ds) {
      const Edge& e = g.edges[dart_edge(d)];
      if (rule == FlatnessRule::Percus) r.count += e.sign < 0;
      else r.count += (e.orientation >= 0) != dart_forward(d);
    }
    bool ok_shape = true;
    if (rule == FlatnessRule::Percus) {
      ok_shape = r.length % 2 == 0;
      r.required_odd = r.length % 4 == 0;
    }
    r.pass = ok_shape && ((r.count % 2 == 1) == r.required_odd);
    if (r.infinite) r.counted = counts[comp[g.tail(ds[0])]] % 2 == 0;
    if (r.counted) rep.flat &= r.pass;
    rep.faces.push_back(r);
  }
  return rep;
}

std::vector<size_t> black_vertices(const EmbeddedGraph& g) {
  std::vector<size_t> out;
  for (size_t v = 0; v < g.vertices.size(); ++v)
    if (g.vertices[v].color == Color::Black) out.push_back(v);
  return out;
}

std::vector<size_t> white_vertices(const EmbeddedGraph& g) {
  std::vector<size_t> out;
  for (size_t v = 0; v < g.vertices.size(); ++v)
    if (g.vertices[v].color == Color::White) out.push_back(v);
  return out;
}

Matrix<LaurentPoly> adjacency_matrix(const EmbeddedGraph& g, MatrixMode mode) {
  if (mode == MatrixMode::Bipartite) {
    auto bl = black_vertices(g), wh = white_vertices(g);
    if (bl.size() + wh.size() != g.vertices.size())
      throw std::domain_error("bipartite matrix needs every vertex colored");
    std::vector<size_t> index(g.vertices.size());
    for (size_t i = 0; i < bl.size(); ++i) index[bl[i]] = i;
    for (size_t j = 0; j < wh.size(); ++j) index[wh[j]] = j;
    Matrix<LaurentPoly> m(bl.size(), wh.size());
    for (const auto& e : g.edges) {
      if (e.u == e.v) continue;
      if (e.sign == 0) throw std::domain_error("bipartite matrix needs Percus signs");
      Color cu = g.vertices[e.u].color;
      if (cu == g.vertices[e.v].color) throw std::domain_error("edge joins equal colors");
      size_t b = cu == Color::Black ? e.u : e.v, w = cu == Color::Black ? e.v : e.u;
      if (e.sign > 0) m(index[b], index[w]) += e.weight;
      else m(index[b], index[w]) -= e.weight;
    }
    return m;
  }
  const size_t n = g.vertices.size();
  Matrix<LaurentPoly> a(n, n);
  for (const auto& e : g.edges) {
    if (e.u == e.v) continue;
    if (e.orientation == 0) throw std::domain_error("alternating matrix needs an orientation");
    size_t s = e.orientation > 0 ? e.u : e.v, t = e.orientation > 0 ? e.v : e.u;
    a(s, t) += e.weight;
    a(t, s) -= e.weight;
  }
  return a;
}

}  // namespace kast
