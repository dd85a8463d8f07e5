#include "kast/hexagon.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include "kast/polygamy.hpp"

namespace kast {

std::string Cell::label() const {
  return std::string(up ? "U(" : "D(") + std::to_string(i) + "," + std::to_string(j) + ")";
}

bool operator<(const Cell& x, const Cell& y) {
  return std::tie(x.j, x.i, x.up) < std::tie(y.j, y.i, y.up);
}

namespace {

using Point = std::array<long, 2>;

std::array<Point, 3> corners(const Cell& c) {
  if (c.up) return {Point{c.i, c.j}, Point{c.i + 1, c.j}, Point{c.i, c.j + 1}};
  return {Point{c.i + 1, c.j}, Point{c.i, c.j + 1}, Point{c.i + 1, c.j + 1}};
}

Cell cell_from_corners(const std::array<Point, 3>& p) {
  long jmin = std::min({p[0][1], p[1][1], p[2][1]});
  std::vector<long> low;
  for (const auto& x : p)
    if (x[1] == jmin) low.push_back(x[0]);
  if (low.size() == 2) return {std::min(low[0], low[1]), jmin, true};
  return {low[0] - 1, jmin, false};
}

// Lattice affine map x -> m x + t in the (e1, e2) basis.
struct Affine {
  long m[2][2] = {{1, 0}, {0, 1}};
  long t[2] = {0, 0};

  Point apply(const Point& p) const {
    return {m[0][0] * p[0] + m[0][1] * p[1] + t[0], m[1][0] * p[0] + m[1][1] * p[1] + t[1]};
  }
  Cell apply(const Cell& c) const {
    auto p = corners(c);
    return cell_from_corners({apply(p[0]), apply(p[1]), apply(p[2])});
  }
  long det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
  // (*this) o o
  Affine after(const Affine& o) const {
    Affine r;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
      r.t[i] = m[i][0] * o.t[0] + m[i][1] * o.t[1] + t[i];
    }
    return r;
  }
  friend bool operator==(const Affine& x, const Affine& y) {
    return std::equal(&x.m[0][0], &x.m[0][0] + 4, &y.m[0][0]) && x.t[0] == y.t[0] && x.t[1] == y.t[1];
  }
};

Affine make_affine(long m00, long m01, long m10, long m11, long t0, long t1) {
  Affine f;
  f.m[0][0] = m00;
  f.m[0][1] = m01;
  f.m[1][0] = m10;
  f.m[1][1] = m11;
  f.t[0] = t0;
  f.t[1] = t1;
  return f;
}

// Rotation by 120 degrees about the lattice point (0, a) of Z(a,a,a).
Affine rho(long a) { return make_affine(-1, -1, 1, 0, a, a); }
// Rotation by 180 degrees about the hexagon center ((a-c)/2, (b+c)/2).
Affine kappa(long a, long b, long c) { return make_affine(-1, 0, 0, -1, a - c, b + c); }
// Reflection in the horizontal lattice line j = b through the corners joining
// the b and c sides (requires b = c).
Affine tau(long b) { return make_affine(1, 1, 0, -1, -b, 2 * b); }

std::vector<Affine> generators(SymmetryGroup g, long a, long b, long c) {
  switch (g) {
    case SymmetryGroup::Trivial: return {};
    case SymmetryGroup::Rho: return {rho(a)};
    case SymmetryGroup::Kappa: return {kappa(a, b, c)};
    case SymmetryGroup::Tau: return {tau(b)};
    case SymmetryGroup::KappaTau: return {kappa(a, b, c).after(tau(b))};
    case SymmetryGroup::RhoKappa: return {rho(a), kappa(a, b, c)};
    case SymmetryGroup::RhoKappaTau: return {rho(a), kappa(a, b, c).after(tau(b))};
    case SymmetryGroup::TauKappa: return {tau(b), kappa(a, b, c)};
    case SymmetryGroup::TauRhoKappa: return {tau(b), rho(a), kappa(a, b, c)};
    case SymmetryGroup::TauRho: return {tau(b), rho(a)};
  }
  return {};
}

std::vector<Affine> group_closure(const std::vector<Affine>& gens) {
  std::vector<Affine> elems{Affine{}};
  for (size_t k = 0; k < elems.size(); ++k)
    for (const auto& g : gens) {
      Affine h = g.after(elems[k]);
      if (std::find(elems.begin(), elems.end(), h) == elems.end()) elems.push_back(h);
      if (elems.size() > 48) throw std::logic_error("symmetry group does not close");
    }
  return elems;
}

bool needs_rho(SymmetryGroup g) {
  return g == SymmetryGroup::Rho || g == SymmetryGroup::RhoKappa || g == SymmetryGroup::RhoKappaTau ||
         g == SymmetryGroup::TauRhoKappa || g == SymmetryGroup::TauRho;
}
bool needs_tau(SymmetryGroup g) {
  return g == SymmetryGroup::Tau || g == SymmetryGroup::KappaTau || g == SymmetryGroup::RhoKappaTau ||
         g == SymmetryGroup::TauKappa || g == SymmetryGroup::TauRhoKappa || g == SymmetryGroup::TauRho;
}

void check_group_dims(SymmetryGroup g, long a, long b, long c) {
  if (a < 1 || b < 1 || c < 1) throw std::domain_error("hexagon dimensions must be positive");
  if (needs_rho(g) && !(a == b && b == c)) throw std::domain_error("rho requires a = b = c");
  if (needs_tau(g) && b != c) throw std::domain_error("tau requires b = c");
  bool has_kappa_tau = g == SymmetryGroup::KappaTau || g == SymmetryGroup::RhoKappaTau ||
                       g == SymmetryGroup::TauKappa || g == SymmetryGroup::TauRhoKappa;
  if (has_kappa_tau && a % 2 != 0) throw std::domain_error("kappa-tau requires even a");
}

// The group acting on a cell graph by vertex and edge permutations.
struct Action {
  std::vector<Affine> elems;
  std::vector<std::vector<size_t>> vperm, eperm;
};

Action make_action(const CellGraph& z, const std::vector<Affine>& elems) {
  std::map<Cell, size_t> index;
  for (size_t v = 0; v < z.cells.size(); ++v) index[z.cells[v]] = v;
  std::map<std::pair<size_t, size_t>, size_t> edge_index;
  for (size_t e = 0; e < z.graph.edges.size(); ++e)
    edge_index[{z.graph.edges[e].u, z.graph.edges[e].v}] = e;
  Action act;
  act.elems = elems;
  for (const auto& g : elems) {
    std::vector<size_t> vp(z.cells.size()), ep(z.graph.edges.size());
    for (size_t v = 0; v < z.cells.size(); ++v) {
      auto it = index.find(g.apply(z.cells[v]));
      if (it == index.end()) throw std::domain_error("region is not invariant under the group");
      vp[v] = it->second;
    }
    for (size_t e = 0; e < z.graph.edges.size(); ++e) {
      size_t u = vp[z.graph.edges[e].u], v = vp[z.graph.edges[e].v];
      auto it = edge_index.find({u, v});
      if (it == edge_index.end()) it = edge_index.find({v, u});
      if (it == edge_index.end()) throw std::logic_error("edge image missing");
      ep[e] = it->second;
    }
    act.vperm.push_back(std::move(vp));
    act.eperm.push_back(std::move(ep));
  }
  return act;
}

bool inside_hexagon(const Point& p, long a, long b, long c, long d) {
  long i = p[0], j = p[1];
  return j >= 0 && i <= a && i + j <= a + b + d && j <= b + c + d && i >= -c - d && i + j >= 0;
}

std::vector<Cell> hexagon_cell_list(long a, long b, long c, long d) {
  std::vector<Cell> cells;
  for (long j = -1; j <= b + c + d + 1; ++j)
    for (long i = -c - d - 1; i <= a + 1; ++i)
      for (bool up : {true, false}) {
        Cell cell{i, j, up};
        auto p = corners(cell);
        if (std::all_of(p.begin(), p.end(), [&](const Point& x) { return inside_hexagon(x, a, b, c, d); }))
          cells.push_back(cell);
      }
  return cells;
}

std::pair<double, double> cartesian(double i, double j) {
  return {i + j / 2, j * std::sqrt(3.0) / 2};
}

// Exponent of a monomial weight q^k with coefficient 1.
long monomial_exponent(const LaurentPoly& w) {
  if (!w.is_monomial() || w.lead() != 1) throw std::domain_error("orbit weights need monomial edge weights");
  return w.low();
}

void set_orbit_weights(EmbeddedGraph& out, const std::vector<size_t>& edge_origin, const EmbeddedGraph& z,
                       const Action& act, WeightMode mode) {
  if (mode == WeightMode::None) return;
  for (size_t e = 0; e < out.edges.size(); ++e) {
    size_t o = edge_origin[e];
    if (o == kNoOrigin) continue;
    std::set<size_t> orbit;
    for (const auto& ep : act.eperm) orbit.insert(ep[o]);
    if (mode == WeightMode::Cube) {
      LaurentPoly w = 1;
      for (size_t x : orbit) w *= z.edges[x].weight;
      out.edges[e].weight = w;
    } else {
      long sum = 0;
      for (size_t x : orbit) sum += monomial_exponent(z.edges[x].weight);
      if (sum % static_cast<long>(orbit.size()) != 0)
        throw std::domain_error("orbit weights are not integral for this group");
      out.edges[e].weight = LaurentPoly::q(sum / static_cast<long>(orbit.size()));
    }
  }
}

std::vector<size_t> compose(const std::vector<size_t>& outer, const std::vector<size_t>& inner) {
  std::vector<size_t> r(inner.size());
  for (size_t k = 0; k < inner.size(); ++k) r[k] = inner[k] == kNoOrigin ? kNoOrigin : outer[inner[k]];
  return r;
}

// Quotient of g by a group of orientation-preserving symmetries acting freely
// on vertices. Faces are the face orbits; a face fixed by a rotation wraps
// once around its cone point. edge_origin gets the representative edge.
EmbeddedGraph rotation_quotient(const EmbeddedGraph& g, const std::vector<std::vector<size_t>>& vperm,
                                const std::vector<std::vector<size_t>>& eperm, std::vector<size_t>* edge_origin) {
  const size_t nv = g.vertices.size(), ne = g.edges.size(), order = vperm.size();
  std::vector<size_t> vrep(nv), erep(ne);
  for (size_t v = 0; v < nv; ++v) {
    vrep[v] = v;
    for (const auto& p : vperm) vrep[v] = std::min(vrep[v], p[v]);
  }
  for (size_t e = 0; e < ne; ++e) {
    erep[e] = e;
    for (const auto& p : eperm) erep[e] = std::min(erep[e], p[e]);
  }
  for (size_t k = 1; k < order; ++k)
    for (size_t v = 0; v < nv; ++v)
      if (vperm[k][v] == v) throw std::domain_error("rotation fixes a vertex");

  bool keep_colors = true;
  for (const auto& p : vperm)
    for (size_t v = 0; v < nv; ++v) keep_colors = keep_colors && g.vertices[p[v]].color == g.vertices[v].color;

  EmbeddedGraph out;
  std::vector<size_t> qv(nv, kNoOrigin), qe(ne, kNoOrigin);
  for (size_t v = 0; v < nv; ++v)
    if (vrep[v] == v) {
      Vertex x = g.vertices[v];
      if (!keep_colors) x.color = Color::None;
      qv[v] = out.add_vertex(x);
    }
  if (edge_origin) edge_origin->clear();
  for (size_t e = 0; e < ne; ++e)
    if (erep[e] == e) {
      size_t u = qv[vrep[g.edges[e].u]], v = qv[vrep[g.edges[e].v]];
      if (u == v) throw std::domain_error("an edge joins a vertex to its own image");
      qe[e] = out.edges.size();
      out.add_edge(u, v, g.edges[e].weight);
      if (edge_origin) edge_origin->push_back(e);
    }

  auto quotient_dart = [&](Dart d) {
    size_t e = dart_edge(d), e0 = erep[e];
    for (size_t k = 0; k < order; ++k)
      if (eperm[k][e0] == e) {
        bool fwd = g.tail(d) == vperm[k][g.edges[e0].u];
        return make_dart(qe[e0], fwd);
      }
    throw std::logic_error("edge orbit lookup failed");
  };
  std::vector<size_t> dart_face(2 * ne, kNoOrigin);
  for (size_t f = 0; f < g.faces.size(); ++f)
    for (Dart d : g.faces[f].darts) dart_face[d] = f;
  auto image_face = [&](size_t k, size_t f) {
    Dart d = g.faces[f].darts.front();
    size_t e = eperm[k][dart_edge(d)];
    bool fwd = g.edges[e].u == vperm[k][g.tail(d)];
    return dart_face[make_dart(e, fwd)];
  };
  std::vector<size_t> frep(g.faces.size()), qf(g.faces.size(), kNoOrigin);
  for (size_t f = 0; f < g.faces.size(); ++f) {
    frep[f] = f;
    for (size_t k = 0; k < order; ++k) frep[f] = std::min(frep[f], image_face(k, f));
  }
  for (size_t f = 0; f < g.faces.size(); ++f) {
    if (frep[f] != f) continue;
    size_t stab = 0;
    for (size_t k = 0; k < order; ++k) stab += image_face(k, f) == f;
    const auto& walk = g.faces[f].darts;
    if (walk.size() % stab != 0) throw std::logic_error("face length not divisible by its stabilizer");
    Face q;
    for (size_t t = 0; t < walk.size() / stab; ++t) q.darts.push_back(quotient_dart(walk[t]));
    qf[f] = out.faces.size();
    out.faces.push_back(std::move(q));
  }
  for (size_t f : g.infinite_faces) {
    size_t x = qf[frep[f]];
    if (std::find(out.infinite_faces.begin(), out.infinite_faces.end(), x) == out.infinite_faces.end())
      out.infinite_faces.push_back(x);
  }
  std::sort(out.infinite_faces.begin(), out.infinite_faces.end());
  auto check = validate_embedding(out);
  if (!check.ok) throw std::logic_error("rotation quotient: " + check.error);
  return out;
}

struct HexBuild {
  CellGraph z;
  Action act;
};

HexBuild weighted_hexagon(const FamilySpec& s) {
  check_group_dims(s.group, s.a, s.b, s.c);
  HexBuild h{hexagon_cells(s.a, s.b, s.c), {}};
  if (s.weights != WeightMode::None) apply_cube_weights(h.z);
  h.act = make_action(h.z, group_closure(generators(s.group, s.a, s.b, s.c)));
  return h;
}

size_t central_edge(const HexBuild& h) {
  for (size_t k = 0; k < h.act.elems.size(); ++k) {
    const Affine& g = h.act.elems[k];
    if (g.det() != 1 || g.m[0][0] != -1 || g.m[1][1] != -1) continue;
    for (size_t e = 0; e < h.z.graph.edges.size(); ++e)
      if (h.act.eperm[k][e] == e) return e;
  }
  throw std::logic_error("no central edge");
}

EmbeddedGraph build_symmetric(const FamilySpec& s, bool impossible) {
  HexBuild h = weighted_hexagon(s);
  const EmbeddedGraph& z = h.z.graph;
  const size_t order = h.act.elems.size();
  bool has_reflection = std::any_of(h.act.elems.begin(), h.act.elems.end(), [](const Affine& g) { return g.det() < 0; });

  if (order == 1) {
    if (impossible) throw std::domain_error("the trivial group has no impossible variant");
    return z;
  }

  if (!has_reflection) {
    std::vector<bool> kept(z.vertices.size(), true);
    std::vector<size_t> dropped;
    bool has_kappa = s.group == SymmetryGroup::Kappa || s.group == SymmetryGroup::RhoKappa;
    bool lattice_center = (s.a - s.c) % 2 == 0 && (s.b + s.c) % 2 == 0;
    if (has_kappa && !lattice_center) {
      // The center is the midpoint of a lattice edge; its dual edge e is fixed.
      int evens = (s.a % 2 == 0) + (s.b % 2 == 0) + (s.c % 2 == 0);
      size_t e = central_edge(h);
      dropped.push_back(e);
      bool drop_vertices = (evens == 1) != impossible;
      if (drop_vertices) kept[z.edges[e].u] = kept[z.edges[e].v] = false;
    } else {
      bool odd_quotient = (z.vertices.size() / order) % 2 == 1;
      if (odd_quotient != impossible)
        throw std::domain_error(impossible ? "no impossible variant for these dimensions"
                                           : "quotient has an odd number of vertices; use the impossible variant");
    }
    // An edge inside a vertex orbit shares a vertex with one of its images, so
    // no invariant matching uses it.
    for (size_t e = 0; e < z.edges.size(); ++e)
      for (size_t k = 1; k < order; ++k)
        if (h.act.vperm[k][z.edges[e].u] == z.edges[e].v && h.act.eperm[k][e] != e) {
          dropped.push_back(e);
          break;
        }
    Provenance prov;
    EmbeddedGraph reduced = induced_subgraph(z, kept, dropped, &prov);
    std::vector<size_t> vinv(z.vertices.size(), kNoOrigin), einv(z.edges.size(), kNoOrigin);
    for (size_t v = 0; v < prov.vertex_origin.size(); ++v) vinv[prov.vertex_origin[v]] = v;
    for (size_t e = 0; e < prov.edge_origin.size(); ++e) einv[prov.edge_origin[e]] = e;
    std::vector<std::vector<size_t>> vp, ep;
    for (size_t k = 0; k < order; ++k) {
      vp.push_back(compose(vinv, compose(h.act.vperm[k], prov.vertex_origin)));
      ep.push_back(compose(einv, compose(h.act.eperm[k], prov.edge_origin)));
    }
    std::vector<size_t> rep;
    EmbeddedGraph q = rotation_quotient(reduced, vp, ep, &rep);
    set_orbit_weights(q, compose(prov.edge_origin, rep), z, h.act, s.weights);
    return q;
  }

  // Reflection groups: delete the cells on vertex-fixing mirrors, cut the edges
  // across edge-bisecting mirrors and keep one sector.
  std::vector<bool> deleted(z.vertices.size(), false), is_cut(z.edges.size(), false);
  bool any_cut_mirror = false;
  for (size_t k = 0; k < order; ++k) {
    if (h.act.elems[k].det() > 0) continue;
    bool fixes_cell = false;
    for (size_t v = 0; v < z.vertices.size(); ++v) fixes_cell = fixes_cell || h.act.vperm[k][v] == v;
    if (fixes_cell) {
      for (size_t v = 0; v < z.vertices.size(); ++v)
        if (h.act.vperm[k][v] == v) deleted[v] = true;
    } else {
      any_cut_mirror = true;
      for (size_t e = 0; e < z.edges.size(); ++e)
        if (h.act.eperm[k][e] == e) is_cut[e] = true;
    }
  }
  if (impossible && !any_cut_mirror) throw std::domain_error("no impossible variant for this group");

  // Component of the smallest surviving vertex.
  std::vector<std::vector<size_t>> adj(z.vertices.size());
  for (size_t e = 0; e < z.edges.size(); ++e) {
    const Edge& ed = z.edges[e];
    if (is_cut[e] || deleted[ed.u] || deleted[ed.v]) continue;
    adj[ed.u].push_back(ed.v);
    adj[ed.v].push_back(ed.u);
  }
  std::vector<bool> kept(z.vertices.size(), false);
  size_t start = 0;
  while (start < z.vertices.size() && deleted[start]) ++start;
  if (start == z.vertices.size()) throw std::domain_error("every vertex lies on a mirror");
  std::vector<size_t> stack{start};
  kept[start] = true;
  while (!stack.empty()) {
    size_t v = stack.back();
    stack.pop_back();
    for (size_t w : adj[v])
      if (!kept[w]) kept[w] = true, stack.push_back(w);
  }
  std::vector<size_t> tied;
  for (size_t e = 0; e < z.edges.size(); ++e) {
    const Edge& ed = z.edges[e];
    if (is_cut[e] && !deleted[ed.u] && !deleted[ed.v] && kept[ed.u] != kept[ed.v]) tied.push_back(e);
  }
  Provenance prov;
  EmbeddedGraph q = tied.empty() ? induced_subgraph(z, kept, {}, &prov)
                                 : tie_half_edges(z, kept, tied, impossible, &prov);
  set_orbit_weights(q, prov.edge_origin, z, h.act, s.weights);
  return q;
}

}  // namespace

CellGraph cell_graph(std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  CellGraph out;
  out.cells = cells;
  std::map<Cell, size_t> index;
  for (const Cell& c : cells) {
    auto [x, y] = cartesian(c.i + (c.up ? 1.0 / 3 : 2.0 / 3), c.j + (c.up ? 1.0 / 3 : 2.0 / 3));
    index[c] = out.graph.add_vertex(VertexKind::Monogamous, c.up ? Color::Black : Color::White, c.label(), x, y);
  }
  for (const Cell& c : cells) {
    if (!c.up) continue;
    for (const Cell& n : {Cell{c.i, c.j - 1, false}, Cell{c.i - 1, c.j, false}, Cell{c.i, c.j, false}}) {
      auto it = index.find(n);
      if (it != index.end()) out.graph.add_edge(index[c], it->second);
    }
  }
  embed_from_positions(out.graph);
  return out;
}

CellGraph hexagon_cells(long a, long b, long c) {
  if (a < 1 || b < 1 || c < 1) throw std::domain_error("hexagon dimensions must be positive");
  return cell_graph(hexagon_cell_list(a, b, c, 0));
}

EmbeddedGraph build_hexagon_graph(long a, long b, long c) { return hexagon_cells(a, b, c).graph; }

CellGraph hexagon_minus_triangle_cells(long a, long b, long c, long d, long e) {
  if (a < 0 || b < 0 || c < 0 || a + d < 0 || b + d < 0 || c + d < 0)
    throw std::domain_error("hexagon sides must be nonnegative");
  std::vector<Cell> cells = hexagon_cell_list(a, b, c, d);
  if (cells.empty()) throw std::domain_error("empty hexagon");
  if (e == 0) return cell_graph(cells);
  // Positive e removes a triangle of the orientation in excess when d > 0.
  bool remove_up = e < 0;
  long size = std::labs(e);
  auto hex = [&](const Point& p) { return inside_hexagon(p, a, b, c, d); };
  double cx = 0, cy = 0;
  for (Point p : {Point{0, 0}, Point{a, 0}, Point{a, b + d}, Point{a - c, b + c + d}, Point{-c - d, b + c + d},
                  Point{-c - d, c + d}}) {
    auto [x, y] = cartesian(static_cast<double>(p[0]), static_cast<double>(p[1]));
    cx += x / 6;
    cy += y / 6;
  }
  bool found = false;
  double best = 0;
  Point corner{};
  for (long j0 = -size; j0 <= b + c + d + size; ++j0)
    for (long i0 = -c - d - size; i0 <= a + size; ++i0) {
      std::array<Point, 3> t = remove_up
                                   ? std::array<Point, 3>{Point{i0, j0}, Point{i0 + size, j0}, Point{i0, j0 + size}}
                                   : std::array<Point, 3>{Point{i0 + size, j0}, Point{i0, j0 + size},
                                                          Point{i0 + size, j0 + size}};
      if (!std::all_of(t.begin(), t.end(), hex)) continue;
      double fi = (t[0][0] + t[1][0] + t[2][0]) / 3.0, fj = (t[0][1] + t[1][1] + t[2][1]) / 3.0;
      auto [x, y] = cartesian(fi, fj);
      double dist = std::hypot(x - cx, y - cy);
      if (!found || dist < best - 1e-9) found = true, best = dist, corner = {i0, j0};
    }
  if (!found) throw std::domain_error("the removed triangle does not fit in the hexagon");
  auto in_triangle = [&](const Point& p) {
    long i0 = corner[0], j0 = corner[1];
    if (remove_up) return p[0] >= i0 && p[1] >= j0 && p[0] + p[1] <= i0 + j0 + size;
    return p[0] <= i0 + size && p[1] <= j0 + size && p[0] + p[1] >= i0 + j0 + size;
  };
  std::vector<Cell> kept;
  for (const Cell& cell : cells) {
    auto p = corners(cell);
    if (!std::all_of(p.begin(), p.end(), in_triangle)) kept.push_back(cell);
  }
  return cell_graph(kept);
}

EmbeddedGraph build_hexagon_minus_triangle(long a, long b, long c, long d, long e) {
  return hexagon_minus_triangle_cells(a, b, c, d, e).graph;
}

void apply_cube_weights(CellGraph& z) {
  std::map<long, long> row_min;
  std::vector<std::pair<size_t, Cell>> crossing;
  for (size_t e = 0; e < z.graph.edges.size(); ++e) {
    const Cell& u = z.cells[z.graph.edges[e].u];
    const Cell& v = z.cells[z.graph.edges[e].v];
    if (u.up && !v.up && v.i == u.i && v.j == u.j - 1) {
      crossing.push_back({e, u});
      auto it = row_min.find(u.j);
      row_min[u.j] = it == row_min.end() ? u.i : std::min(it->second, u.i);
    }
  }
  for (auto& [e, u] : crossing) z.graph.edges[e].weight = LaurentPoly::q(u.i - row_min[u.j]);
}

EmbeddedGraph symmetry_quotient(const FamilySpec& spec) {
  return build_symmetric(spec, spec.wrong_parity);
}

EmbeddedGraph impossible_variant(const FamilySpec& spec) {
  if (spec.variant == Variant::HexMinusTriangle) {
    if (spec.d == spec.e) throw std::domain_error("d = e is not an impossible hexagon");
    return build_hexagon_minus_triangle(spec.a, spec.b, spec.c, spec.d, spec.e);
  }
  return build_symmetric(spec, true);
}

EmbeddedGraph apply_q_weights(const EmbeddedGraph& z, const FamilySpec& spec, WeightMode mode) {
  FamilySpec s = spec;
  s.weights = mode;
  EmbeddedGraph w = build_family_graph(s);
  if (w.vertices.size() != z.vertices.size() || w.edges.size() != z.edges.size())
    throw std::domain_error("graph was not built for this spec");
  EmbeddedGraph out = z;
  for (size_t e = 0; e < z.edges.size(); ++e) {
    if (w.edges[e].u != z.edges[e].u || w.edges[e].v != z.edges[e].v)
      throw std::domain_error("graph was not built for this spec");
    out.edges[e].weight = w.edges[e].weight;
  }
  return out;
}

BigInteger count_symmetric_matchings(const FamilySpec& spec, size_t guard) {
  HexBuild h = weighted_hexagon(spec);
  return count_invariant_matchings(h.z.graph, h.act.eperm, guard);
}

LaurentPoly plane_partition_generating_function(long a, long b, long c, SymmetryGroup g, WeightMode mode) {
  check_group_dims(g, a, b, c);
  // Base b x c, heights at most a. Cubes (x, y, z) with z < h[x][y].
  const long nb = b, nc = c, na = a;
  bool orbit = mode == WeightMode::Orbit && g != SymmetryGroup::Trivial;
  if (orbit && g != SymmetryGroup::Tau) throw std::domain_error("orbit counting is implemented for tau only");
  auto id = [&](long x, long y, long z) { return static_cast<size_t>((x * nc + y) * na + z); };
  const size_t total = static_cast<size_t>(nb * nc * na);
  using Cubes = std::vector<bool>;
  auto transpose = [&](const Cubes& s) {
    Cubes r(total);
    for (long x = 0; x < nb; ++x)
      for (long y = 0; y < nc; ++y)
        for (long z = 0; z < na; ++z) r[id(y, x, z)] = s[id(x, y, z)];
    return r;
  };
  auto cycle = [&](const Cubes& s) {
    Cubes r(total);
    for (long x = 0; x < nb; ++x)
      for (long y = 0; y < nc; ++y)
        for (long z = 0; z < na; ++z) r[id(y, z, x)] = s[id(x, y, z)];
    return r;
  };
  auto complement = [&](const Cubes& s) {
    Cubes r(total);
    for (long x = 0; x < nb; ++x)
      for (long y = 0; y < nc; ++y)
        for (long z = 0; z < na; ++z) r[id(nb - 1 - x, nc - 1 - y, na - 1 - z)] = !s[id(x, y, z)];
    return r;
  };
  std::vector<std::function<Cubes(const Cubes&)>> gens;
  switch (g) {
    case SymmetryGroup::Trivial: break;
    case SymmetryGroup::Rho: gens = {cycle}; break;
    case SymmetryGroup::Kappa: gens = {complement}; break;
    case SymmetryGroup::Tau: gens = {transpose}; break;
    case SymmetryGroup::KappaTau: gens = {[&](const Cubes& s) { return complement(transpose(s)); }}; break;
    case SymmetryGroup::RhoKappa: gens = {cycle, complement}; break;
    case SymmetryGroup::RhoKappaTau:
      gens = {cycle, [&](const Cubes& s) { return complement(transpose(s)); }};
      break;
    case SymmetryGroup::TauKappa: gens = {transpose, complement}; break;
    case SymmetryGroup::TauRhoKappa: gens = {transpose, cycle, complement}; break;
    case SymmetryGroup::TauRho: gens = {transpose, cycle}; break;
  }
  LaurentPoly sum;
  std::vector<long> h(static_cast<size_t>(nb * nc), 0);
  std::function<void(long)> rec = [&](long k) {
    if (k == nb * nc) {
      Cubes s(total);
      long cubes = 0, diagonal = 0;
      for (long x = 0; x < nb; ++x)
        for (long y = 0; y < nc; ++y) {
          long hv = h[static_cast<size_t>(x * nc + y)];
          cubes += hv;
          if (x == y) diagonal += hv;
          for (long z = 0; z < hv; ++z) s[id(x, y, z)] = true;
        }
      for (const auto& f : gens)
        if (f(s) != s) return;
      sum += LaurentPoly::q(orbit ? (cubes + diagonal) / 2 : cubes);
      return;
    }
    long x = k / nc, y = k % nc;
    long cap = na;
    if (x > 0) cap = std::min(cap, h[static_cast<size_t>((x - 1) * nc + y)]);
    if (y > 0) cap = std::min(cap, h[static_cast<size_t>(x * nc + y - 1)]);
    for (long v = 0; v <= cap; ++v) {
      h[static_cast<size_t>(k)] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return sum;
}

}  // namespace kast
