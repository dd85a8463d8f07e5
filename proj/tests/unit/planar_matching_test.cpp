#include <gtest/gtest.h>

#include <cstdlib>
#include <random>
#include <set>

#include "kast/cokernel.hpp"
#include "kast/det.hpp"
#include "kast/exact_matrix.hpp"
#include "kast/graph_io.hpp"
#include "kast/kasteleyn.hpp"
#include "kast/matching.hpp"
#include "kast/polygamy.hpp"
#include "test_graphs.hpp"

namespace kast {
namespace {

using testing::grid;
using MZ = Matrix<BigInteger>;

MZ integer_matrix(const EmbeddedGraph& g, MatrixMode mode) { return specialize(adjacency_matrix(g, mode), 1); }

BigInteger abs_det(const MZ& m) { return abs(determinant(m)); }
BigInteger abs_pf(const MZ& m) { return abs(pfaffian(m)); }

EmbeddedGraph path(size_t n) {
  EmbeddedGraph g;
  for (size_t i = 0; i < n; ++i) g.add_vertex(VertexKind::Monogamous, Color::None, "", double(i), 0);
  for (size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  embed_from_positions(g);
  return g;
}

// Every matching's signed term in det/Pf carries the same sign.
bool sign_uniform(const EmbeddedGraph& g, MatrixMode mode) {
  std::set<int> signs;
  for_each_matching(g, [&](const std::vector<size_t>& m) {
    signs.insert(matching_sign(g, m, mode));
    return true;
  });
  return signs.size() <= 1;
}

TEST(GraphIo, RoundTripsFixtures) {
  for (const char* name : {"embedding_two_pendants_outside.json", "embedding_one_pendant_inside.json",
                           "embedding_odd_pendant_outside.json", "embedding_odd_pendant_inside.json"}) {
    EmbeddedGraph g = read_graph_file(testing::data_path(name));
    auto check = validate_embedding(g);
    EXPECT_TRUE(check.ok) << name << ": " << check.error;
    std::string once = graph_to_json(g);
    EXPECT_EQ(graph_to_json(graph_from_json(once)), once);
  }
  EXPECT_THROW(graph_from_json("{\"vertices\": 3}"), std::invalid_argument);
  EXPECT_THROW(graph_from_json("not json"), std::invalid_argument);
}

TEST(Embedding, ValidatorRejectsBrokenFaces) {
  EmbeddedGraph g = grid(2, 2);
  EXPECT_TRUE(validate_embedding(g).ok);
  EmbeddedGraph bad = g;
  bad.faces.pop_back();
  EXPECT_FALSE(validate_embedding(bad).ok);
  bad = g;
  std::swap(bad.faces[0].darts[0], bad.faces[0].darts[1]);
  EXPECT_FALSE(validate_embedding(bad).ok);
}

TEST(Percus, PathGraphIsAllPlus) {
  EmbeddedGraph g = kasteleyn_percus_sign(path(4));
  for (const auto& e : g.edges) EXPECT_EQ(e.sign, 1);
}

TEST(Percus, SquareGetsOddMinusCount) {
  EmbeddedGraph g = kasteleyn_percus_sign(grid(2, 2));
  int minus = 0;
  for (const auto& e : g.edges) minus += e.sign < 0;
  EXPECT_EQ(minus % 2, 1);
  EXPECT_TRUE(verify_flatness(g).flat);
  EXPECT_EQ(abs_det(integer_matrix(g, MatrixMode::Bipartite)), 2);
}

TEST(Percus, AllPlusSquareFails) {
  EmbeddedGraph g = with_bipartite_coloring(grid(2, 2));
  for (auto& e : g.edges) e.sign = 1;
  auto rep = verify_flatness(g, FlatnessRule::Percus);
  EXPECT_FALSE(rep.flat);
  for (const auto& f : rep.faces)
    if (!f.infinite) EXPECT_FALSE(f.pass);
}

TEST(Percus, RejectsNonBipartite) {
  EmbeddedGraph g = grid(2, 2);
  g.add_edge(0, 3);
  embed_from_positions(g);
  EXPECT_THROW(kasteleyn_percus_sign(g), std::domain_error);
}

TEST(Percus, OddComponentIsFlagged) {
  DecorationReport rep;
  EmbeddedGraph g = kasteleyn_percus_sign(path(3), {}, &rep);
  ASSERT_EQ(rep.odd_components.size(), 1u);
  EXPECT_TRUE(rep.finite_faces_flat);
  EXPECT_TRUE(verify_flatness(g).flat);
}

TEST(Orient, TriangleWithPendant) {
  EmbeddedGraph g;
  g.add_vertex(VertexKind::Monogamous, Color::None, "", 0, 0);
  g.add_vertex(VertexKind::Monogamous, Color::None, "", 2, 0);
  g.add_vertex(VertexKind::Monogamous, Color::None, "", 1, 2);
  g.add_vertex(VertexKind::Monogamous, Color::None, "", 3, 0);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(1, 3);
  embed_from_positions(g);
  EmbeddedGraph o = kasteleyn_orient(g);
  auto rep = verify_flatness(o, FlatnessRule::Clockwise);
  EXPECT_TRUE(rep.flat);
  for (const auto& f : rep.faces)
    if (!f.infinite) EXPECT_EQ(f.count % 2, 1u);
  EXPECT_EQ(abs_pf(integer_matrix(o, MatrixMode::Alternating)), 1);
}

TEST(Orient, GridTwoByThree) {
  EmbeddedGraph o = kasteleyn_orient(grid(2, 3));
  EXPECT_TRUE(verify_flatness(o).flat);
  EXPECT_EQ(abs_pf(integer_matrix(o, MatrixMode::Alternating)), 3);
  EXPECT_EQ(enumerate_matchings(o).count, 3);
}

TEST(Orient, ProjectiveHemicube) {
  EmbeddedGraph g = testing::hemicube_k4();
  ASSERT_TRUE(validate_embedding(g).ok) << validate_embedding(g).error;
  EmbeddedGraph o = kasteleyn_orient(g);
  EXPECT_TRUE(verify_flatness(o, FlatnessRule::Clockwise).flat);
  EXPECT_EQ(abs_pf(integer_matrix(o, MatrixMode::Alternating)), 3);
  EXPECT_TRUE(sign_uniform(o, MatrixMode::Alternating));
}

TEST(Orient, ProjectiveMoebiusLadder) {
  EmbeddedGraph g = testing::moebius_ladder8();
  ASSERT_TRUE(validate_embedding(g).ok) << validate_embedding(g).error;
  for (uint64_t seed : {0, 1, 2, 3}) {
    EmbeddedGraph o = kasteleyn_orient(g, {seed});
    EXPECT_TRUE(verify_flatness(o).flat);
    EXPECT_EQ(abs_pf(integer_matrix(o, MatrixMode::Alternating)), enumerate_matchings(g).count);
    EXPECT_TRUE(sign_uniform(o, MatrixMode::Alternating));
  }
}

TEST(Orient, ProjectiveRejectsBadInputs) {
  EmbeddedGraph square = testing::projective(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {{0, 1, 2, 3}, {0, 1, 2, 3}});
  EXPECT_THROW(kasteleyn_orient(square), std::domain_error);
  EmbeddedGraph tri = testing::projective(3, {{0, 1}, {1, 2}, {2, 0}}, {{0, 1, 2}, {0, 1, 2}});
  EXPECT_THROW(kasteleyn_orient(tri), std::domain_error);
}

TEST(Adjacency, SmallExamples) {
  EmbeddedGraph g;
  g.add_vertex(VertexKind::Monogamous, Color::Black, "", 0, 0);
  g.add_vertex(VertexKind::Monogamous, Color::White, "", 1, 0);
  g.add_edge(0, 1);
  g.edges[0].sign = 1;
  EXPECT_EQ(integer_matrix(g, MatrixMode::Bipartite), (MZ{{1}}));
  g.add_edge(0, 1);
  g.edges[1].sign = -1;
  EXPECT_EQ(integer_matrix(g, MatrixMode::Bipartite), (MZ{{0}}));
  EmbeddedGraph bare = g;
  bare.edges[1].sign = 0;
  EXPECT_THROW(adjacency_matrix(bare, MatrixMode::Bipartite), std::domain_error);
  EXPECT_THROW(adjacency_matrix(bare, MatrixMode::Alternating), std::domain_error);
}

TEST(Adjacency, AlternatingFromSignsIsTwoCopies) {
  EmbeddedGraph g = kasteleyn_percus_sign(grid(3, 4));
  EmbeddedGraph o = orientation_from_signs(g);
  EXPECT_TRUE(verify_flatness(o, FlatnessRule::Clockwise).flat);
  MZ m = integer_matrix(g, MatrixMode::Bipartite);
  MZ a = integer_matrix(o, MatrixMode::Alternating);
  auto bl = black_vertices(g), wh = white_vertices(g);
  for (size_t i = 0; i < bl.size(); ++i)
    for (size_t j = 0; j < wh.size(); ++j) {
      EXPECT_EQ(a(bl[i], wh[j]), m(i, j));
      EXPECT_EQ(a(wh[j], bl[i]), -m(i, j));
    }
  EXPECT_EQ(cokernel_of(a).torsion.size(), 2 * cokernel_of(m).torsion.size());
}

TEST(Fixtures, EmbeddingDependentCokernels) {
  const std::vector<std::pair<const char*, const char*>> cases = {
      {"embedding_two_pendants_outside.json", "Z/9"},
      {"embedding_one_pendant_inside.json", "Z/3 + Z/3"},
      {"embedding_odd_pendant_outside.json", "Z"},
      {"embedding_odd_pendant_inside.json", "Z + Z/3"},
  };
  for (auto [name, expect] : cases) {
    EmbeddedGraph g = kasteleyn_percus_sign(read_graph_file(testing::data_path(name)));
    EXPECT_EQ(cokernel_of(integer_matrix(g, MatrixMode::Bipartite)).str(), expect) << name;
  }
}

TEST(Matching, SmallCounts) {
  EXPECT_EQ(enumerate_matchings(grid(2, 2)).count, 2);
  EXPECT_EQ(enumerate_matchings(path(3)).count, 0);
  EXPECT_EQ(enumerate_matchings(grid(4, 4)).count, 36);
  auto listed = enumerate_matchings(grid(2, 2), {true});
  ASSERT_EQ(listed.matchings.size(), 2u);
  EXPECT_EQ(listed.total_weight, LaurentPoly(2));
}

TEST(Matching, WeightsAndLoops) {
  EmbeddedGraph g = grid(2, 2);
  g.edges[0].weight = LaurentPoly::q(1);
  size_t loop = g.add_edge(0, 0);
  (void)loop;
  auto set = enumerate_matchings(g);
  EXPECT_EQ(set.count, 2);
  EXPECT_TRUE(set.total_weight == LaurentPoly::parse("1 + q^2") || set.total_weight == LaurentPoly::parse("q + 1"));
}

TEST(Matching, GuardRefuses) {
  EmbeddedGraph g = grid(4, 4);
  EXPECT_THROW(enumerate_matchings(g, {false, 8}), std::length_error);
  EXPECT_THROW(enumerate_matchings(grid(6, 5), {true}), std::length_error);
  setenv("KASTELEYN_ORACLE_GUARD", "10", 1);
  EXPECT_EQ(oracle_count_guard(), 10u);
  EXPECT_THROW(enumerate_matchings(g), std::length_error);
  unsetenv("KASTELEYN_ORACLE_GUARD");
  EXPECT_EQ(oracle_count_guard(), kDefaultCountGuard);
}

TEST(Matching, PolygamousParity) {
  // Star with an odd-polygamous center: any odd subset of leaves... leaves are
  // monogamous so every leaf is used; 3 leaves give one matching.
  EmbeddedGraph g = path(3);
  g.vertices[1].kind = VertexKind::EvenPolygamous;
  EXPECT_EQ(enumerate_matchings(g).count, 1);
  g.vertices[1].kind = VertexKind::OddPolygamous;
  EXPECT_EQ(enumerate_matchings(g).count, 0);
  EmbeddedGraph sq = grid(2, 2);
  for (auto& v : sq.vertices) v.kind = VertexKind::EvenPolygamous;
  EXPECT_EQ(enumerate_matchings(sq).count, 2);  // empty set and the whole cycle
}

TEST(Property, SignUniformityOnRandomPlanarGraphs) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    size_t rows = 2 + rng() % 3, cols = 2 + rng() % 3;
    bool diag = trial % 2 == 1;
    EmbeddedGraph g = grid(rows, cols, &rng, 0.2, diag ? 0.4 : 0.0);
    BigInteger count = enumerate_matchings(g).count;
    EmbeddedGraph o = kasteleyn_orient(g, {static_cast<uint64_t>(trial)});
    EXPECT_TRUE(verify_flatness(o).flat);
    if (g.vertices.size() % 2 == 0) EXPECT_EQ(abs_pf(integer_matrix(o, MatrixMode::Alternating)), count);
    EXPECT_TRUE(sign_uniform(o, MatrixMode::Alternating));
    if (is_bipartite(g)) {
      EmbeddedGraph s = kasteleyn_percus_sign(g, {static_cast<uint64_t>(trial)});
      EXPECT_TRUE(verify_flatness(s).flat);
      MZ m = integer_matrix(s, MatrixMode::Bipartite);
      if (m.square()) EXPECT_EQ(abs_det(m), count);
      if (m.square()) EXPECT_TRUE(sign_uniform(s, MatrixMode::Bipartite));
    }
  }
}

TEST(Property, DecorationIndependence) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    EmbeddedGraph g = grid(3 + rng() % 2, 3 + rng() % 2, &rng, 0.15);
    auto base = stable_invariants(integer_matrix(kasteleyn_percus_sign(g), MatrixMode::Bipartite));
    auto base_a = stable_invariants(integer_matrix(kasteleyn_orient(g), MatrixMode::Alternating));
    for (uint64_t seed = 1; seed < 4; ++seed) {
      EXPECT_EQ(stable_invariants(integer_matrix(kasteleyn_percus_sign(g, {seed}), MatrixMode::Bipartite)), base);
      EXPECT_EQ(stable_invariants(integer_matrix(kasteleyn_orient(g, {seed}), MatrixMode::Alternating)), base_a);
    }
  }
}

TEST(Resolution, EvenLeafIsDeleted) {
  EmbeddedGraph g = grid(2, 2);
  size_t leaf = g.add_vertex(VertexKind::EvenPolygamous, Color::None, "", 2, 0);
  g.add_edge(1, leaf);
  embed_from_positions(g);
  EmbeddedGraph r = monogamous_resolution(g);
  EXPECT_EQ(r.vertices.size(), 4u);
  EXPECT_EQ(r.edges.size(), 4u);
  EXPECT_TRUE(validate_embedding(r).ok);
}

TEST(Resolution, OddTrivalentBecomesTriangle) {
  EmbeddedGraph g;
  g.add_vertex(VertexKind::OddPolygamous, Color::None, "c", 0, 0);
  g.add_vertex(VertexKind::Monogamous, Color::None, "", 1, 0);
  g.add_vertex(VertexKind::Monogamous, Color::None, "", -1, 1);
  g.add_vertex(VertexKind::Monogamous, Color::None, "", -1, -1);
  for (size_t i = 1; i <= 3; ++i) g.add_edge(0, i);
  embed_from_positions(g);
  EmbeddedGraph r = monogamous_resolution(g);
  EXPECT_EQ(r.vertices.size(), 6u);
  EXPECT_EQ(r.edges.size(), 6u);
  EXPECT_FALSE(r.has_polygamy());
  EXPECT_TRUE(validate_embedding(r).ok) << validate_embedding(r).error;
  EXPECT_EQ(enumerate_matchings(r).count, enumerate_matchings(g).count);
}

TEST(Property, ResolutionPreservesMatchings) {
  std::mt19937 rng(5);
  const VertexKind kinds[] = {VertexKind::Monogamous, VertexKind::OddPolygamous, VertexKind::EvenPolygamous};
  for (int trial = 0; trial < 80; ++trial) {
    EmbeddedGraph g = grid(2 + rng() % 3, 2 + rng() % 3, &rng, 0.15, 0.3);
    for (auto& v : g.vertices) v.kind = kinds[rng() % 3];
    for (auto& e : g.edges) e.weight = LaurentPoly::q(static_cast<long>(rng() % 4));
    EmbeddedGraph r = monogamous_resolution(g);
    ASSERT_FALSE(r.has_polygamy());
    auto check = validate_embedding(r);
    ASSERT_TRUE(check.ok) << check.error;
    auto a = enumerate_matchings(g), b = enumerate_matchings(r, {false, 400});
    EXPECT_EQ(a.count, b.count);
    EXPECT_EQ(a.total_weight, b.total_weight);
    if (r.vertices.size() % 2 == 0 && r.vertices.size() <= 40) {
      EmbeddedGraph o = kasteleyn_orient(r);
      EXPECT_EQ(abs_pf(integer_matrix(o, MatrixMode::Alternating)), b.count);
    }
  }
}

TEST(Property, AllPolygamousCountsArePowersOfTwo) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    EmbeddedGraph g = grid(2 + rng() % 3, 2 + rng() % 3, &rng, 0.2, 0.3);
    for (auto& v : g.vertices) v.kind = rng() % 2 ? VertexKind::OddPolygamous : VertexKind::EvenPolygamous;
    BigInteger c = enumerate_matchings(g).count;
    EXPECT_TRUE(c == 0 || mpz_popcount(c.get_mpz_t()) == 1) << c;
  }
}

TEST(Tripling, BigonBecomesSimple) {
  EmbeddedGraph g;
  g.add_vertex(VertexKind::Monogamous, Color::Black, "", 0, 0);
  g.add_vertex(VertexKind::Monogamous, Color::White, "", 1, 0);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  g.faces = {Face{{make_dart(0, true), make_dart(1, false)}}, Face{{make_dart(1, true), make_dart(0, false)}}};
  g.infinite_faces = {1};
  ASSERT_TRUE(validate_embedding(g).ok);
  EmbeddedGraph t = triple_edges(g);
  EXPECT_EQ(t.vertices.size(), 4u);
  EXPECT_EQ(t.edges.size(), 4u);
  EXPECT_TRUE(validate_embedding(t).ok);
  EXPECT_EQ(enumerate_matchings(g).count, 2);
  EXPECT_EQ(enumerate_matchings(t).count, 2);
  EXPECT_EQ(abs_det(integer_matrix(kasteleyn_percus_sign(t), MatrixMode::Bipartite)), 2);
}

TEST(Tripling, SimpleGraphAndLoopsUnchanged) {
  EmbeddedGraph g = grid(2, 3);
  EXPECT_EQ(graph_to_json(triple_edges(g)), graph_to_json(g));
  EmbeddedGraph loop;
  loop.add_vertex();
  loop.add_edge(0, 0);
  loop.faces = {Face{{make_dart(0, true)}}, Face{{make_dart(0, false)}}};
  loop.infinite_faces = {1};
  EmbeddedGraph t = triple_edges(loop);
  EXPECT_EQ(t.edges.size(), 1u);
  EXPECT_EQ(enumerate_matchings(t).count, 0);
}

TEST(Property, DoubledVertexPivotReproducesMatrix) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    EmbeddedGraph g = kasteleyn_orient(grid(2 + rng() % 3, 2 + rng() % 3, &rng, 0.1, 0.3), {rng()});
    size_t n = g.vertices.size();
    size_t v = rng() % n;
    size_t deg = 0;
    for (const auto& e : g.edges) deg += (e.u == v) + (e.v == v);
    EmbeddedGraph s = split_vertex(g, v, rng() % (deg + 1));
    EXPECT_TRUE(verify_flatness(s).flat);
    MZ a = integer_matrix(g, MatrixMode::Alternating);
    MZ a2 = integer_matrix(s, MatrixMode::Alternating);
    size_t m = n, r = n + 1;
    // Pivot at (v, m), then at (m, v) in the reduced matrix.
    MZ p1 = deleted_pivot(a2, v, m);
    size_t mi = m - (v < m ? 1 : 0), vj = v;
    MZ p2 = deleted_pivot(p1, mi, vj);
    // Remaining order: original vertices without v, then r in the last slot.
    ASSERT_EQ(p2.rows(), n);
    std::vector<size_t> order;
    for (size_t x = 0; x < n; ++x)
      if (x != v) order.push_back(x);
    order.push_back(v);  // r plays the role of v
    (void)r;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) EXPECT_EQ(p2(i, j), a(order[i], order[j]));
  }
}

Reflection mirror(const EmbeddedGraph& g, size_t cols) {
  Reflection s;
  size_t n = g.vertices.size();
  s.vertex_map.resize(n);
  for (size_t v = 0; v < n; ++v) {
    size_t r = v / cols, c = v % cols;
    s.vertex_map[v] = r * cols + (cols - 1 - c);
  }
  for (size_t e = 0; e < g.edges.size(); ++e) {
    long f = testing::find_edge(g, s.vertex_map[g.edges[e].u], s.vertex_map[g.edges[e].v]);
    s.edge_map.push_back(static_cast<size_t>(f));
    if (static_cast<size_t>(f) == e) s.bisected.push_back(e);
  }
  return s;
}

TEST(Reflection, GridQuotientCountsInvariantMatchings) {
  for (size_t rows : {2, 3, 4}) {
    EmbeddedGraph g = grid(rows, 4);
    Reflection s = mirror(g, 4);
    EmbeddedGraph q = reflection_quotient(g, s);
    auto check = validate_embedding(q);
    ASSERT_TRUE(check.ok) << check.error;
    EXPECT_EQ(q.vertices.size(), g.vertices.size() / 2 + 1);
    EXPECT_EQ(enumerate_matchings(q).count, count_invariant_matchings(g, s.edge_map));
    EmbeddedGraph r = monogamous_resolution(q);
    EXPECT_EQ(enumerate_matchings(r).count, enumerate_matchings(q).count);
  }
}

TEST(Reflection, EdgelessGraphHalves) {
  EmbeddedGraph g;
  g.add_vertex(VertexKind::Monogamous, Color::None, "", -1, 0);
  g.add_vertex(VertexKind::Monogamous, Color::None, "", 1, 0);
  Reflection s{{1, 0}, {}, {}};
  EmbeddedGraph q = reflection_quotient(g, s);
  EXPECT_EQ(q.vertices.size(), 1u);
  EXPECT_FALSE(q.has_polygamy());
}

TEST(Reflection, RejectsBadMaps) {
  EmbeddedGraph g = grid(2, 4);
  Reflection s = mirror(g, 4);
  Reflection bad = s;
  bad.vertex_map[0] = 1;
  EXPECT_THROW(reflection_quotient(g, bad), std::domain_error);
  bad = s;
  bad.bisected.clear();
  EXPECT_THROW(reflection_quotient(g, bad), std::domain_error);
}

TEST(Reflection, WrongParityFlipsKind) {
  EmbeddedGraph g = grid(2, 4);
  Reflection s = mirror(g, 4);
  EmbeddedGraph q = reflection_quotient(g, s), w = reflection_quotient(g, s, {true});
  size_t p = q.vertices.size() - 1;
  EXPECT_NE(q.vertices[p].kind, w.vertices[p].kind);
  // A wrong-parity vertex contradicts the parity count, so nothing matches.
  EXPECT_EQ(enumerate_matchings(w).count, 0);
  EXPECT_GT(enumerate_matchings(q).count, 0);
}

}  // namespace
}  // namespace kast
