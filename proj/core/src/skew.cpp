#include "kast/skew.hpp"

#include <stdexcept>

#include "kast/qfactor.hpp"

namespace kast {

namespace {

void check_skew(const Partition& lambda, const Partition& mu, long a) {
  if (a < 1) throw std::domain_error("the number of variables must be positive");
  if (!lambda.contains(mu)) throw std::domain_error("mu is not contained in lambda");
  if (lambda.length() == 0) throw std::domain_error("lambda is empty");
}

}  // namespace

CellGraph skew_cells(const Partition& lambda, const Partition& mu, long a) {
  check_skew(lambda, mu, a);
  const long b = static_cast<long>(lambda.length());
  const long w = lambda.part(1) + b;
  std::vector<bool> bottom(static_cast<size_t>(w + 1), false), top(static_cast<size_t>(w + 1), false);
  for (long i = 1; i <= b; ++i) {
    bottom[static_cast<size_t>(lambda.part(static_cast<size_t>(i)) + b + 1 - i)] = true;
    top[static_cast<size_t>(mu.part(static_cast<size_t>(i)) + b + 1 - i)] = true;
  }
  // Row j spans 0 <= i + j <= w; position p counts triangles of one kind from
  // the left, starting at 1.
  std::vector<Cell> cells;
  for (long j = 0; j < a; ++j)
    for (long p = 1; p <= w; ++p) {
      if (!(j == 0 && bottom[static_cast<size_t>(p)])) cells.push_back({p - 1 - j, j, true});
      if (!(j == a - 1 && top[static_cast<size_t>(p)])) cells.push_back({p - 2 - j, j, false});
    }
  CellGraph z = cell_graph(cells);
  for (auto& e : z.graph.edges) {
    const Cell& u = z.cells[e.u];
    const Cell& v = z.cells[e.v];
    if (u.up && !v.up && u.i == v.i && u.j == v.j) e.weight = LaurentPoly::q(u.j);
  }
  return z;
}

EmbeddedGraph build_skew_graph(const Partition& lambda, const Partition& mu, long a) {
  return skew_cells(lambda, mu, a).graph;
}

LaurentPoly complete_homogeneous_q(long m, long a) {
  if (m < 0) return 0;
  return gaussian_binomial(m + a - 1, m);
}

LaurentPoly elementary_q(long m, long a) {
  if (m < 0 || m > a) return 0;
  return gaussian_binomial(a, m).shifted(m * (m - 1) / 2);
}

Matrix<LaurentPoly> jacobi_trudi(const Partition& lambda, const Partition& mu, long a, bool dual) {
  check_skew(lambda, mu, a);
  const Partition l = dual ? lambda.conjugate() : lambda;
  const Partition m = dual ? mu.conjugate() : mu;
  const size_t n = l.length();
  Matrix<LaurentPoly> j(n, n);
  for (size_t r = 1; r <= n; ++r)
    for (size_t c = 1; c <= n; ++c) {
      long k = l.part(r) - m.part(c) - static_cast<long>(r) + static_cast<long>(c);
      j(r - 1, c - 1) = dual ? elementary_q(k, a) : complete_homogeneous_q(k, a);
    }
  return j;
}

GVGraph skew_gv_graph(const Partition& lambda, const Partition& mu, long a) {
  check_skew(lambda, mu, a);
  const long b = static_cast<long>(lambda.length());
  const long w = lambda.part(1) + b;
  GVGraph g;
  auto id = [&](long r, long p) { return static_cast<size_t>((r - 1) * w + (p - 1)); };
  for (long r = 1; r <= a; ++r)
    for (long p = 1; p <= w; ++p)
      g.add_vertex(static_cast<double>(p), static_cast<double>(-r), "(" + std::to_string(r) + "," + std::to_string(p) + ")");
  for (long r = 1; r <= a; ++r)
    for (long p = 1; p <= w; ++p) {
      if (p < w) g.add_edge(id(r, p), id(r, p + 1), LaurentPoly::q(r - 1));
      if (r < a) g.add_edge(id(r, p), id(r + 1, p));
    }
  for (long i = 1; i <= b; ++i) {
    g.lefts.push_back(id(1, mu.part(static_cast<size_t>(i)) + b + 1 - i));
    g.rights.push_back(id(a, lambda.part(static_cast<size_t>(i)) + b + 1 - i));
  }
  return g;
}

}  // namespace kast
