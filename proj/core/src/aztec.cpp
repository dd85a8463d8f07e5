#include "kast/aztec.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <tuple>

namespace kast {

namespace {

void check_order(long n) {
  if (n < 1) throw std::domain_error("order must be positive");
}

BigInteger binom(long n, long k) { return k < 0 || k > n ? BigInteger(0) : binomial(n, k); }

}  // namespace

EmbeddedGraph build_aztec_graph(long n) {
  check_order(n);
  EmbeddedGraph g;
  std::map<std::pair<long, long>, size_t> index;
  auto inside = [&](long x, long y) { return std::labs(x) + std::labs(y) <= n + 1; };
  for (long j = -n - 1; j <= n; ++j)
    for (long i = -n - 1; i <= n; ++i) {
      if (!(inside(i, j) && inside(i + 1, j) && inside(i, j + 1) && inside(i + 1, j + 1))) continue;
      Color c = (i + j) % 2 == 0 ? Color::Black : Color::White;
      std::string label = "S(" + std::to_string(i) + "," + std::to_string(j) + ")";
      index[{j, i}] = g.add_vertex(VertexKind::Monogamous, c, label, i + 0.5, j + 0.5);
    }
  for (const auto& [key, v] : index) {
    auto [j, i] = key;
    for (auto nb : {std::pair<long, long>{j, i + 1}, std::pair<long, long>{j + 1, i}}) {
      auto it = index.find(nb);
      if (it == index.end()) continue;
      // Black endpoint first.
      if (g.vertices[v].color == Color::Black)
        g.add_edge(v, it->second);
      else
        g.add_edge(it->second, v);
    }
  }
  embed_from_positions(g);
  return g;
}

Matrix<BigInteger> binomial_matrix(long n) {
  Matrix<BigInteger> b(static_cast<size_t>(n), static_cast<size_t>(n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j <= i; ++j) b(static_cast<size_t>(i), static_cast<size_t>(j)) = binom(i, j);
  return b;
}

Matrix<BigInteger> binomial_matrix_inverse(long n) {
  Matrix<BigInteger> b(static_cast<size_t>(n), static_cast<size_t>(n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j <= i; ++j) {
      BigInteger x = binom(i, j);
      b(static_cast<size_t>(i), static_cast<size_t>(j)) = (i - j) % 2 ? -x : x;
    }
  return b;
}

Matrix<BigInteger> shift_left(long n) {
  Matrix<BigInteger> m(static_cast<size_t>(n), static_cast<size_t>(n + 1));
  for (size_t i = 0; i < static_cast<size_t>(n); ++i) m(i, i) = 1;
  return m;
}

Matrix<BigInteger> shift_right(long n) {
  Matrix<BigInteger> m(static_cast<size_t>(n), static_cast<size_t>(n + 1));
  for (size_t i = 0; i < static_cast<size_t>(n); ++i) m(i, i + 1) = 1;
  return m;
}

Matrix<BigInteger> kronecker(const Matrix<BigInteger>& a, const Matrix<BigInteger>& b) {
  Matrix<BigInteger> k(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (size_t r = 0; r < b.rows(); ++r)
        for (size_t c = 0; c < b.cols(); ++c) k(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
    }
  return k;
}

namespace {

Matrix<BigInteger> mul(const Matrix<BigInteger>& a, const Matrix<BigInteger>& b) {
  Matrix<BigInteger> c(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Matrix<BigInteger> combine(const Matrix<BigInteger>& x, const Matrix<BigInteger>& y, const BigInteger& s) {
  Matrix<BigInteger> r = x;
  for (size_t i = 0; i < r.rows(); ++i)
    for (size_t j = 0; j < r.cols(); ++j) r(i, j) += s * y(i, j);
  return r;
}

}  // namespace

Matrix<BigInteger> aztec_matrix_closed_form(long n) {
  check_order(n);
  auto l = shift_left(n), r = shift_right(n);
  auto lt = l.transpose(), rt = r.transpose();
  Matrix<BigInteger> m = kronecker(r, rt);
  m = combine(m, kronecker(l, rt), 1);
  m = combine(m, kronecker(r, lt), 1);
  m = combine(m, kronecker(l, lt), -1);
  return m;
}

AztecReduction aztec_reduction(long n) {
  check_order(n);
  AztecReduction out;
  out.p = kronecker(binomial_matrix(n), binomial_matrix_inverse(n + 1).transpose());
  out.q = kronecker(binomial_matrix_inverse(n + 1), binomial_matrix(n).transpose());
  out.reduced = mul(mul(out.p, aztec_matrix_closed_form(n)), out.q);
  return out;
}

Matrix<BigInteger> aztec_block_x(long k) {
  Matrix<BigInteger> m(static_cast<size_t>(k), static_cast<size_t>(k));
  for (size_t i = 0; i < static_cast<size_t>(k); ++i) {
    m(i, i) = 1;
    if (i + 1 < static_cast<size_t>(k)) m(i, i + 1) = -2;
  }
  return m;
}

Matrix<BigInteger> aztec_block_y(long k) {
  Matrix<BigInteger> m(static_cast<size_t>(k), static_cast<size_t>(k));
  for (size_t i = 0; i < static_cast<size_t>(k); ++i) {
    m(i, i) = -2;
    if (i + 1 < static_cast<size_t>(k)) m(i, i + 1) = 1;
  }
  return m;
}

std::vector<AztecBlock> aztec_blocks(long n) {
  check_order(n);
  const Matrix<BigInteger> m = aztec_reduction(n).reduced;
  const size_t rows = m.rows(), cols = m.cols();
  // Union-find over rows [0, rows) and columns [rows, rows + cols).
  std::vector<size_t> parent(rows + cols);
  for (size_t k = 0; k < parent.size(); ++k) parent[k] = k;
  auto find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j)
      if (m(i, j) != 0) parent[find(i)] = find(rows + j);
  std::map<size_t, std::pair<std::vector<size_t>, std::vector<size_t>>> comps;
  for (size_t i = 0; i < rows; ++i) comps[find(i)].first.push_back(i);
  for (size_t j = 0; j < cols; ++j) comps[find(rows + j)].second.push_back(j);

  std::vector<AztecBlock> blocks;
  for (auto& [root, rc] : comps) {
    auto& [rs, cs] = rc;
    if (rs.size() != cs.size()) throw std::logic_error("non-square block in the reduced Aztec matrix");
    const long k = static_cast<long>(rs.size());
    size_t ones = 0, twos = 0;
    for (size_t i : rs)
      for (size_t j : cs) {
        if (m(i, j) == 1) ++ones;
        else if (m(i, j) == -2) ++twos;
        else if (m(i, j) != 0) throw std::logic_error("unexpected entry in the reduced Aztec matrix");
      }
    AztecBlock blk;
    blk.k = k;
    blk.is_y = twos == static_cast<size_t>(k);
    const BigInteger diag = blk.is_y ? BigInteger(-2) : BigInteger(1);
    // Walk the path: first column has only its diagonal entry.
    auto nonzeros_in_col = [&](size_t j) {
      size_t c = 0;
      for (size_t i : rs) c += m(i, j) != 0;
      return c;
    };
    size_t col = cs.front();
    for (size_t j : cs)
      if (nonzeros_in_col(j) == 1) {
        bool diag_only = false;
        for (size_t i : rs)
          if (m(i, j) != 0) diag_only = m(i, j) == diag;
        if (diag_only) {
          col = j;
          break;
        }
      }
    for (long t = 0; t < k; ++t) {
      blk.cols.push_back(col);
      size_t row = rows;
      for (size_t i : rs)
        if (m(i, col) == diag && std::find(blk.rows.begin(), blk.rows.end(), i) == blk.rows.end()) row = i;
      if (row == rows) throw std::logic_error("Aztec block walk failed");
      blk.rows.push_back(row);
      if (t + 1 == k) break;
      size_t next = cols;
      for (size_t j : cs)
        if (m(row, j) != 0 && m(row, j) != diag) next = j;
      if (next == cols) throw std::logic_error("Aztec block walk failed");
      col = next;
    }
    Matrix<BigInteger> sub(static_cast<size_t>(k), static_cast<size_t>(k));
    for (size_t a = 0; a < static_cast<size_t>(k); ++a)
      for (size_t b = 0; b < static_cast<size_t>(k); ++b) sub(a, b) = m(blk.rows[a], blk.cols[b]);
    Matrix<BigInteger> want = blk.is_y ? aztec_block_y(k) : aztec_block_x(k);
    if (!(sub.entries() == want.entries())) throw std::logic_error("Aztec block has an unexpected shape");
    blocks.push_back(std::move(blk));
  }
  std::sort(blocks.begin(), blocks.end(), [](const AztecBlock& x, const AztecBlock& y) {
    return std::tie(x.is_y, x.k, x.rows) < std::tie(y.is_y, y.k, y.rows);
  });
  return blocks;
}

Matrix<BigInteger> delannoy_matrix(long n) {
  check_order(n);
  Matrix<BigInteger> v(static_cast<size_t>(n), static_cast<size_t>(n));
  for (size_t i = 0; i < static_cast<size_t>(n); ++i)
    for (size_t j = 0; j < static_cast<size_t>(n); ++j)
      v(i, j) = (i == 0 || j == 0) ? BigInteger(1) : v(i, j - 1) + v(i - 1, j) + v(i - 1, j - 1);
  return v;
}

Matrix<BigInteger> delannoy_closed_form(long n) {
  check_order(n);
  Matrix<BigInteger> v(static_cast<size_t>(n), static_cast<size_t>(n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      BigInteger s = 0, p = 1;
      for (long k = 0; k <= std::min(i, j); ++k, p *= 2) s += binom(i, k) * binom(j, k) * p;
      v(static_cast<size_t>(i), static_cast<size_t>(j)) = s;
    }
  return v;
}

Matrix<BigInteger> delannoy_diagonal(long n) {
  check_order(n);
  Matrix<BigInteger> v(static_cast<size_t>(n), static_cast<size_t>(n));
  BigInteger p = 1;
  for (size_t k = 0; k < static_cast<size_t>(n); ++k, p *= 2) v(k, k) = p;
  return v;
}

GVGraph delannoy_gv_graph(long n) {
  check_order(n);
  GVGraph g;
  auto id = [&](long x, long y) { return static_cast<size_t>((y * (n + 1)) + (x + n)); };
  for (long y = 0; y <= n; ++y)
    for (long x = -n; x <= 0; ++x)
      g.add_vertex(static_cast<double>(x), static_cast<double>(y), "(" + std::to_string(x) + "," + std::to_string(y) + ")");
  for (long y = 0; y <= n; ++y)
    for (long x = -n; x <= 0; ++x) {
      if (x < 0) g.add_edge(id(x, y), id(x + 1, y));
      if (y < n) g.add_edge(id(x, y), id(x, y + 1));
      if (x < 0 && y < n) g.add_edge(id(x, y), id(x + 1, y + 1));
    }
  for (long i = 0; i <= n; ++i) {
    g.lefts.push_back(id(-i, 0));
    g.rights.push_back(id(0, i));
  }
  return g;
}

}  // namespace kast
