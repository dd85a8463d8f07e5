#include "kast/alt_smith.hpp"

#include <stdexcept>
#include <string>

#include "kast/det.hpp"
#include "kast/ring_traits.hpp"

namespace kast {
namespace {

using Z = BigInteger;

// Applies the column operation C to both sides (A <- C^T A C) and to B.
struct Congruence {
  Matrix<Z>& a;
  Matrix<Z>& b;

  void swap(size_t x, size_t y) {
    if (x == y) return;
    a.swap_rows(x, y);
    a.swap_cols(x, y);
    b.swap_cols(x, y);
  }
  // index j += c * index k
  void add(size_t j, size_t k, const Z& c) {
    a.add_col_multiple(j, k, c);
    a.add_row_multiple(j, k, c);
    b.add_col_multiple(j, k, c);
  }
  void mix(size_t j, size_t k, const Z& p, const Z& q, const Z& r, const Z& s) {
    a.mix_cols(j, k, p, q, r, s);
    a.mix_rows(j, k, p, q, r, s);
    b.mix_cols(j, k, p, q, r, s);
  }
};

// Clears entry (row, k) against the pivot (row, col); returns true if a
// Bezout mix was needed (the pivot shrank).
bool clear(Congruence& op, size_t row, size_t col, size_t k) {
  const Z p = op.a(row, col), v = op.a(row, k);
  if (v == 0) return false;
  if (RingTraits<Z>::divides(p, v)) {
    Z c = -RingTraits<Z>::exact_div(v, p);
    op.add(k, col, c);
    return false;
  }
  Z x, y;
  Z g = xgcd(p, v, x, y);
  Z pg = RingTraits<Z>::exact_div(p, g), vg = RingTraits<Z>::exact_div(v, g);
  Z nv = -vg;
  op.mix(col, k, x, y, nv, pg);
  return true;
}

}  // namespace

Matrix<BigInteger> AltSmithForm::block_matrix(size_t n) const {
  Matrix<Z> d(n, n);
  for (size_t i = 0; i < blocks.size(); ++i) {
    d(2 * i, 2 * i + 1) = blocks[i];
    d(2 * i + 1, 2 * i) = -blocks[i];
  }
  return d;
}

AltSmithForm alternating_smith_form(const Matrix<BigInteger>& input) {
  if (!is_alternating(input)) throw std::domain_error("alternating_smith_form needs an alternating matrix");
  const size_t n = input.rows();
  Matrix<Z> a = input;
  Matrix<Z> b = Matrix<Z>::identity(n);
  Congruence op{a, b};
  AltSmithForm out;
  for (size_t t = 0; t + 1 < n; t += 2) {
    // Minimal nonzero entry above the diagonal, moved to (t, t+1).
    bool found = false;
    size_t pi = 0, pj = 0;
    for (size_t i = t; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) {
        if (a(i, j) == 0) continue;
        if (!found || cmpabs(a(i, j), a(pi, pj)) < 0) {
          found = true;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    op.swap(t, pi);
    op.swap(t + 1, pj == t ? pi : pj);
    while (true) {
      bool dirty = false;
      for (size_t k = t + 2; k < n; ++k) {
        dirty |= clear(op, t, t + 1, k);
        dirty |= clear(op, t + 1, t, k);
      }
      if (dirty) continue;
      bool clean = true;
      for (size_t k = t + 2; k < n && clean; ++k)
        if (a(t, k) != 0 || a(t + 1, k) != 0) clean = false;
      if (!clean) continue;
      // Interior divisibility: fold index i into t when the pivot fails.
      bool fixed = false;
      for (size_t i = t + 2; i < n && !fixed; ++i)
        for (size_t j = i + 1; j < n; ++j)
          if (!RingTraits<Z>::divides(a(t, t + 1), a(i, j))) {
            op.add(t, i, 1);
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (a(t, t + 1) < 0) op.swap(t, t + 1);
    out.blocks.push_back(a(t, t + 1));
  }
  out.transform = std::move(b);
  return out;
}

bool verify_alternating_smith(const Matrix<BigInteger>& a, const AltSmithForm& s,
                              std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const size_t n = a.rows();
  if (2 * s.blocks.size() > n) return fail("too many blocks");
  for (size_t i = 0; i < s.blocks.size(); ++i) {
    if (s.blocks[i] <= 0) return fail("block entry not positive");
    if (i + 1 < s.blocks.size() && !RingTraits<Z>::divides(s.blocks[i], s.blocks[i + 1]))
      return fail("block chain broken at " + std::to_string(i));
  }
  if (!(s.transform.transpose() * a * s.transform == s.block_matrix(n)))
    return fail("B^T A B is not the block form");
  if (!RingTraits<Z>::is_unit(determinant(s.transform))) return fail("B is not unimodular");
  return true;
}

}  // namespace kast
