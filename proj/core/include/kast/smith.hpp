#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kast/matrix.hpp"
#include "kast/ring_traits.hpp"

namespace kast {

template <class T>
struct SmithForm {
  RingTag ring = RingTraits<T>::tag;
  // Full diagonal of length min(rows, cols), zeros last, d_i | d_{i+1}.
  std::vector<T> diagonal;
  size_t rank = 0;
  bool has_transforms = false;
  Matrix<T> left, right;  // left * M * right == diag

  // Nonzero non-unit diagonal entries.
  std::vector<T> nontrivial() const {
    std::vector<T> out;
    for (const auto& d : diagonal)
      if (!RingTraits<T>::is_zero(d) && !RingTraits<T>::is_unit(d)) out.push_back(d);
    return out;
  }
  Matrix<T> diagonal_matrix(size_t rows, size_t cols) const {
    Matrix<T> d(rows, cols);
    for (size_t i = 0; i < diagonal.size(); ++i) d(i, i) = diagonal[i];
    return d;
  }
};

namespace detail {

// Smith normal form over a Euclidean ring following the constructive proof:
// a minimal pivot, Bezout mixing whenever the pivot fails to divide an entry
// of its row or column, row_t += row_i when it fails to divide an interior
// entry, then a deleted pivot and recursion on the rest.
template <class T>
SmithForm<T> smith_impl(Matrix<T> a, bool transforms) {
  using R = RingTraits<T>;
  static_assert(R::euclidean, "Smith normal form needs a Euclidean ring");
  const size_t m = a.rows(), n = a.cols();
  SmithForm<T> out;
  out.has_transforms = transforms;
  Matrix<T> L, Rm;
  if (transforms) {
    L = Matrix<T>::identity(m);
    Rm = Matrix<T>::identity(n);
  }
  const size_t k = std::min(m, n);
  size_t t = 0;
  for (; t < k; ++t) {
    // Minimal nonzero entry, first in row-major order.
    bool found = false;
    size_t pi = 0, pj = 0;
    for (size_t i = t; i < m; ++i)
      for (size_t j = t; j < n; ++j) {
        if (R::is_zero(a(i, j))) continue;
        if (!found || R::smaller(a(i, j), a(pi, pj))) {
          found = true;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    a.swap_rows(t, pi);
    a.swap_cols(t, pj);
    if (transforms) {
      L.swap_rows(t, pi);
      Rm.swap_cols(t, pj);
    }
    while (true) {
      bool dirty = false;
      for (size_t i = t + 1; i < m; ++i) {
        if (R::is_zero(a(i, t))) continue;
        const T p = a(t, t), b = a(i, t);
        if (R::divides(p, b)) {
          T c = -R::exact_div(b, p);
          a.add_row_multiple(i, t, c);
          if (transforms) L.add_row_multiple(i, t, c);
        } else {
          T x, y;
          T g = R::xgcd(p, b, x, y);
          T pg = R::exact_div(p, g), bg = R::exact_div(b, g);
          T nb = -bg;
          a.mix_rows(t, i, x, y, nb, pg);
          if (transforms) L.mix_rows(t, i, x, y, nb, pg);
          dirty = true;
        }
      }
      for (size_t j = t + 1; j < n; ++j) {
        if (R::is_zero(a(t, j))) continue;
        const T p = a(t, t), b = a(t, j);
        if (R::divides(p, b)) {
          T c = -R::exact_div(b, p);
          a.add_col_multiple(j, t, c);
          if (transforms) Rm.add_col_multiple(j, t, c);
        } else {
          T x, y;
          T g = R::xgcd(p, b, x, y);
          T pg = R::exact_div(p, g), bg = R::exact_div(b, g);
          T nb = -bg;
          a.mix_cols(t, j, x, y, nb, pg);
          if (transforms) Rm.mix_cols(t, j, x, y, nb, pg);
          dirty = true;
        }
      }
      if (dirty) continue;
      bool clean = true;
      for (size_t i = t + 1; i < m && clean; ++i)
        if (!R::is_zero(a(i, t))) clean = false;
      if (!clean) continue;
      // Interior divisibility: if d fails to divide some entry, fold its row in.
      bool fixed = false;
      for (size_t i = t + 1; i < m && !fixed; ++i)
        for (size_t j = t + 1; j < n; ++j) {
          if (!R::divides(a(t, t), a(i, j))) {
            a.add_row_multiple(t, i, T(1));
            if (transforms) L.add_row_multiple(t, i, T(1));
            fixed = true;
            break;
          }
        }
      if (!fixed) break;
    }
    T u = R::normalizing_unit(a(t, t));
    if (!(u == T(1))) {
      a.scale_row(t, u);
      if (transforms) L.scale_row(t, u);
    }
  }
  out.rank = t;
  out.diagonal.resize(k, T(0));
  for (size_t i = 0; i < t; ++i) out.diagonal[i] = a(i, i);
  if (transforms) {
    out.left = std::move(L);
    out.right = std::move(Rm);
  }
  return out;
}

}  // namespace detail

SmithForm<BigInteger> smith_normal_form(const Matrix<BigInteger>& m, bool transforms = true);
SmithForm<RationalPoly> smith_normal_form(const Matrix<RationalPoly>& m, bool transforms = true);

// Checks left * m * right == diag, the divisibility chain, and unit
// determinants of the transforms.
template <class T>
bool verify_smith(const Matrix<T>& m, const SmithForm<T>& s, std::string* why = nullptr);

}  // namespace kast
