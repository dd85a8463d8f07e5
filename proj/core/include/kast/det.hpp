#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "kast/matrix.hpp"
#include "kast/ring_traits.hpp"

namespace kast {

template <class T>
bool is_alternating(const Matrix<T>& a) {
  if (!a.square()) return false;
  for (size_t i = 0; i < a.rows(); ++i) {
    if (!(a(i, i) == T(0))) return false;
    for (size_t j = i + 1; j < a.cols(); ++j)
      if (!(a(i, j) == -a(j, i))) return false;
  }
  return true;
}

// Fraction-free (Bareiss) determinant; every division is exact in an
// integral domain.
template <class T>
T determinant(Matrix<T> a) {
  using R = RingTraits<T>;
  if (!a.square()) throw std::domain_error("determinant of a non-square matrix");
  const size_t n = a.rows();
  if (n == 0) return T(1);
  T prev(1);
  bool negate = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (R::is_zero(a(k, k))) {
      size_t p = k + 1;
      while (p < n && R::is_zero(a(p, k))) ++p;
      if (p == n) return T(0);
      a.swap_rows(k, p);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        T v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        a(i, j) = R::exact_div(v, prev);
      }
      a(i, k) = T(0);
    }
    prev = a(k, k);
  }
  T d = a(n - 1, n - 1);
  return negate ? T(-d) : d;
}

// Fraction-free Pfaffian. After step k the live entries are Pfaffians of the
// principal submatrices on {0..2k-1, i, j}; each update divides exactly by
// the previous pivot (Pfaffian analogue of Sylvester's identity).
template <class T>
T pfaffian(Matrix<T> a) {
  using R = RingTraits<T>;
  if (!is_alternating(a)) throw std::domain_error("pfaffian of a non-alternating matrix");
  const size_t n = a.rows();
  if (n % 2) throw std::domain_error("pfaffian of an odd-dimensional matrix");
  if (n == 0) return T(1);
  T prev(1);
  bool negate = false;
  // Simultaneous swap of indices x and y in an alternating matrix.
  auto sym_swap = [&](size_t x, size_t y) {
    if (x == y) return;
    a.swap_rows(x, y);
    a.swap_cols(x, y);
    negate = !negate;
  };
  for (size_t k = 0; k + 2 <= n; k += 2) {
    if (R::is_zero(a(k, k + 1))) {
      bool found = false;
      for (size_t i = k; i < n && !found; ++i)
        for (size_t j = i + 1; j < n; ++j)
          if (!R::is_zero(a(i, j))) {
            sym_swap(k, i);
            // j may have been moved by the first swap.
            size_t jj = (j == k) ? i : j;
            sym_swap(k + 1, jj);
            found = true;
            break;
          }
      if (!found) return T(0);
    }
    if (k + 2 == n) break;
    const T p = a(k, k + 1);
    for (size_t i = k + 2; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) {
        T v = p * a(i, j) - a(k, i) * a(k + 1, j) + a(k, j) * a(k + 1, i);
        a(i, j) = R::exact_div(v, prev);
        a(j, i) = -a(i, j);
      }
    prev = p;
  }
  T pf = a(n - 2, n - 1);
  return negate ? T(-pf) : pf;
}

// Division-free expansion along the first row; exponential, used as an oracle.
template <class T>
T pfaffian_expansion(const Matrix<T>& a) {
  if (!is_alternating(a)) throw std::domain_error("pfaffian of a non-alternating matrix");
  const size_t n = a.rows();
  if (n % 2) throw std::domain_error("pfaffian of an odd-dimensional matrix");
  std::vector<size_t> idx(n);
  for (size_t i = 0; i < n; ++i) idx[i] = i;
  auto rec = [&](auto&& self, const std::vector<size_t>& live) -> T {
    if (live.empty()) return T(1);
    T sum(0);
    for (size_t j = 1; j < live.size(); ++j) {
      const T& e = a(live[0], live[j]);
      if (e == T(0)) continue;
      std::vector<size_t> rest;
      for (size_t k = 1; k < live.size(); ++k)
        if (k != j) rest.push_back(live[k]);
      T sub = e * self(self, rest);
      if (j % 2 == 1) sum += sub;
      else sum -= sub;
    }
    return sum;
  };
  return rec(rec, idx);
}

// Deleted pivot at (i, j): the entry must divide its row and column. Returns
// the matrix with row i and column j removed after clearing them.
template <class T>
Matrix<T> deleted_pivot(const Matrix<T>& m, size_t pi, size_t pj) {
  using R = RingTraits<T>;
  if (pi >= m.rows() || pj >= m.cols()) throw std::out_of_range("pivot index out of range");
  const T& p = m(pi, pj);
  if (R::is_zero(p)) throw std::domain_error("deleted pivot at a zero entry");
  for (size_t j = 0; j < m.cols(); ++j)
    if (!R::divides(p, m(pi, j)))
      throw std::domain_error("pivot does not divide entry (" + std::to_string(pi) + "," +
                              std::to_string(j) + ")");
  for (size_t i = 0; i < m.rows(); ++i)
    if (!R::divides(p, m(i, pj)))
      throw std::domain_error("pivot does not divide entry (" + std::to_string(i) + "," +
                              std::to_string(pj) + ")");
  Matrix<T> out(m.rows() - 1, m.cols() - 1);
  for (size_t i = 0, oi = 0; i < m.rows(); ++i) {
    if (i == pi) continue;
    // Column pj is cleared by subtracting (m(i,pj)/p) * row pi.
    T f = R::exact_div(m(i, pj), p);
    for (size_t j = 0, oj = 0; j < m.cols(); ++j) {
      if (j == pj) continue;
      out(oi, oj) = m(i, j) - f * m(pi, j);
      ++oj;
    }
    ++oi;
  }
  return out;
}

}  // namespace kast
