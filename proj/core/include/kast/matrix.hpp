#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kast {

// Dense row-major matrix over a commutative ring.
template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}
  Matrix(size_t rows, size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols) throw std::invalid_argument("matrix entry count mismatch");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      a_.insert(a_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  T& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  const std::vector<T>& entries() const { return a_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(size_t i, size_t k) {
    if (i == k) return;
    for (size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }
  void swap_cols(size_t j, size_t k) {
    if (j == k) return;
    for (size_t i = 0; i < rows_; ++i) std::swap((*this)(i, j), (*this)(i, k));
  }
  // row_i += c * row_k
  void add_row_multiple(size_t i, size_t k, const T& c) {
    for (size_t j = 0; j < cols_; ++j)
      if (!((*this)(k, j) == T(0))) (*this)(i, j) += c * (*this)(k, j);
  }
  void add_col_multiple(size_t j, size_t k, const T& c) {
    for (size_t i = 0; i < rows_; ++i)
      if (!((*this)(i, k) == T(0))) (*this)(i, j) += c * (*this)(i, k);
  }
  void scale_row(size_t i, const T& c) {
    for (size_t j = 0; j < cols_; ++j) (*this)(i, j) = c * (*this)(i, j);
  }
  void scale_col(size_t j, const T& c) {
    for (size_t i = 0; i < rows_; ++i) (*this)(i, j) = c * (*this)(i, j);
  }
  // (row_i, row_k) <- (a row_i + b row_k, c row_i + d row_k)
  void mix_rows(size_t i, size_t k, const T& a, const T& b, const T& c, const T& d) {
    for (size_t j = 0; j < cols_; ++j) {
      T x = (*this)(i, j), y = (*this)(k, j);
      (*this)(i, j) = a * x + b * y;
      (*this)(k, j) = c * x + d * y;
    }
  }
  void mix_cols(size_t j, size_t k, const T& a, const T& b, const T& c, const T& d) {
    for (size_t i = 0; i < rows_; ++i) {
      T x = (*this)(i, j), y = (*this)(i, k);
      (*this)(i, j) = a * x + b * y;
      (*this)(i, k) = c * x + d * y;
    }
  }

  Matrix submatrix(const std::vector<size_t>& rs, const std::vector<size_t>& cs) const {
    Matrix s(rs.size(), cs.size());
    for (size_t i = 0; i < rs.size(); ++i)
      for (size_t j = 0; j < cs.size(); ++j) s(i, j) = (*this)(rs[i], cs[j]);
    return s;
  }

  template <class F>
  auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<U> v;
    v.reserve(a_.size());
    for (const auto& x : a_) v.push_back(f(x));
    return Matrix<U>(rows_, cols_, std::move(v));
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!(x == T(0))) return false;
    return true;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix r(x.rows_, y.cols_);
    for (size_t i = 0; i < x.rows_; ++i)
      for (size_t k = 0; k < x.cols_; ++k) {
        const T& a = x(i, k);
        if (a == T(0)) continue;
        for (size_t j = 0; j < y.cols_; ++j)
          if (!(y(k, j) == T(0))) r(i, j) += a * y(k, j);
      }
    return r;
  }
  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    Matrix r = x;
    for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += y.a_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("matrix difference shape mismatch");
    Matrix r = x;
    for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= y.a_[k];
    return r;
  }
  Matrix scaled(const T& c) const {
    Matrix r = *this;
    for (auto& v : r.a_) v = c * v;
    return r;
  }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

// Kronecker product: (A (x) B)[(i1,i2),(j1,j2)] = A[i1,j1] * B[i2,j2].
template <class T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i1 = 0; i1 < a.rows(); ++i1)
    for (size_t j1 = 0; j1 < a.cols(); ++j1) {
      if (a(i1, j1) == T(0)) continue;
      for (size_t i2 = 0; i2 < b.rows(); ++i2)
        for (size_t j2 = 0; j2 < b.cols(); ++j2)
          r(i1 * b.rows() + i2, j1 * b.cols() + j2) = a(i1, j1) * b(i2, j2);
    }
  return r;
}

// Block diagonal sum.
template <class T>
Matrix<T> direct_sum(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() + b.rows(), a.cols() + b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

}  // namespace kast
