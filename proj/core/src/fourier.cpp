#include "kast/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kast/det.hpp"
#include "kast/smith.hpp"

namespace kast {
namespace {

// Inverse of a unimodular integer matrix via the rational inverse.
Matrix<BigInteger> unimodular_inverse(const Matrix<BigInteger>& m) {
  Matrix<BigRational> r = rational_inverse(m);
  Matrix<BigInteger> out(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) {
      if (r(i, j).get_den() != 1) throw std::logic_error("transform is not unimodular");
      out(i, j) = r(i, j).get_num();
    }
  return out;
}

// All vectors t with 0 <= t_i < d_i, first index fastest.
std::vector<std::vector<BigInteger>> box(const std::vector<BigInteger>& d) {
  std::vector<std::vector<BigInteger>> out;
  std::vector<BigInteger> t(d.size(), 0);
  while (true) {
    out.push_back(t);
    size_t i = 0;
    while (i < d.size()) {
      t[i] += 1;
      if (t[i] < d[i]) break;
      t[i] = 0;
      ++i;
    }
    if (i == d.size()) return out;
  }
}

std::vector<BigInteger> mat_vec(const Matrix<BigInteger>& m, const std::vector<BigInteger>& v) {
  std::vector<BigInteger> out(m.rows(), 0);
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

}  // namespace

Matrix<BigRational> rational_inverse(const Matrix<BigInteger>& m) {
  if (!m.square()) throw std::domain_error("inverse of a non-square matrix");
  const size_t n = m.rows();
  Matrix<BigRational> a(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n + i) = 1;
  }
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw std::domain_error("singular matrix");
    a.swap_rows(c, p);
    BigRational inv = 1 / a(c, c);
    a.scale_row(c, inv);
    for (size_t i = 0; i < n; ++i)
      if (i != c && a(i, c) != 0) a.add_row_multiple(i, c, BigRational(-a(i, c)));
  }
  Matrix<BigRational> out(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out(i, j) = a(i, n + j);
  return out;
}

double FourierDuality::unitarity_defect() const {
  double worst = 0;
  for (size_t i = 0; i < size; ++i)
    for (size_t j = 0; j < size; ++j) {
      std::complex<double> s = 0;
      for (size_t k = 0; k < size; ++k) s += (*this)(i, k) * std::conj((*this)(j, k));
      worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
    }
  return worst;
}

FourierDuality fourier_duality_matrix(const Matrix<BigInteger>& m, unsigned long guard) {
  if (!m.square()) throw std::domain_error("fourier_duality_matrix needs a square matrix");
  BigInteger det = abs(determinant(m));
  if (det == 0) throw std::domain_error("fourier_duality_matrix needs a nonsingular matrix");
  if (det > guard)
    throw std::length_error("|det M| = " + det.get_str() + " exceeds the guard " +
                            std::to_string(guard));
  // L M R = D gives coker M = L^{-1}(box) and coker M^T = R^{-T}(box).
  auto s = smith_normal_form(m, true);
  Matrix<BigInteger> linv = unimodular_inverse(s.left);
  Matrix<BigInteger> rinvt = unimodular_inverse(s.right).transpose();
  FourierDuality out;
  for (const auto& t : box(s.diagonal)) out.x_reps.push_back(mat_vec(linv, t));
  for (const auto& t : box(s.diagonal)) out.y_reps.push_back(mat_vec(rinvt, t));
  out.size = out.x_reps.size();
  // Phase from an independent exact solve, not from the diagonal.
  Matrix<BigRational> minv = rational_inverse(m);
  const double scale = 1.0 / std::sqrt(static_cast<double>(det.get_ui()));
  const size_t n = m.rows();
  out.u.resize(out.size * out.size);
  for (size_t i = 0; i < out.size; ++i) {
    std::vector<BigRational> z(n, 0);
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) z[r] += minv(r, c) * out.x_reps[i][c];
    for (size_t j = 0; j < out.size; ++j) {
      BigRational ph = 0;
      for (size_t r = 0; r < n; ++r) ph += out.y_reps[j][r] * z[r];
      // Reduce modulo 1 exactly before going to floating point.
      BigInteger fl;
      mpz_fdiv_q(fl.get_mpz_t(), ph.get_num_mpz_t(), ph.get_den_mpz_t());
      BigRational frac = ph - BigRational(fl);
      double angle = 2 * std::numbers::pi * frac.get_d();
      out.u[i * out.size + j] = std::polar(scale, angle);
    }
  }
  return out;
}

}  // namespace kast
