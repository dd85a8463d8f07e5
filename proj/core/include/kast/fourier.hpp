#pragma once

#include <complex>
#include <vector>

#include "kast/bigint.hpp"
#include "kast/matrix.hpp"

namespace kast {

// U_{x,y} = exp(2 pi i y^T M^{-1} x) / sqrt|det M| over coset representatives
// x of coker M and y of coker M^T.
struct FourierDuality {
  std::vector<std::vector<BigInteger>> x_reps, y_reps;
  size_t size = 0;
  std::vector<std::complex<double>> u;  // row-major size x size

  std::complex<double> operator()(size_t i, size_t j) const { return u[i * size + j]; }
  // max |(U U^*)_{ij} - delta_ij|
  double unitarity_defect() const;
};

inline constexpr unsigned long kDefaultFourierGuard = 4096;

FourierDuality fourier_duality_matrix(const Matrix<BigInteger>& m,
                                      unsigned long guard = kDefaultFourierGuard);

// Exact inverse over Q; throws std::domain_error if singular.
Matrix<BigRational> rational_inverse(const Matrix<BigInteger>& m);

}  // namespace kast
