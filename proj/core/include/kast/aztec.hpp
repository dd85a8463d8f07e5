#pragma once

#include <vector>

#include "kast/bigint.hpp"
#include "kast/graph.hpp"
#include "kast/gv.hpp"
#include "kast/matrix.hpp"

namespace kast {

// Z_A(n): unit squares [i,i+1] x [j,j+1] inside |x| + |y| <= n + 1, black
// when i + j is even, vertices sorted by (j, i).
EmbeddedGraph build_aztec_graph(long n);

// B(n)_ij = binom(i, j) for 0 <= i, j < n.
Matrix<BigInteger> binomial_matrix(long n);
// Inverse of B(n): (-1)^(i-j) binom(i, j).
Matrix<BigInteger> binomial_matrix_inverse(long n);
// n x (n+1) matrices [I | 0] and [0 | I].
Matrix<BigInteger> shift_left(long n);
Matrix<BigInteger> shift_right(long n);
Matrix<BigInteger> kronecker(const Matrix<BigInteger>& a, const Matrix<BigInteger>& b);

// R (x) R^T + L (x) R^T + R (x) L^T - L (x) L^T.
Matrix<BigInteger> aztec_matrix_closed_form(long n);

// M'(n) = R (x) R^T - 2 L (x) L^T, together with the unimodular P, Q with
// P M_A(n) Q = M'(n).
struct AztecReduction {
  Matrix<BigInteger> p, q, reduced;
};
AztecReduction aztec_reduction(long n);

// X(k): diagonal 1, superdiagonal -2. Y(k): diagonal -2, superdiagonal 1.
Matrix<BigInteger> aztec_block_x(long k);
Matrix<BigInteger> aztec_block_y(long k);

struct AztecBlock {
  bool is_y = false;
  long k = 0;
  std::vector<size_t> rows, cols;  // positions in M'(n), in block order
};

// Splits M'(n) into its connected blocks, each reordered into X(k) or Y(k).
// Throws std::logic_error if a block has another shape.
std::vector<AztecBlock> aztec_blocks(long n);

// V(n)_ij = D(i, j) for 0 <= i, j < n by the recurrence, and by the closed
// form sum_k binom(i,k) binom(j,k) 2^k.
Matrix<BigInteger> delannoy_matrix(long n);
Matrix<BigInteger> delannoy_closed_form(long n);
// V'(n) = diag(2^k), with V(n) = B(n) V'(n) B(n)^T.
Matrix<BigInteger> delannoy_diagonal(long n);

// G(n): lattice points -n <= x <= 0, 0 <= y <= n with east, north and
// north-east steps; left endpoint i at (-i, 0), right endpoint j at (0, j),
// 0 <= i, j <= n. Its Gessel-Viennot matrix is delannoy_matrix(n + 1); the
// first endpoints coincide.
GVGraph delannoy_gv_graph(long n);

}  // namespace kast
