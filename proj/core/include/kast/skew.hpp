#pragma once

#include "kast/families.hpp"
#include "kast/gv.hpp"
#include "kast/hexagon.hpp"

namespace kast {

// Z(lambda/mu; q_a): a strip of a rows of unit triangles, lambda_1 + b wide
// (b the length of lambda), with up-triangle notches at positions
// lambda_i + b + 1 - i on the bottom row and down-triangle notches at
// mu_i + b + 1 - i on the top row. The edges joining Up(i,j) and Down(i,j)
// in row j weigh q^j. Matching weights sum to s_{lambda/mu}(1, q, ..., q^(a-1))
// up to a unit.
CellGraph skew_cells(const Partition& lambda, const Partition& mu, long a);
EmbeddedGraph build_skew_graph(const Partition& lambda, const Partition& mu, long a);

// J_ij = h_{lambda_i - mu_j - i + j}(q_a), b x b; dual: D_ij =
// e_{lambda'_i - mu'_j - i + j}(q_a), lambda_1 x lambda_1.
Matrix<LaurentPoly> jacobi_trudi(const Partition& lambda, const Partition& mu, long a, bool dual = false);
LaurentPoly complete_homogeneous_q(long m, long a);
LaurentPoly elementary_q(long m, long a);

// X(lambda/mu; q_a): a rows by lambda_1 + b columns of lattice points, edges
// pointing right (weight q^(r-1) in row r) and down (weight 1). Left endpoints
// on the top row at mu_i + b + 1 - i, right endpoints on the bottom row at
// lambda_i + b + 1 - i. Its Gessel-Viennot matrix is the transpose of J.
GVGraph skew_gv_graph(const Partition& lambda, const Partition& mu, long a);

}  // namespace kast
