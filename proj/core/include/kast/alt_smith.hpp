#pragma once

#include <vector>

#include "kast/bigint.hpp"
#include "kast/matrix.hpp"

namespace kast {

// Congruence normal form of an alternating integer matrix:
// B^T A B = diag([[0,e_1],[-e_1,0]], ..., zeros) with e_i | e_{i+1}, e_i > 0.
struct AltSmithForm {
  std::vector<BigInteger> blocks;
  Matrix<BigInteger> transform;  // B

  Matrix<BigInteger> block_matrix(size_t n) const;
};

AltSmithForm alternating_smith_form(const Matrix<BigInteger>& a);

bool verify_alternating_smith(const Matrix<BigInteger>& a, const AltSmithForm& s,
                              std::string* why = nullptr);

}  // namespace kast
