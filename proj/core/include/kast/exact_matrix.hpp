#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "kast/matrix.hpp"
#include "kast/ring_traits.hpp"

namespace kast {

using ExactMatrix = std::variant<Matrix<BigInteger>, Matrix<LaurentPoly>, Matrix<RationalPoly>>;

RingTag ring_of(const ExactMatrix& m);
size_t rows_of(const ExactMatrix& m);
size_t cols_of(const ExactMatrix& m);

// Text format: a header line "rows cols ring", then one row per line with
// whitespace-separated entries. Polynomial entries are written in the usual
// syntax with the spaces removed ("1-2*q+q^-1"); the parser accepts both.
ExactMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const ExactMatrix& m);
ExactMatrix parse_matrix(const std::string& text);
std::string format_matrix(const ExactMatrix& m);

// Integer matrix embedded into the other rings.
Matrix<LaurentPoly> to_laurent(const Matrix<BigInteger>& m);
Matrix<RationalPoly> to_rational(const Matrix<BigInteger>& m);
// Entrywise evaluation at an integer q0 (q0 = +-1 keeps negative exponents exact).
Matrix<BigInteger> specialize(const Matrix<LaurentPoly>& m, const BigInteger& q0);

}  // namespace kast
