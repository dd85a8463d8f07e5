#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kast/bigint.hpp"

namespace kast {

// Integer Laurent polynomial in q. Stored densely from the lowest exponent
// with both ends trimmed, so equal polynomials have identical storage.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const BigInteger& c);

  static LaurentPoly monomial(const BigInteger& c, long e);
  static LaurentPoly q(long e = 1) { return monomial(1, e); }
  static LaurentPoly from_coeffs(long low, std::vector<BigInteger> coeffs);

  // Parses the text syntax, e.g. "1 - 2*q + q^3" or "q^-1 + 1".
  static LaurentPoly parse(std::string_view text);
  std::string str() const;

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1 && (c_.empty() || low_ == 0); }
  bool is_monomial() const { return c_.size() == 1; }
  // Units of Z[q, q^-1] are +-q^k.
  bool is_unit() const;

  long low() const { return low_; }
  long min_exp() const { return low_; }
  long max_exp() const { return low_ + static_cast<long>(c_.size()) - 1; }
  long span() const { return c_.empty() ? -1 : static_cast<long>(c_.size()) - 1; }
  size_t term_count() const;
  const std::vector<BigInteger>& coeffs() const { return c_; }
  BigInteger coeff(long e) const;
  const BigInteger& lead() const { return c_.back(); }
  const BigInteger& trail() const { return c_.front(); }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.c_ == b.c_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
  // Arbitrary total order for deterministic sorting.
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly shifted(long k) const;
  LaurentPoly scaled(const BigInteger& k) const;
  LaurentPoly pow(unsigned n) const;

  // Exact quotient when divisor | *this in Z[q, q^-1]; nullopt otherwise.
  // Long division aborts at the first coefficient that does not divide.
  std::optional<LaurentPoly> exact_divide(const LaurentPoly& divisor) const;
  bool divisible_by(const LaurentPoly& divisor) const { return exact_divide(divisor).has_value(); }

  // Shift to minimum exponent 0 and make the leading coefficient positive.
  LaurentPoly unit_normalized() const;
  // The unit u with u * (*this) == unit_normalized().
  LaurentPoly normalizing_unit() const;

  BigInteger content() const;
  LaurentPoly primitive_part() const;
  // Formal derivative d/dq.
  LaurentPoly derivative() const;
  BigRational evaluate(const BigRational& q0) const;

 private:
  void trim();

  long low_ = 0;
  std::vector<BigInteger> c_;
};

// gcd in Z[q, q^-1], unit-normalized (content gcd times primitive gcd).
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace kast
