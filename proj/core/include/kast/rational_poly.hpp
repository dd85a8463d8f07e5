#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kast/bigint.hpp"
#include "kast/laurent.hpp"

namespace kast {

// Polynomial in q over Q, coefficients ascending, leading coefficient nonzero.
class RationalPoly {
 public:
  RationalPoly() = default;
  RationalPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit RationalPoly(const BigRational& c);
  explicit RationalPoly(std::vector<BigRational> coeffs);
  static RationalPoly monomial(const BigRational& c, int e);
  // Requires min_exp() >= 0.
  static RationalPoly from_laurent(const LaurentPoly& f);

  bool is_zero() const { return c_.empty(); }
  // Units of Q[q] are the nonzero constants.
  bool is_unit() const { return c_.size() == 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const BigRational& lead() const { return c_.back(); }
  const std::vector<BigRational>& coeffs() const { return c_; }
  BigRational coeff(int e) const;

  RationalPoly operator-() const;
  RationalPoly& operator+=(const RationalPoly& o);
  RationalPoly& operator-=(const RationalPoly& o);
  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  RationalPoly& operator*=(const RationalPoly& o) { return *this = *this * o; }
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const RationalPoly& a, const RationalPoly& b) { return !(a == b); }
  friend bool operator<(const RationalPoly& a, const RationalPoly& b);

  RationalPoly scaled(const BigRational& k) const;
  RationalPoly monic() const;
  RationalPoly derivative() const;
  // a = quot * b + rem with deg rem < deg b.
  static void divmod(const RationalPoly& a, const RationalPoly& b, RationalPoly& quot,
                     RationalPoly& rem);
  bool divides(const RationalPoly& f) const;

  // Integral Laurent polynomial when all coefficients are integers.
  bool is_integral() const;
  LaurentPoly to_laurent() const;
  // Primitive integer polynomial with positive leading coefficient.
  LaurentPoly primitive_integer() const;

  // Same syntax as LaurentPoly with coefficients a or a/b and e >= 0.
  static RationalPoly parse(const std::string& text);
  std::string str() const;

 private:
  void trim();
  std::vector<BigRational> c_;
};

// Monic gcd; gcd(0, 0) = 0.
RationalPoly gcd(const RationalPoly& a, const RationalPoly& b);
// g = monic gcd with a*x + b*y = g.
RationalPoly xgcd(const RationalPoly& a, const RationalPoly& b, RationalPoly& x, RationalPoly& y);

}  // namespace kast
