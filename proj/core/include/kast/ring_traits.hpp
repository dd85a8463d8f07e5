#pragma once

#include <stdexcept>
#include <string>

#include "kast/bigint.hpp"
#include "kast/laurent.hpp"
#include "kast/rational_poly.hpp"

namespace kast {

enum class RingTag { Integers, Laurent, RationalPoly };

std::string ring_name(RingTag r);
RingTag parse_ring(const std::string& name);

// Per-ring services used by the generic algorithms. Integral-domain services
// (exact_div) exist for every ring; Euclidean services only for PIDs.
template <class T>
struct RingTraits;

template <>
struct RingTraits<BigInteger> {
  static constexpr RingTag tag = RingTag::Integers;
  static constexpr bool euclidean = true;
  static bool is_zero(const BigInteger& a) { return a == 0; }
  static bool is_unit(const BigInteger& a) { return a == 1 || a == -1; }
  static bool divides(const BigInteger& a, const BigInteger& b) {
    if (a == 0) return b == 0;
    return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
  }
  static BigInteger exact_div(const BigInteger& b, const BigInteger& a) {
    BigInteger q;
    mpz_divexact(q.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
    return q;
  }
  static BigInteger xgcd(const BigInteger& a, const BigInteger& b, BigInteger& x, BigInteger& y) {
    return kast::xgcd(a, b, x, y);
  }
  // Pivot order: absolute value.
  static bool smaller(const BigInteger& a, const BigInteger& b) {
    return cmpabs(a, b) < 0;
  }
  // u with u * a normalized (positive).
  static BigInteger normalizing_unit(const BigInteger& a) { return a < 0 ? -1 : 1; }
  static BigInteger unit_inverse(const BigInteger& u) { return u; }
  static std::string str(const BigInteger& a) { return a.get_str(); }
};

template <>
struct RingTraits<RationalPoly> {
  static constexpr RingTag tag = RingTag::RationalPoly;
  static constexpr bool euclidean = true;
  static bool is_zero(const RationalPoly& a) { return a.is_zero(); }
  static bool is_unit(const RationalPoly& a) { return a.is_unit(); }
  static bool divides(const RationalPoly& a, const RationalPoly& b) { return a.divides(b); }
  static RationalPoly exact_div(const RationalPoly& b, const RationalPoly& a) {
    RationalPoly q, r;
    RationalPoly::divmod(b, a, q, r);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
  }
  static RationalPoly xgcd(const RationalPoly& a, const RationalPoly& b, RationalPoly& x,
                           RationalPoly& y) {
    return kast::xgcd(a, b, x, y);
  }
  // Pivot order: degree, then leading coefficient magnitude.
  static bool smaller(const RationalPoly& a, const RationalPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return cmp(abs(a.lead()), abs(b.lead())) < 0;
  }
  static RationalPoly normalizing_unit(const RationalPoly& a) {
    return a.is_zero() ? RationalPoly(1) : RationalPoly(BigRational(1) / a.lead());
  }
  static RationalPoly unit_inverse(const RationalPoly& u) { return RationalPoly(BigRational(1) / u.lead()); }
  static std::string str(const RationalPoly& a) { return a.str(); }
};

template <>
struct RingTraits<LaurentPoly> {
  static constexpr RingTag tag = RingTag::Laurent;
  static constexpr bool euclidean = false;
  static bool is_zero(const LaurentPoly& a) { return a.is_zero(); }
  static bool is_unit(const LaurentPoly& a) { return a.is_unit(); }
  static bool divides(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b.is_zero();
    return b.divisible_by(a);
  }
  static LaurentPoly exact_div(const LaurentPoly& b, const LaurentPoly& a) {
    auto q = b.exact_divide(a);
    if (!q) throw std::domain_error("inexact Laurent division");
    return *q;
  }
  static bool smaller(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.span() != b.span()) return a.span() < b.span();
    return cmpabs(a.lead(), b.lead()) < 0;
  }
  static LaurentPoly normalizing_unit(const LaurentPoly& a) { return a.normalizing_unit(); }
  static LaurentPoly unit_inverse(const LaurentPoly& u) {
    return LaurentPoly::monomial(u.lead(), -u.min_exp());
  }
  static std::string str(const LaurentPoly& a) { return a.str(); }
};

}  // namespace kast
