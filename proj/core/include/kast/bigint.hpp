#pragma once

#include <gmpxx.h>

#include <string>

namespace kast {

// Arbitrary precision integers are GMP integers.
using BigInteger = mpz_class;
using BigRational = mpq_class;

inline std::string to_string(const BigInteger& x) { return x.get_str(); }

inline int cmpabs(const BigInteger& a, const BigInteger& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

BigInteger binomial(long n, long k);

// Nonnegative gcd; gcd(0, 0) = 0.
inline BigInteger gcd(const BigInteger& a, const BigInteger& b) {
  BigInteger g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Returns g = gcd(a, b) >= 0 with a*x + b*y = g.
BigInteger xgcd(const BigInteger& a, const BigInteger& b, BigInteger& x,
                BigInteger& y);

}  // namespace kast
