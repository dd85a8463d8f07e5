#pragma once

#include <string>
#include <vector>

#include "kast/bigint.hpp"
#include "kast/laurent.hpp"

namespace kast {

// (n)_q = 1 + q + ... + q^(n-1).
LaurentPoly q_integer(long n);
// Gaussian binomial [n choose k]_q; zero when k > n.
LaurentPoly gaussian_binomial(long n, long k);
// d-th cyclotomic polynomial.
const LaurentPoly& cyclotomic(long d);
long euler_phi(long d);

struct QRoundFactor {
  enum class Kind { QInteger, Cyclotomic };
  Kind kind;
  long index;  // n for (n)_q, d for Phi_d
  LaurentPoly poly() const;
  std::string label() const;
};

struct QRoundFactorization {
  bool success = false;
  LaurentPoly unit;  // +-q^k
  std::vector<QRoundFactor> factors;
  LaurentPoly residual;  // 1 on success
  LaurentPoly product() const;  // unit * factors * residual
  std::string str() const;
};

// Unit first, then (n)_q with n descending, then Phi_d with d descending.
QRoundFactorization factor_q_round(const LaurentPoly& f);

struct SmoothFactorization {
  std::vector<BigInteger> primes;  // ascending, with multiplicity
  BigInteger residual;             // unfactored cofactor, >= 1
  unsigned long bound = 0;
  bool smooth() const { return residual == 1; }
  std::string str() const;
};

SmoothFactorization smooth_factor(const BigInteger& n, unsigned long bound);
std::vector<unsigned long> primes_up_to(unsigned long bound);

// Exact evaluation at an integer or rational point.
BigRational specialize(const LaurentPoly& f, const BigRational& q0);
BigInteger specialize_integer(const LaurentPoly& f, const BigInteger& q0);

// Squarefree in Z[q, q^-1]: squarefree content and squarefree primitive part.
// Integer content squarefreeness uses trial division up to content_bound and
// reports Unknown if a cofactor above the bound remains.
struct SquarefreeResult {
  enum class Verdict { Yes, No, Unknown } verdict;
  std::string witness;
};
SquarefreeResult polynomial_squarefree(const LaurentPoly& f, unsigned long content_bound = 100000);
SquarefreeResult integer_squarefree(const BigInteger& n, unsigned long bound = 100000);

}  // namespace kast
