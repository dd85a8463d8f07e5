#pragma once

#include <string>
#include <vector>

#include "kast/bigint.hpp"
#include "kast/laurent.hpp"
#include "kast/matrix.hpp"
#include "kast/rational_poly.hpp"
#include "kast/ring_traits.hpp"

namespace kast {

// coker M = Z^rows / im M.
struct Cokernel {
  size_t free_rank = 0;
  std::vector<BigInteger> torsion;  // > 1, each dividing the next

  BigInteger order() const;  // product of torsion; only meaningful when free_rank == 0
  std::string str() const;   // e.g. "Z + Z/3", "0"
  friend bool operator==(const Cokernel& a, const Cokernel& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
};

Cokernel cokernel_of(const Matrix<BigInteger>& m);

// Normalized non-unit invariant factors plus free rank; equal values mean the
// matrices are stably equivalent over a PID.
struct StableInvariants {
  RingTag ring = RingTag::Integers;
  size_t free_rank = 0;
  std::vector<std::string> factors;

  std::string str() const;
  friend bool operator==(const StableInvariants& a, const StableInvariants& b) {
    return a.ring == b.ring && a.free_rank == b.free_rank && a.factors == b.factors;
  }
};

StableInvariants stable_invariants(const Matrix<BigInteger>& m);
StableInvariants stable_invariants(const Matrix<RationalPoly>& m);
// Over Z[q,q^-1]; throws std::domain_error when the normal-form attempt fails.
StableInvariants stable_invariants(const Matrix<LaurentPoly>& m);
// Over Q[q,q^-1], the localization of Q[q] at q: entries are shifted into Q[q],
// reduced there, and powers of q are dropped from the invariant factors.
StableInvariants stable_invariants_rational(const Matrix<LaurentPoly>& m);

// Unit normalization used in reports.
BigInteger normalize_unit(const BigInteger& a);
LaurentPoly normalize_unit(const LaurentPoly& a);
// Primitive integer polynomial with positive leading coefficient.
LaurentPoly normalize_unit(const RationalPoly& a);

inline constexpr size_t kDefaultMinorGuard = 2'000'000;

// d_k = gcd of all k x k minors, for k = 1..rank. Throws std::length_error if
// the number of minors exceeds `guard`.
std::vector<BigInteger> determinantal_divisors(const Matrix<BigInteger>& m,
                                               size_t guard = kDefaultMinorGuard);

}  // namespace kast
