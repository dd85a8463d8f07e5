#pragma once

#include <string>
#include <vector>

#include "kast/laurent.hpp"
#include "kast/smith.hpp"

namespace kast {

// Certificate that the ideal generated by `generators` in Z[q,q^-1] is not
// principal: with g their gcd, every generator / g lies in the proper ideal
// (prime, factor), where factor has degree >= 1 over F_prime and is prime to q.
struct NonPrincipalWitness {
  std::vector<LaurentPoly> generators;
  LaurentPoly gcd;
  unsigned long prime = 0;
  std::vector<unsigned long> factor;  // ascending coefficients mod prime

  std::string str() const;
};

// Re-checks a witness from scratch.
bool verify_witness(const NonPrincipalWitness& w, std::string* why = nullptr);

// Searches primes up to `prime_bound` for a witness that the entries generate
// a non-principal ideal. Absence of a witness proves nothing.
bool find_nonprincipal_witness(const std::vector<LaurentPoly>& entries, NonPrincipalWitness& out,
                               unsigned long prime_bound = 1000);

struct NormalFormAttempt {
  enum class Outcome { Success, NonPrincipal, Inconclusive };
  Outcome outcome = Outcome::Inconclusive;
  SmithForm<LaurentPoly> form;  // complete on success, partial otherwise
  Matrix<LaurentPoly> residual;  // unreduced block on failure
  NonPrincipalWitness witness;
  size_t steps = 0;
  std::string message;

  bool success() const { return outcome == Outcome::Success; }
  std::string outcome_name() const;
};

inline constexpr size_t kDefaultLaurentStepLimit = 10000;

// Gives up as Inconclusive after step_limit pivot steps, or once an entry
// outgrows a bound on the span of the determinant or its coefficients grow
// 32 bits past the largest input coefficient. An inconclusive run is
// retried once on the transpose; transforms always refer to `m`.
NormalFormAttempt laurent_smith_attempt(const Matrix<LaurentPoly>& m,
                                        size_t step_limit = kDefaultLaurentStepLimit,
                                        bool transforms = true);

}  // namespace kast
