#include "kast/qfactor.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "kast/rational_poly.hpp"

namespace kast {

LaurentPoly q_integer(long n) {
  if (n <= 0) throw std::domain_error("q_integer requires n >= 1");
  return LaurentPoly::from_coeffs(0, std::vector<BigInteger>(static_cast<size_t>(n), BigInteger(1)));
}

LaurentPoly gaussian_binomial(long n, long k) {
  if (k < 0 || n < 0) throw std::domain_error("gaussian_binomial requires n, k >= 0");
  if (k > n) return {};
  LaurentPoly num(1), den(1);
  for (long i = 1; i <= k; ++i) {
    num *= q_integer(n - k + i);
    den *= q_integer(i);
  }
  auto r = num.exact_divide(den);
  if (!r) throw std::logic_error("gaussian binomial division not exact");
  return *r;
}

long euler_phi(long d) {
  long r = d;
  for (long p = 2; p * p <= d; ++p) {
    if (d % p == 0) {
      while (d % p == 0) d /= p;
      r -= r / p;
    }
  }
  if (d > 1) r -= r / d;
  return r;
}

const LaurentPoly& cyclotomic(long d) {
  static std::mutex mu;
  static std::map<long, LaurentPoly> cache;
  if (d <= 0) throw std::domain_error("cyclotomic index must be positive");
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  // Phi_d = (q^d - 1) / prod_{e | d, e < d} Phi_e, built bottom up.
  LaurentPoly num = LaurentPoly::q(d) - LaurentPoly(1);
  for (long e = 1; e < d; ++e) {
    if (d % e) continue;
    auto jt = cache.find(e);
    LaurentPoly phi;
    if (jt == cache.end()) {
      // Compute recursively without holding iterators across insertions.
      LaurentPoly n2 = LaurentPoly::q(e) - LaurentPoly(1);
      for (long f = 1; f < e; ++f) {
        if (e % f) continue;
        auto kt = cache.find(f);
        if (kt == cache.end()) throw std::logic_error("cyclotomic cache order");
        n2 = *n2.exact_divide(kt->second);
      }
      phi = cache.emplace(e, n2).first->second;
    } else {
      phi = jt->second;
    }
    num = *num.exact_divide(phi);
  }
  return cache.emplace(d, num).first->second;
}

LaurentPoly QRoundFactor::poly() const {
  return kind == Kind::QInteger ? q_integer(index) : cyclotomic(index);
}

std::string QRoundFactor::label() const {
  return kind == Kind::QInteger ? "(" + std::to_string(index) + ")_q"
                                : "Phi_" + std::to_string(index);
}

LaurentPoly QRoundFactorization::product() const {
  LaurentPoly p = unit;
  for (const auto& f : factors) p *= f.poly();
  return p * residual;
}

std::string QRoundFactorization::str() const {
  std::string s = unit.str();
  for (const auto& f : factors) s += " * " + f.label();
  if (!success) s += " * [" + residual.str() + "]";
  return s;
}

QRoundFactorization factor_q_round(const LaurentPoly& f) {
  if (f.is_zero()) throw std::domain_error("factor_q_round of zero");
  QRoundFactorization out;
  out.unit = LaurentPoly::monomial(f.lead() < 0 ? -1 : 1, f.min_exp());
  LaurentPoly r = f.unit_normalized();
  for (long n = r.span() + 1; n >= 2; --n) {
    LaurentPoly qn = q_integer(n);
    while (r.span() >= n - 1) {
      auto d = r.exact_divide(qn);
      if (!d) break;
      out.factors.push_back({QRoundFactor::Kind::QInteger, n});
      r = *d;
    }
  }
  // Remaining cyclotomic factors, largest index first. Phi_d has degree
  // phi(d) >= sqrt(d/2), so d <= 2 * span^2 bounds the search.
  long maxd = 2 * r.span() * r.span() + 2;
  for (long d = maxd; d >= 1 && r.span() > 0; --d) {
    if (euler_phi(d) > r.span()) continue;
    const LaurentPoly& phi = cyclotomic(d);
    while (r.span() >= phi.span()) {
      auto q = r.exact_divide(phi);
      if (!q) break;
      out.factors.push_back({QRoundFactor::Kind::Cyclotomic, d});
      r = *q;
    }
  }
  out.residual = r.unit_normalized();
  out.success = out.residual == LaurentPoly(1);
  return out;
}

std::vector<unsigned long> primes_up_to(unsigned long bound) {
  std::vector<unsigned long> ps;
  if (bound < 2) return ps;
  std::vector<bool> comp(bound + 1, false);
  for (unsigned long p = 2; p <= bound; ++p) {
    if (comp[p]) continue;
    ps.push_back(p);
    for (unsigned long m = p * p; m <= bound; m += p) comp[m] = true;
  }
  return ps;
}

std::string SmoothFactorization::str() const {
  std::string s;
  for (const auto& p : primes) s += (s.empty() ? "" : "*") + p.get_str();
  if (residual != 1 || s.empty()) s += (s.empty() ? "" : "*") + std::string("[") + residual.get_str() + "]";
  return s;
}

SmoothFactorization smooth_factor(const BigInteger& n, unsigned long bound) {
  if (n == 0) throw std::domain_error("smooth_factor of zero");
  SmoothFactorization out;
  out.bound = bound;
  BigInteger r = abs(n);
  for (unsigned long p : primes_up_to(bound)) {
    while (mpz_divisible_ui_p(r.get_mpz_t(), p)) {
      out.primes.emplace_back(p);
      mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), p);
    }
    if (r == 1) break;
  }
  out.residual = r;
  return out;
}

BigRational specialize(const LaurentPoly& f, const BigRational& q0) { return f.evaluate(q0); }

BigInteger specialize_integer(const LaurentPoly& f, const BigInteger& q0) {
  BigRational v = f.evaluate(BigRational(q0));
  if (v.get_den() != 1) throw std::domain_error("specialization is not an integer");
  return v.get_num();
}

SquarefreeResult integer_squarefree(const BigInteger& n, unsigned long bound) {
  if (n == 0) return {SquarefreeResult::Verdict::No, "0"};
  auto sf = smooth_factor(n, bound);
  for (size_t i = 1; i < sf.primes.size(); ++i) {
    if (sf.primes[i] == sf.primes[i - 1]) {
      return {SquarefreeResult::Verdict::No, sf.primes[i].get_str() + "^2"};
    }
  }
  if (sf.residual == 1) return {SquarefreeResult::Verdict::Yes, ""};
  // A cofactor with no prime below the bound is squarefree-undecided unless
  // it is a perfect square or smaller than bound^2 (then it is prime).
  BigInteger b2 = BigInteger(bound) * BigInteger(bound);
  if (sf.residual < b2) return {SquarefreeResult::Verdict::Yes, ""};
  if (mpz_perfect_square_p(sf.residual.get_mpz_t())) {
    return {SquarefreeResult::Verdict::No, "(" + sf.residual.get_str() + ") is a square"};
  }
  return {SquarefreeResult::Verdict::Unknown, sf.residual.get_str()};
}

SquarefreeResult polynomial_squarefree(const LaurentPoly& f, unsigned long content_bound) {
  if (f.is_zero()) return {SquarefreeResult::Verdict::No, "0"};
  auto c = integer_squarefree(f.content(), content_bound);
  if (c.verdict != SquarefreeResult::Verdict::Yes) return c;
  LaurentPoly p = f.primitive_part().unit_normalized();
  if (p.span() <= 0) return {SquarefreeResult::Verdict::Yes, ""};
  RationalPoly rp = RationalPoly::from_laurent(p);
  RationalPoly g = gcd(rp, rp.derivative());
  if (g.degree() > 0) {
    return {SquarefreeResult::Verdict::No, "(" + g.primitive_integer().str() + ")^2 divides"};
  }
  return {SquarefreeResult::Verdict::Yes, ""};
}

}  // namespace kast
