#include "kast/cokernel.hpp"

#include <stdexcept>

#include "kast/det.hpp"
#include "kast/laurent_smith.hpp"
#include "kast/smith.hpp"

namespace kast {

BigInteger Cokernel::order() const {
  BigInteger p = 1;
  for (const auto& t : torsion) p *= t;
  return p;
}

std::string Cokernel::str() const {
  std::string out;
  for (size_t i = 0; i < free_rank; ++i) out += out.empty() ? "Z" : " + Z";
  for (const auto& t : torsion) out += (out.empty() ? "Z/" : " + Z/") + t.get_str();
  return out.empty() ? "0" : out;
}

Cokernel cokernel_of(const Matrix<BigInteger>& m) {
  auto s = smith_normal_form(m, false);
  Cokernel c;
  c.free_rank = m.rows() - s.rank;
  for (const auto& d : s.nontrivial()) c.torsion.push_back(abs(d));
  return c;
}

std::string StableInvariants::str() const {
  std::string out = "free_rank=" + std::to_string(free_rank) + " [";
  for (size_t i = 0; i < factors.size(); ++i) out += (i ? ", " : "") + factors[i];
  return out + "]";
}

BigInteger normalize_unit(const BigInteger& a) { return abs(a); }
LaurentPoly normalize_unit(const LaurentPoly& a) { return a.unit_normalized(); }
LaurentPoly normalize_unit(const RationalPoly& a) { return a.primitive_integer(); }

StableInvariants stable_invariants(const Matrix<BigInteger>& m) {
  auto s = smith_normal_form(m, false);
  StableInvariants out{RingTag::Integers, m.rows() - s.rank, {}};
  for (const auto& d : s.nontrivial()) out.factors.push_back(normalize_unit(d).get_str());
  return out;
}

StableInvariants stable_invariants(const Matrix<RationalPoly>& m) {
  auto s = smith_normal_form(m, false);
  StableInvariants out{RingTag::RationalPoly, m.rows() - s.rank, {}};
  for (const auto& d : s.nontrivial()) out.factors.push_back(normalize_unit(d).str());
  return out;
}

StableInvariants stable_invariants(const Matrix<LaurentPoly>& m) {
  auto a = laurent_smith_attempt(m, kDefaultLaurentStepLimit, false);
  if (!a.success())
    throw std::domain_error("Laurent normal form " + a.outcome_name() + ": " + a.message);
  StableInvariants out{RingTag::Laurent, m.rows() - a.form.rank, {}};
  for (const auto& d : a.form.nontrivial()) out.factors.push_back(normalize_unit(d).str());
  return out;
}

StableInvariants stable_invariants_rational(const Matrix<LaurentPoly>& m) {
  Matrix<RationalPoly> r(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i) {
    long low = 0;
    for (size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) low = std::min(low, m(i, j).min_exp());
    for (size_t j = 0; j < m.cols(); ++j)
      r(i, j) = RationalPoly::from_laurent(m(i, j).shifted(-low));
  }
  auto s = smith_normal_form(r, false);
  StableInvariants out{RingTag::RationalPoly, m.rows() - s.rank, {}};
  for (const auto& d : s.nontrivial()) {
    LaurentPoly f = normalize_unit(d).unit_normalized();
    if (!f.is_unit()) out.factors.push_back(f.str());
  }
  return out;
}

namespace {

// Calls f(indices) for every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(size_t n, size_t k, F&& f) {
  std::vector<size_t> idx(k);
  for (size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<BigInteger> determinantal_divisors(const Matrix<BigInteger>& m, size_t guard) {
  const size_t kmax = std::min(m.rows(), m.cols());
  size_t total = 0;
  for (size_t k = 1; k <= kmax; ++k) {
    BigInteger c = binomial(static_cast<long>(m.rows()), static_cast<long>(k)) *
                   binomial(static_cast<long>(m.cols()), static_cast<long>(k));
    total += c.fits_ulong_p() ? c.get_ui() : guard + 1;
    if (total > guard)
      throw std::length_error("determinantal_divisors: " + std::to_string(total) +
                              "+ minors exceed the guard of " + std::to_string(guard));
  }
  std::vector<BigInteger> out;
  for (size_t k = 1; k <= kmax; ++k) {
    BigInteger g = 0;
    for_each_subset(m.rows(), k, [&](const std::vector<size_t>& rs) {
      for_each_subset(m.cols(), k, [&](const std::vector<size_t>& cs) {
        if (g == 1) return;
        g = gcd(g, determinant(m.submatrix(rs, cs)));
      });
    });
    if (g == 0) break;
    out.push_back(g);
  }
  return out;
}

}  // namespace kast
