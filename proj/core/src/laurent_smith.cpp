#include "kast/laurent_smith.hpp"

#include <algorithm>
#include <sstream>

#include "kast/qfactor.hpp"

namespace kast {
namespace {

using Poly = std::vector<unsigned long>;  // ascending, mod a prime

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

unsigned long inverse_mod(unsigned long a, unsigned long p) {
  // p is prime and small, so Fermat is cheap enough.
  unsigned long r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

Poly reduce_mod(const LaurentPoly& f, unsigned long p) {
  Poly out;
  for (const auto& c : f.coeffs()) out.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
  // Drop powers of q: they are units.
  size_t lead_zeros = 0;
  while (lead_zeros < out.size() && out[lead_zeros] == 0) ++lead_zeros;
  out.erase(out.begin(), out.begin() + static_cast<long>(lead_zeros));
  trim(out);
  return out;
}

Poly poly_mod(Poly a, const Poly& b, unsigned long p) {
  unsigned long inv = inverse_mod(b.back(), p);
  while (a.size() >= b.size() && !a.empty()) {
    unsigned long c = a.back() * inv % p;
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i)
      a[shift + i] = (a[shift + i] + (p - c) * b[i]) % p;
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, unsigned long p) {
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    unsigned long inv = inverse_mod(a.back(), p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

LaurentPoly laurent_gcd_all(const std::vector<LaurentPoly>& v) {
  LaurentPoly g;
  for (const auto& e : v) {
    g = gcd(g, e);
    if (g.is_unit()) break;
  }
  return g;
}

}  // namespace

std::string NonPrincipalWitness::str() const {
  std::ostringstream os;
  os << "ideal (";
  for (size_t i = 0; i < generators.size(); ++i) os << (i ? ", " : "") << generators[i].str();
  os << ") = (" << gcd.str() << ") * J with J inside (" << prime;
  if (!factor.empty()) {
    LaurentPoly h;
    for (size_t i = 0; i < factor.size(); ++i)
      h += LaurentPoly::monomial(BigInteger(factor[i]), static_cast<long>(i));
    os << ", " << h.str();
  }
  os << ")";
  return os.str();
}

bool find_nonprincipal_witness(const std::vector<LaurentPoly>& entries, NonPrincipalWitness& out,
                               unsigned long prime_bound) {
  std::vector<LaurentPoly> gens;
  for (const auto& e : entries)
    if (!e.is_zero()) gens.push_back(e);
  if (gens.empty()) return false;
  LaurentPoly g = laurent_gcd_all(gens);
  std::vector<LaurentPoly> quot;
  for (const auto& e : gens) {
    LaurentPoly qe = *e.exact_divide(g);
    if (qe.is_unit()) return false;
    quot.push_back(std::move(qe));
  }
  for (unsigned long p : primes_up_to(prime_bound)) {
    Poly h;
    bool all_zero = true;
    for (const auto& e : quot) {
      Poly r = reduce_mod(e, p);
      if (r.empty()) continue;
      all_zero = false;
      h = h.empty() ? poly_gcd(r, Poly{}, p) : poly_gcd(h, r, p);
      if (h.size() == 1) break;
    }
    if (all_zero || h.size() >= 2) {
      out.generators = gens;
      out.gcd = g;
      out.prime = p;
      out.factor = all_zero ? Poly{} : h;
      return true;
    }
  }
  return false;
}

bool verify_witness(const NonPrincipalWitness& w, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (w.generators.empty()) return fail("no generators");
  if (primes_up_to(w.prime).empty() || primes_up_to(w.prime).back() != w.prime)
    return fail("modulus is not prime");
  LaurentPoly g = laurent_gcd_all(w.generators);
  if (!(g.unit_normalized() == w.gcd.unit_normalized())) return fail("gcd mismatch");
  if (!w.factor.empty()) {
    if (w.factor.size() < 2) return fail("factor has degree 0");
    if (w.factor.front() % w.prime == 0) return fail("factor is divisible by q");
  }
  for (const auto& e : w.generators) {
    auto qe = e.exact_divide(g);
    if (!qe) return fail("gcd does not divide " + e.str());
    Poly r = reduce_mod(*qe, w.prime);
    if (w.factor.empty()) {
      if (!r.empty()) return fail("generator not divisible by the prime");
    } else if (!r.empty() && !poly_mod(r, w.factor, w.prime).empty()) {
      return fail("factor does not divide " + e.str() + " / gcd");
    }
  }
  return true;
}

std::string NormalFormAttempt::outcome_name() const {
  switch (outcome) {
    case Outcome::Success:
      return "success";
    case Outcome::NonPrincipal:
      return "non-principal";
    case Outcome::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

NormalFormAttempt attempt_once(const Matrix<LaurentPoly>& m, size_t step_limit, bool transforms) {
  using R = RingTraits<LaurentPoly>;
  using LP = LaurentPoly;
  const size_t rows = m.rows(), cols = m.cols(), k = std::min(rows, cols);
  Matrix<LP> a = m, L, Rt;
  if (transforms) {
    L = Matrix<LP>::identity(rows);
    Rt = Matrix<LP>::identity(cols);
  }
  auto row_add = [&](size_t i, size_t src, const LP& c) {
    a.add_row_multiple(i, src, c);
    if (transforms) L.add_row_multiple(i, src, c);
  };
  auto col_add = [&](size_t j, size_t src, const LP& c) {
    a.add_col_multiple(j, src, c);
    if (transforms) Rt.add_col_multiple(j, src, c);
  };
  auto row_swap = [&](size_t i, size_t j) {
    a.swap_rows(i, j);
    if (transforms) L.swap_rows(i, j);
  };
  auto col_swap = [&](size_t i, size_t j) {
    a.swap_cols(i, j);
    if (transforms) Rt.swap_cols(i, j);
  };
  auto row_scale = [&](size_t i, const LP& u) {
    a.scale_row(i, u);
    if (transforms) L.scale_row(i, u);
  };

  // Every invariant factor divides the determinant, whose span is at most
  // the sum over rows of the row's exponent range. Entries far beyond that
  // mean the reduction is cycling rather than converging.
  long det_span_bound = 0;
  for (size_t i = 0; i < rows; ++i) {
    bool any = false;
    long lo = 0, hi = 0;
    for (size_t j = 0; j < cols; ++j) {
      const LP& e = m(i, j);
      if (e.is_zero()) continue;
      lo = any ? std::min(lo, e.min_exp()) : e.min_exp();
      hi = any ? std::max(hi, e.max_exp()) : e.max_exp();
      any = true;
    }
    det_span_bound += hi - lo;
  }
  long span_cap = 2 * det_span_bound + 16;
  // Coefficients get the same treatment: successful reductions stay within
  // a few bits of the input.
  size_t input_bits = 1;
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j)
      for (const auto& c : m(i, j).coeffs())
        input_bits = std::max(input_bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  const size_t bits_cap = input_bits + 32;

  NormalFormAttempt out;
  size_t t = 0;
  auto block_entries = [&] {
    std::vector<LP> v;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j) v.push_back(a(i, j));
    return v;
  };
  auto stop = [&](NormalFormAttempt::Outcome o, std::string msg) {
    out.outcome = o;
    out.message = std::move(msg);
    std::vector<size_t> rs, cs;
    for (size_t i = t; i < rows; ++i) rs.push_back(i);
    for (size_t j = t; j < cols; ++j) cs.push_back(j);
    out.residual = a.submatrix(rs, cs);
    out.form.rank = t;
    out.form.diagonal.assign(k, LP(0));
    for (size_t i = 0; i < t; ++i) out.form.diagonal[i] = a(i, i);
    out.form.has_transforms = transforms;
    if (transforms) {
      out.form.left = L;
      out.form.right = Rt;
    }
    return out;
  };

  // Reduces the entry at `f` (in row/column `idx`) against the pivot by
  // subtracting monomial multiples that cancel its top or bottom term.
  auto reduce = [&](bool in_column, size_t idx) {
    while (true) {
      const LP& p = a(t, t);
      const LP f = in_column ? a(idx, t) : a(t, idx);
      if (f.is_zero() || f.span() < p.span()) return;
      LP c;
      if (RingTraits<BigInteger>::divides(p.lead(), f.lead())) {
        c = LP::monomial(-RingTraits<BigInteger>::exact_div(f.lead(), p.lead()),
                         f.max_exp() - p.max_exp());
      } else if (RingTraits<BigInteger>::divides(p.trail(), f.trail())) {
        c = LP::monomial(-RingTraits<BigInteger>::exact_div(f.trail(), p.trail()),
                         f.min_exp() - p.min_exp());
      } else {
        return;
      }
      if (in_column) row_add(idx, t, c);
      else col_add(idx, t, c);
    }
  };

  for (; t < k; ++t) {
    while (true) {
      if (++out.steps > step_limit)
        return stop(NormalFormAttempt::Outcome::Inconclusive, "step limit exceeded");
      // Units first, then minimal (span, |lead|).
      bool found = false, unit = false, too_large = false;
      size_t pi = 0, pj = 0;
      for (size_t i = t; i < rows && !unit; ++i)
        for (size_t j = t; j < cols; ++j) {
          const LP& e = a(i, j);
          if (e.is_zero()) continue;
          if (e.span() > span_cap) too_large = true;
          for (const auto& c : e.coeffs())
            if (mpz_sizeinbase(c.get_mpz_t(), 2) > bits_cap) too_large = true;
          if (e.is_unit()) {
            found = unit = true;
            pi = i;
            pj = j;
            break;
          }
          if (!found || R::smaller(e, a(pi, pj))) {
            found = true;
            pi = i;
            pj = j;
          }
        }
      if (too_large && !unit)
        return stop(NormalFormAttempt::Outcome::Inconclusive, "entry growth limit exceeded");
      if (!found) {
        out.form.diagonal.assign(k, LP(0));
        for (size_t i = 0; i < t; ++i) out.form.diagonal[i] = a(i, i);
        out.form.rank = t;
        out.form.has_transforms = transforms;
        if (transforms) {
          out.form.left = std::move(L);
          out.form.right = std::move(Rt);
        }
        out.outcome = NormalFormAttempt::Outcome::Success;
        return out;
      }
      row_swap(t, pi);
      col_swap(t, pj);
      if (unit) {
        row_scale(t, R::normalizing_unit(a(t, t)));
        for (size_t i = t + 1; i < rows; ++i)
          if (!a(i, t).is_zero()) row_add(i, t, -a(i, t));
        for (size_t j = t + 1; j < cols; ++j)
          if (!a(t, j).is_zero()) col_add(j, t, -a(t, j));
        break;
      }
      bool changed = false, stuck = false, stuck_in_column = false;
      size_t stuck_idx = 0;
      for (int pass = 0; pass < 2 && !changed && !stuck; ++pass) {
        const bool in_column = pass == 0;
        const size_t end = in_column ? rows : cols;
        for (size_t idx = t + 1; idx < end; ++idx) {
          const LP f = in_column ? a(idx, t) : a(t, idx);
          if (f.is_zero()) continue;
          if (auto c = f.exact_divide(a(t, t))) {
            if (in_column) row_add(idx, t, -*c);
            else col_add(idx, t, -*c);
            continue;
          }
          reduce(in_column, idx);
          const LP& g = in_column ? a(idx, t) : a(t, idx);
          if (g.is_zero()) continue;
          if (R::smaller(g, a(t, t))) {
            changed = true;
          } else {
            stuck = true;
            stuck_in_column = in_column;
            stuck_idx = idx;
          }
          break;
        }
      }
      if (changed) continue;
      if (stuck) {
        NonPrincipalWitness w;
        if (find_nonprincipal_witness(block_entries(), w)) {
          out.witness = std::move(w);
          return stop(NormalFormAttempt::Outcome::NonPrincipal,
                      "entry ideal of the residual block is not principal");
        }
        // Integer Bezout on leading coefficients; the 2x2 mix has
        // determinant q^s, a unit.
        const LP p = a(t, t);
        const LP f = stuck_in_column ? a(stuck_idx, t) : a(t, stuck_idx);
        BigInteger x, y;
        BigInteger g = xgcd(p.lead(), f.lead(), x, y);
        long s = f.max_exp() - p.max_exp();
        LP qs = LP::q(s);
        LP m11 = qs * LP(BigInteger(x)), m12 = LP(BigInteger(y));
        LP m21 = qs * LP(BigInteger(-(f.lead() / g))), m22 = LP(BigInteger(p.lead() / g));
        if (stuck_in_column) {
          a.mix_rows(t, stuck_idx, m11, m12, m21, m22);
          if (transforms) L.mix_rows(t, stuck_idx, m11, m12, m21, m22);
        } else {
          a.mix_cols(t, stuck_idx, m11, m12, m21, m22);
          if (transforms) Rt.mix_cols(t, stuck_idx, m11, m12, m21, m22);
        }
        continue;
      }
      // Row and column are clear; enforce divisibility of the interior.
      bool fixed = false;
      for (size_t i = t + 1; i < rows && !fixed; ++i)
        for (size_t j = t + 1; j < cols; ++j)
          if (!R::divides(a(t, t), a(i, j))) {
            row_add(t, i, LP(1));
            fixed = true;
            break;
          }
      if (fixed) continue;
      row_scale(t, R::normalizing_unit(a(t, t)));
      break;
    }
  }
  out.form.diagonal.assign(k, LP(0));
  for (size_t i = 0; i < k; ++i) out.form.diagonal[i] = a(i, i);
  out.form.rank = k;
  out.form.has_transforms = transforms;
  if (transforms) {
    out.form.left = std::move(L);
    out.form.right = std::move(Rt);
  }
  out.outcome = NormalFormAttempt::Outcome::Success;
  return out;
}

}  // namespace

NormalFormAttempt laurent_smith_attempt(const Matrix<LaurentPoly>& m, size_t step_limit,
                                        bool transforms) {
  NormalFormAttempt direct = attempt_once(m, step_limit, transforms);
  if (direct.outcome != NormalFormAttempt::Outcome::Inconclusive) return direct;
  // Pivot choice depends on the orientation; the transpose has the same
  // invariant factors and sometimes closes where the original cycles.
  NormalFormAttempt t = attempt_once(m.transpose(), step_limit, transforms);
  if (!t.success()) {
    direct.steps += t.steps;
    return direct;
  }
  t.steps += direct.steps;
  if (transforms) {
    Matrix<LaurentPoly> left = t.form.right.transpose();
    t.form.right = t.form.left.transpose();
    t.form.left = std::move(left);
  }
  return t;
}

}  // namespace kast
