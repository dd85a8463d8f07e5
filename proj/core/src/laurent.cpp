#include "kast/laurent.hpp"

#include <cctype>
#include <cstdint>
#include <vector>
#include <stdexcept>

#include "kast/rational_poly.hpp"

namespace kast {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

LaurentPoly::LaurentPoly(const BigInteger& c) {
  if (c != 0) c_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const BigInteger& c, long e) {
  LaurentPoly p(c);
  if (!p.is_zero()) p.low_ = e;
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(long low, std::vector<BigInteger> coeffs) {
  LaurentPoly p;
  p.low_ = low;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  size_t z = 0;
  while (z < c_.size() && c_[z] == 0) ++z;
  if (z > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(z));
    low_ += static_cast<long>(z);
  }
  if (c_.empty()) low_ = 0;
}

bool LaurentPoly::is_unit() const {
  return c_.size() == 1 && (c_[0] == 1 || c_[0] == -1);
}

size_t LaurentPoly::term_count() const {
  size_t n = 0;
  for (const auto& c : c_) n += (c != 0);
  return n;
}

BigInteger LaurentPoly::coeff(long e) const {
  if (c_.empty() || e < low_ || e > max_exp()) return 0;
  return c_[static_cast<size_t>(e - low_)];
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  long lo = std::min(low_, o.low_);
  long hi = std::max(max_exp(), o.max_exp());
  if (lo < low_) c_.insert(c_.begin(), static_cast<size_t>(low_ - lo), BigInteger(0));
  low_ = lo;
  c_.resize(static_cast<size_t>(hi - lo + 1), BigInteger(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[static_cast<size_t>(o.low_ - lo) + i] += o.c_[i];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInteger> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return LaurentPoly::from_coeffs(a.low_ + b.low_, std::move(c));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.low_ != b.low_) return a.low_ < b.low_;
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  }
  return false;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::scaled(const BigInteger& k) const {
  if (k == 0) return {};
  LaurentPoly r = *this;
  for (auto& c : r.c_) c *= k;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly r(1), b = *this;
  while (n) {
    if (n & 1u) r *= b;
    n >>= 1u;
    if (n) b *= b;
  }
  return r;
}

std::optional<LaurentPoly> LaurentPoly::exact_divide(const LaurentPoly& g) const {
  if (g.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
  if (is_zero()) return LaurentPoly();
  if (g.is_unit()) {
    LaurentPoly r = shifted(-g.low_);
    if (g.c_[0] < 0) r = -r;
    return r;
  }
  // Both shifted to minimum exponent 0; ordinary long division in Z[q].
  if (c_.size() < g.c_.size()) return std::nullopt;
  std::vector<BigInteger> rem = c_;
  const size_t dg = g.c_.size() - 1;
  std::vector<BigInteger> quot(rem.size() - dg);
  const BigInteger& lc = g.c_.back();
  BigInteger t;
  for (size_t k = rem.size(); k-- > dg;) {
    if (rem[k] == 0) continue;
    if (!mpz_divisible_p(rem[k].get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    mpz_divexact(t.get_mpz_t(), rem[k].get_mpz_t(), lc.get_mpz_t());
    quot[k - dg] = t;
    for (size_t i = 0; i <= dg; ++i) rem[k - dg + i] -= t * g.c_[i];
  }
  for (size_t i = 0; i < dg; ++i) {
    if (rem[i] != 0) return std::nullopt;
  }
  return from_coeffs(low_ - g.low_, std::move(quot));
}

LaurentPoly LaurentPoly::normalizing_unit() const {
  if (is_zero()) return LaurentPoly(1);
  return monomial(c_.back() < 0 ? -1 : 1, -low_);
}

LaurentPoly LaurentPoly::unit_normalized() const {
  if (is_zero()) return {};
  LaurentPoly r = *this;
  r.low_ = 0;
  if (r.c_.back() < 0) r = -r;
  return r;
}

BigInteger LaurentPoly::content() const {
  BigInteger g = 0;
  for (const auto& c : c_) g = kast::gcd(g, c);
  return g;
}

LaurentPoly LaurentPoly::primitive_part() const {
  if (is_zero()) return {};
  BigInteger g = content();
  LaurentPoly r = *this;
  for (auto& c : r.c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return r;
}

LaurentPoly LaurentPoly::derivative() const {
  std::vector<BigInteger> d(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) d[i] = c_[i] * (low_ + static_cast<long>(i));
  return from_coeffs(low_ - 1, std::move(d));
}

BigRational LaurentPoly::evaluate(const BigRational& q0) const {
  if (is_zero()) return 0;
  if (q0 == 0) {
    if (low_ < 0) throw std::domain_error("evaluation at q=0 with negative exponents");
    return low_ == 0 ? BigRational(c_[0]) : BigRational(0);
  }
  // Horner from the top, then multiply by q0^low.
  BigRational acc = 0;
  for (size_t k = c_.size(); k-- > 0;) acc = acc * q0 + BigRational(c_[k]);
  BigRational base = low_ >= 0 ? q0 : BigRational(1) / q0;
  long e = low_ >= 0 ? low_ : -low_;
  BigRational p = 1;
  while (e) {
    if (e & 1) p *= base;
    e >>= 1;
    if (e) base *= base;
  }
  acc *= p;
  acc.canonicalize();
  return acc;
}

namespace {

void append_term(std::string& out, const BigInteger& c, long e, bool first) {
  BigInteger a = abs(c);
  if (first) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (e == 0) {
    out += a.get_str();
    return;
  }
  if (a != 1) out += a.get_str() + "*";
  out += "q";
  if (e != 1) out += "^" + std::to_string(e);
}

struct Parser {
  std::string_view s;
  size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool peek(char ch) {
    skip();
    return i < s.size() && s[i] == ch;
  }
  [[noreturn]] void fail(const char* what) const {
    throw std::invalid_argument(std::string("bad Laurent polynomial '") + std::string(s) +
                                "': " + what);
  }
  std::string digits() {
    skip();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) fail("expected digits");
    return std::string(s.substr(start, i - start));
  }
  long exponent() {
    skip();
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
      neg = s[i] == '-';
      ++i;
    }
    long e = std::stol(digits());
    return neg ? -e : e;
  }
  // term := int ['*' 'q' ['^' exp]] | 'q' ['^' exp]
  LaurentPoly term() {
    skip();
    BigInteger c = 1;
    bool have_coeff = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      c = BigInteger(digits());
      have_coeff = true;
      if (!peek('*')) return LaurentPoly(c);
      ++i;
      skip();
    }
    if (i < s.size() && s[i] == 'q') {
      ++i;
      long e = 1;
      if (peek('^')) {
        ++i;
        e = exponent();
      }
      return LaurentPoly::monomial(c, e);
    }
    fail(have_coeff ? "expected q after '*'" : "expected a term");
  }
};

}  // namespace

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    append_term(out, c_[k], low_ + static_cast<long>(k), first);
    first = false;
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  Parser p{text};
  LaurentPoly acc;
  bool first = true;
  while (true) {
    p.skip();
    if (p.i >= text.size()) {
      if (first) p.fail("empty input");
      break;
    }
    bool neg = false;
    if (text[p.i] == '+' || text[p.i] == '-') {
      neg = text[p.i] == '-';
      ++p.i;
    } else if (!first) {
      p.fail("expected '+' or '-'");
    }
    LaurentPoly t = p.term();
    acc += neg ? -t : t;
    first = false;
  }
  return acc;
}

namespace {

using ModPoly = std::vector<uint64_t>;  // ascending coefficients mod p

ModPoly reduce(const LaurentPoly& f, uint64_t p) {
  ModPoly r;
  for (const auto& c : f.coeffs()) r.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

uint64_t inverse_mod(uint64_t a, uint64_t p) {
  uint64_t r = 1, e = p - 2;
  for (a %= p; e; e >>= 1, a = a * a % p)
    if (e & 1) r = r * a % p;
  return r;
}

size_t gcd_degree_mod(ModPoly a, ModPoly b, uint64_t p) {
  while (!b.empty()) {
    uint64_t inv = inverse_mod(b.back(), p);
    while (a.size() >= b.size()) {
      uint64_t c = a.back() * inv % p;
      size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + (p - c) * b[i]) % p;
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// True if a and b are certainly coprime up to content: for p not dividing
// the leading coefficient of a, deg gcd(a mod p, b mod p) bounds the degree
// of the integer gcd from above.
bool coprime_mod_p(const LaurentPoly& a, const LaurentPoly& b) {
  for (uint64_t p : {2147483647ULL, 2147483629ULL, 2147483587ULL}) {
    if (mpz_fdiv_ui(a.coeffs().back().get_mpz_t(), p) == 0) continue;
    return gcd_degree_mod(reduce(a, p), reduce(b, p), p) == 0;
  }
  return false;
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b.unit_normalized();
  if (b.is_zero()) return a.unit_normalized();
  BigInteger c = gcd(a.content(), b.content());
  if (coprime_mod_p(a.unit_normalized(), b.unit_normalized())) return LaurentPoly(c);
  RationalPoly g = gcd(RationalPoly::from_laurent(a.unit_normalized()),
                       RationalPoly::from_laurent(b.unit_normalized()));
  return g.primitive_integer().scaled(c).unit_normalized();
}

}  // namespace kast
