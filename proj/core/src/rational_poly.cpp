#include "kast/rational_poly.hpp"

#include <cctype>
#include <stdexcept>

namespace kast {

RationalPoly::RationalPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

RationalPoly::RationalPoly(const BigRational& c) {
  if (c != 0) c_.push_back(c);
}

RationalPoly::RationalPoly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

RationalPoly RationalPoly::monomial(const BigRational& c, int e) {
  if (c == 0) return {};
  std::vector<BigRational> v(static_cast<size_t>(e) + 1);
  v.back() = c;
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::from_laurent(const LaurentPoly& f) {
  if (f.is_zero()) return {};
  if (f.min_exp() < 0) throw std::domain_error("negative exponent in polynomial conversion");
  std::vector<BigRational> v(static_cast<size_t>(f.max_exp()) + 1);
  for (long e = f.min_exp(); e <= f.max_exp(); ++e) v[static_cast<size_t>(e)] = f.coeff(e);
  return RationalPoly(std::move(v));
}

void RationalPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigRational RationalPoly::coeff(int e) const {
  if (e < 0 || e > degree()) return 0;
  return c_[static_cast<size_t>(e)];
}

RationalPoly RationalPoly::operator-() const {
  RationalPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  RationalPoly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, BigRational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

bool operator<(const RationalPoly& a, const RationalPoly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  for (size_t i = a.c_.size(); i-- > 0;) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  }
  return false;
}

RationalPoly RationalPoly::scaled(const BigRational& k) const {
  if (k == 0) return {};
  RationalPoly r = *this;
  for (auto& c : r.c_) c *= k;
  return r;
}

RationalPoly RationalPoly::monic() const {
  if (is_zero()) return {};
  return scaled(BigRational(1) / lead());
}

RationalPoly RationalPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigRational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return RationalPoly(std::move(d));
}

void RationalPoly::divmod(const RationalPoly& a, const RationalPoly& b, RationalPoly& quot,
                          RationalPoly& rem) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  rem = a;
  quot = RationalPoly();
  if (a.degree() < b.degree()) return;
  std::vector<BigRational> q(static_cast<size_t>(a.degree() - b.degree()) + 1);
  const int db = b.degree();
  BigRational inv = BigRational(1) / b.lead();
  for (int k = rem.degree(); k >= db; --k) {
    BigRational t = rem.c_[static_cast<size_t>(k)] * inv;
    if (t == 0) continue;
    q[static_cast<size_t>(k - db)] = t;
    for (int i = 0; i <= db; ++i) rem.c_[static_cast<size_t>(k - db + i)] -= t * b.c_[static_cast<size_t>(i)];
  }
  rem.trim();
  quot = RationalPoly(std::move(q));
}

bool RationalPoly::divides(const RationalPoly& f) const {
  if (is_zero()) return f.is_zero();
  RationalPoly q, r;
  divmod(f, *this, q, r);
  return r.is_zero();
}

bool RationalPoly::is_integral() const {
  for (const auto& c : c_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

LaurentPoly RationalPoly::to_laurent() const {
  std::vector<BigInteger> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].get_den() != 1) throw std::domain_error("non-integral coefficient");
    v[i] = c_[i].get_num();
  }
  return LaurentPoly::from_coeffs(0, std::move(v));
}

LaurentPoly RationalPoly::primitive_integer() const {
  if (is_zero()) return {};
  BigInteger l = 1;
  for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<BigInteger> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) {
    BigRational t = c_[i] * BigRational(l);
    v[i] = t.get_num();
  }
  LaurentPoly p = LaurentPoly::from_coeffs(0, std::move(v)).primitive_part();
  return p.lead() < 0 ? -p : p;
}

std::string RationalPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    const BigRational& c = c_[k];
    if (c == 0) continue;
    BigRational a = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      out += a.get_str();
      continue;
    }
    if (a != 1) out += a.get_str() + "*";
    out += "q";
    if (k != 1) out += "^" + std::to_string(k);
  }
  return out;
}

RationalPoly RationalPoly::parse(const std::string& text) {
  auto fail = [&](const char* what) {
    throw std::invalid_argument("bad rational polynomial '" + text + "': " + what);
  };
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto number = [&] {
    skip();
    size_t start = i;
    while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
      ++i;
    if (start == i) fail("expected a number");
    BigRational r(text.substr(start, i - start));
    r.canonicalize();
    return r;
  };
  RationalPoly acc;
  bool first = true;
  while (true) {
    skip();
    if (i >= text.size()) {
      if (first) fail("empty input");
      break;
    }
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
      neg = text[i] == '-';
      ++i;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    BigRational c = 1;
    int e = 0;
    bool have_coeff = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      c = number();
      have_coeff = true;
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
        if (i >= text.size() || text[i] != 'q') fail("expected q after '*'");
      }
    }
    if (i < text.size() && text[i] == 'q') {
      ++i;
      e = 1;
      skip();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip();
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) fail("expected a nonnegative exponent");
        e = std::stoi(text.substr(start, i - start));
      }
    } else if (!have_coeff) {
      fail("expected a term");
    }
    RationalPoly t = monomial(neg ? BigRational(-c) : c, e);
    acc += t;
    first = false;
  }
  return acc;
}

RationalPoly gcd(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly x = a, y = b, q, r;
  while (!y.is_zero()) {
    RationalPoly::divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

RationalPoly xgcd(const RationalPoly& a, const RationalPoly& b, RationalPoly& x, RationalPoly& y) {
  // Invariant: r0 = a*s0 + b*t0, r1 = a*s1 + b*t1.
  RationalPoly r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1, q, r;
  while (!r1.is_zero()) {
    RationalPoly::divmod(r0, r1, q, r);
    RationalPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    x = 0;
    y = 0;
    return r0;
  }
  BigRational inv = BigRational(1) / r0.lead();
  x = s0.scaled(inv);
  y = t0.scaled(inv);
  return r0.scaled(inv);
}

}  // namespace kast
