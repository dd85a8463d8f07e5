#include "kast/exact_matrix.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

#include "kast/qfactor.hpp"

namespace kast {
namespace {

std::string compact(std::string s) {
  std::string out;
  for (char c : s)
    if (c != ' ') out += c;
  return out;
}

template <class T>
T parse_entry(const std::string& tok);
template <>
BigInteger parse_entry<BigInteger>(const std::string& tok) {
  BigInteger v;
  if (v.set_str(tok[0] == '+' ? tok.substr(1) : tok, 10) != 0)
    throw std::invalid_argument("bad integer entry '" + tok + "'");
  return v;
}
template <>
LaurentPoly parse_entry<LaurentPoly>(const std::string& tok) {
  return LaurentPoly::parse(tok);
}
template <>
RationalPoly parse_entry<RationalPoly>(const std::string& tok) {
  return RationalPoly::parse(tok);
}

template <class T>
Matrix<T> read_body(std::istream& in, size_t rows, size_t cols) {
  Matrix<T> m(rows, cols);
  std::string line;
  for (size_t i = 0; i < rows; ++i) {
    do {
      if (!std::getline(in, line)) throw std::invalid_argument("matrix file ends early");
    } while (line.find_first_not_of(" \t\r") == std::string::npos);
    std::istringstream ls(line);
    std::string tok;
    size_t j = 0;
    while (ls >> tok) {
      if (j >= cols)
        throw std::invalid_argument("row " + std::to_string(i) + " has too many entries");
      m(i, j++) = parse_entry<T>(tok);
    }
    if (j != cols) throw std::invalid_argument("row " + std::to_string(i) + " has too few entries");
  }
  return m;
}

}  // namespace

RingTag ring_of(const ExactMatrix& m) {
  return std::visit([](const auto& x) { return RingTraits<typename std::decay_t<decltype(x)>::value_type>::tag; }, m);
}

size_t rows_of(const ExactMatrix& m) {
  return std::visit([](const auto& x) { return x.rows(); }, m);
}

size_t cols_of(const ExactMatrix& m) {
  return std::visit([](const auto& x) { return x.cols(); }, m);
}

ExactMatrix read_matrix(std::istream& in) {
  std::string line;
  do {
    if (!std::getline(in, line)) throw std::invalid_argument("empty matrix file");
  } while (line.find_first_not_of(" \t\r") == std::string::npos);
  std::istringstream hs(line);
  long rows = -1, cols = -1;
  std::string ring;
  if (!(hs >> rows >> cols >> ring) || rows < 0 || cols < 0)
    throw std::invalid_argument("bad matrix header '" + line + "'");
  switch (parse_ring(ring)) {
    case RingTag::Integers:
      return read_body<BigInteger>(in, rows, cols);
    case RingTag::Laurent:
      return read_body<LaurentPoly>(in, rows, cols);
    case RingTag::RationalPoly:
      return read_body<RationalPoly>(in, rows, cols);
  }
  throw std::logic_error("unreachable");
}

void write_matrix(std::ostream& out, const ExactMatrix& m) {
  std::visit(
      [&](const auto& x) {
        using T = typename std::decay_t<decltype(x)>::value_type;
        out << x.rows() << ' ' << x.cols() << ' ' << ring_name(RingTraits<T>::tag) << '\n';
        for (size_t i = 0; i < x.rows(); ++i) {
          for (size_t j = 0; j < x.cols(); ++j)
            out << (j ? " " : "") << compact(RingTraits<T>::str(x(i, j)));
          out << '\n';
        }
      },
      m);
}

ExactMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return read_matrix(in);
}

std::string format_matrix(const ExactMatrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

Matrix<LaurentPoly> to_laurent(const Matrix<BigInteger>& m) {
  return m.map([](const BigInteger& x) { return LaurentPoly(x); });
}

Matrix<RationalPoly> to_rational(const Matrix<BigInteger>& m) {
  return m.map([](const BigInteger& x) { return RationalPoly(BigRational(x)); });
}

Matrix<BigInteger> specialize(const Matrix<LaurentPoly>& m, const BigInteger& q0) {
  return m.map([&](const LaurentPoly& f) { return specialize_integer(f, q0); });
}

}  // namespace kast
