#include "kast/smith.hpp"

#include "kast/det.hpp"

namespace kast {

SmithForm<BigInteger> smith_normal_form(const Matrix<BigInteger>& m, bool transforms) {
  return detail::smith_impl(m, transforms);
}

SmithForm<RationalPoly> smith_normal_form(const Matrix<RationalPoly>& m, bool transforms) {
  return detail::smith_impl(m, transforms);
}

template <class T>
bool verify_smith(const Matrix<T>& m, const SmithForm<T>& s, std::string* why) {
  using R = RingTraits<T>;
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const size_t k = std::min(m.rows(), m.cols());
  if (s.diagonal.size() != k) return fail("diagonal length differs from min(rows, cols)");
  for (size_t i = 0; i < k; ++i) {
    bool zero = R::is_zero(s.diagonal[i]);
    if ((i < s.rank) == zero) return fail("rank does not match nonzero diagonal prefix");
    if (i + 1 < s.rank && !R::divides(s.diagonal[i], s.diagonal[i + 1]))
      return fail("divisibility chain broken at " + std::to_string(i));
  }
  if (!s.has_transforms) return true;
  if (s.left.rows() != m.rows() || s.right.cols() != m.cols())
    return fail("transform shapes do not match");
  if (!(s.left * m * s.right == s.diagonal_matrix(m.rows(), m.cols())))
    return fail("left * M * right is not the diagonal");
  if (!R::is_unit(determinant(s.left))) return fail("left transform is not invertible");
  if (!R::is_unit(determinant(s.right))) return fail("right transform is not invertible");
  return true;
}

template bool verify_smith(const Matrix<BigInteger>&, const SmithForm<BigInteger>&, std::string*);
template bool verify_smith(const Matrix<RationalPoly>&, const SmithForm<RationalPoly>&,
                           std::string*);
template bool verify_smith(const Matrix<LaurentPoly>&, const SmithForm<LaurentPoly>&,
                           std::string*);

}  // namespace kast
