#include "kast/bigint.hpp"

namespace kast {

BigInteger binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInteger r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInteger xgcd(const BigInteger& a, const BigInteger& b, BigInteger& x, BigInteger& y) {
  BigInteger g;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace kast
