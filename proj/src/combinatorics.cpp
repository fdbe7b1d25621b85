#include "bernkit/combinatorics.hpp"

#include "bernkit/errors.hpp"

#include <numeric>

namespace bernkit {

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n)
    return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt multinomial(unsigned long n, std::span<const unsigned long> parts) {
  const unsigned long total = std::accumulate(parts.begin(), parts.end(), 0UL);
  if (total != n)
    throw PartsMismatch("multinomial parts sum to " + std::to_string(total) + ", expected " +
                        std::to_string(n));
  // Product of binomials avoids forming n! for large n.
  BigInt r = 1;
  unsigned long used = 0;
  for (unsigned long part : parts) {
    used += part;
    r *= binomial(static_cast<long>(used), static_cast<long>(part));
  }
  return r;
}

Rational rising_factorial(const Rational &q, unsigned long m) {
  Rational r = 1;
  Rational term = q;
  for (unsigned long j = 0; j < m; ++j) {
    r *= term;
    term += 1;
  }
  return r;
}

} // namespace bernkit
