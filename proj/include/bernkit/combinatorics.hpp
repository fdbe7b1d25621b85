#pragma once

#include "bernkit/rational.hpp"

#include <span>

namespace bernkit {

/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(long n, long k);

BigInt factorial(unsigned long n);

/// n! / prod(parts_i!). Throws PartsMismatch unless the parts sum to n.
BigInt multinomial(unsigned long n, std::span<const unsigned long> parts);

/// (q)_m = q (q+1) ... (q+m-1), the ratio Γ(q+m)/Γ(q); (q)_0 = 1.
Rational rising_factorial(const Rational &q, unsigned long m);

} // namespace bernkit
