#pragma once

// Exact scalars. GMP's mpq_class keeps values canonical (lowest terms,
// positive denominator) after every arithmetic operation.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bernkit {

using BigInt = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms. Throws DomainError when den == 0.
Rational make_rational(const BigInt &num, const BigInt &den);

/// a/b in lowest terms for machine integers (b != 0).
inline Rational frac(long a, long b) { return make_rational(a, b); }

/// Base-10 "num/den", or plain "num" when the denominator is 1.
std::string to_string(const Rational &q);
std::string to_string(const BigInt &z);

/// Accepts "a", "-a", "a/b", "-a/b" (b > 0 after sign handling, b != 0).
/// Throws DomainError on anything else.
Rational parse_rational(std::string_view text);

/// 2^e for any integer e, exactly.
Rational pow2(long e);

/// q^e for any integer e; throws DomainError for 0^negative.
Rational pow(const Rational &q, long e);

bool is_integer(const Rational &q);

/// Nearest double; exact for values representable in double.
double to_double(const Rational &q);
long double to_long_double(const Rational &q);

} // namespace bernkit
