#include "bernkit/rational.hpp"

#include "bernkit/errors.hpp"

#include <cctype>

namespace bernkit {

Rational make_rational(const BigInt &num, const BigInt &den) {
  if (den == 0)
    throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational &q) {
  if (q.get_den() == 1)
    return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt &z) { return z.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_s = body.substr(0, slash);
  const std::string_view den_s =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_s) || !all_digits(den_s))
    throw DomainError("not an exact rational: '" + std::string(text) + "'");
  BigInt num(std::string(num_s), 10);
  BigInt den(std::string(den_s), 10);
  if (negative)
    num = -num;
  return make_rational(num, den);
}

Rational pow2(long e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e >= 0 ? Rational(p) : make_rational(1, p);
}

Rational pow(const Rational &q, long e) {
  if (e < 0) {
    if (q == 0)
      throw DomainError("zero to a negative power");
    return pow(Rational(1) / q, -e);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
  return make_rational(num, den);
}

bool is_integer(const Rational &q) { return q.get_den() == 1; }

double to_double(const Rational &q) { return q.get_d(); }

long double to_long_double(const Rational &q) {
  // Two-double split of a 128-bit float keeps the long double mantissa exact.
  const mpf_class x(q, 128);
  const double hi = x.get_d();
  const mpf_class rest = x - mpf_class(hi, 128);
  return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

} // namespace bernkit
