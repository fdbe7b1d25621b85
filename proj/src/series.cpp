#include "bernkit/series.hpp"

#include "bernkit/combinatorics.hpp"
#include "bernkit/errors.hpp"
#include "bernkit/sequences.hpp"

#include <algorithm>

namespace bernkit {

std::string_view to_string(SeriesKind kind) {
  return kind == SeriesKind::Taylor ? "taylor" : "asymptotic";
}

TruncatedSeries::TruncatedSeries(SeriesKind kind, int truncation_order)
    : kind_(kind), truncation_order_(truncation_order) {
  if (truncation_order < 0)
    throw DomainError("truncation order must be non-negative");
}

Rational TruncatedSeries::coeff(int m) const {
  if (m > truncation_order_)
    throw DomainError("order " + std::to_string(m) + " is beyond truncation order " +
                      std::to_string(truncation_order_));
  auto it = coeffs_.find(m);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::set(int m, const Rational &value) {
  if (m < 0)
    throw DomainError("negative series order " + std::to_string(m));
  if (m > truncation_order_)
    return;
  if (value == 0)
    coeffs_.erase(m);
  else
    coeffs_[m] = value;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  TruncatedSeries r(kind_, std::min(order, truncation_order_));
  for (const auto &[m, c] : coeffs_)
    r.set(m, c);
  return r;
}

std::vector<std::pair<int, Rational>> TruncatedSeries::terms() const {
  return {coeffs_.begin(), coeffs_.end()};
}

namespace {

void require_same_kind(const TruncatedSeries &a, const TruncatedSeries &b) {
  if (a.kind() != b.kind())
    throw KindMismatch(std::string("cannot combine ") + std::string(to_string(a.kind())) +
                       " and " + std::string(to_string(b.kind())) + " series");
}

} // namespace

TruncatedSeries series_add(const TruncatedSeries &a, const TruncatedSeries &b) {
  require_same_kind(a, b);
  TruncatedSeries r = a.truncated(std::min(a.truncation_order(), b.truncation_order()));
  for (const auto &[m, c] : b.coeffs())
    if (m <= r.truncation_order())
      r.set(m, r.coeff(m) + c);
  return r;
}

TruncatedSeries series_sub(const TruncatedSeries &a, const TruncatedSeries &b) {
  return series_add(a, series_scale(b, -1));
}

TruncatedSeries series_scale(const TruncatedSeries &a, const Rational &factor) {
  TruncatedSeries r(a.kind(), a.truncation_order());
  for (const auto &[m, c] : a.coeffs())
    r.set(m, c * factor);
  return r;
}

TruncatedSeries series_mul(const TruncatedSeries &a, const TruncatedSeries &b) {
  require_same_kind(a, b);
  const int order = std::min(a.truncation_order(), b.truncation_order());
  std::map<int, Rational> acc;
  for (const auto &[i, ci] : a.coeffs()) {
    if (i > order)
      break;
    for (const auto &[j, cj] : b.coeffs()) {
      if (i + j > order)
        break;
      acc[i + j] += ci * cj;
    }
  }
  TruncatedSeries r(a.kind(), order);
  for (const auto &[m, c] : acc)
    r.set(m, c);
  return r;
}

TruncatedSeries series_pow(const TruncatedSeries &a, unsigned N) {
  if (N == 0)
    throw DomainError("series_pow requires N >= 1");
  TruncatedSeries base = a;
  TruncatedSeries result = a;
  bool have_result = false;
  while (N > 0) {
    if (N & 1U) {
      result = have_result ? series_mul(result, base) : base;
      have_result = true;
    }
    N >>= 1U;
    if (N > 0)
      base = series_mul(base, base);
  }
  return result;
}

TruncatedSeries series_derivative(const TruncatedSeries &a) {
  if (a.kind() != SeriesKind::Taylor)
    throw KindMismatch("series_derivative is defined for Taylor series");
  TruncatedSeries r(SeriesKind::Taylor, std::max(a.truncation_order() - 1, 0));
  for (const auto &[m, c] : a.coeffs())
    if (m > 0)
      r.set(m - 1, c * m);
  return r;
}

TruncatedSeries series_shift(const TruncatedSeries &a, int shift) {
  TruncatedSeries r(a.kind(), std::max(a.truncation_order() + shift, 0));
  for (const auto &[m, c] : a.coeffs()) {
    if (m + shift < 0)
      throw DomainError("series_shift would create a negative order");
    r.set(m + shift, c);
  }
  return r;
}

TruncatedSeries argument_scale(const TruncatedSeries &a, const Rational &lambda) {
  if (lambda == 0)
    throw ZeroScale("argument_scale with λ = 0");
  const bool taylor = a.kind() == SeriesKind::Taylor;
  TruncatedSeries r(a.kind(), a.truncation_order());
  for (const auto &[m, c] : a.coeffs())
    r.set(m, c * pow(lambda, taylor ? m : -m));
  return r;
}

TruncatedSeries laplace_asymptotic(const TruncatedSeries &t) {
  if (t.kind() != SeriesKind::Taylor)
    throw KindMismatch("laplace_asymptotic expects a Taylor series");
  TruncatedSeries r(SeriesKind::Asymptotic, t.truncation_order() + 1);
  for (const auto &[m, c] : t.coeffs())
    r.set(m + 1, c * Rational(factorial(static_cast<unsigned long>(m))) * pow2(-(m + 1)));
  return r;
}

namespace {

Rational inverse_factorial(long n) {
  return make_rational(1, factorial(static_cast<unsigned long>(n)));
}

TruncatedSeries psi_derivative_series(int order, unsigned p, bool bar, const SequenceView &seq) {
  TruncatedSeries s(SeriesKind::Asymptotic, order);
  const Rational sign = (p % 2 == 1) ? 1 : -1; // (-1)^{p+1}
  for (long n = 1; 2 * n + static_cast<long>(p) <= order; ++n) {
    const Rational b = bar ? seq.bernoulli_bar(2 * n) : seq.bernoulli(2 * n);
    // Γ(2n+p)/Γ(2n) = (2n)_p
    const Rational c = sign * b * rising_factorial(Rational(2 * n), p) / (2 * n);
    s.set(static_cast<int>(2 * n + p), c);
  }
  return s;
}

} // namespace

const std::vector<std::string> &series_names() {
  static const std::vector<std::string> names = {
      "b",         "coth_minus_inv", "inv_sinh_minus_inv", "sech",          "log_sinh_ratio",
      "psi_tilde", "psi_bar",        "psi_tilde_deriv",    "psi_bar_deriv", "g"};
  return names;
}

TruncatedSeries named_series(std::string_view name, int order, unsigned p,
                             const SequenceView &seq) {
  if (order < 0)
    throw DomainError("series order must be non-negative");

  if (name == "b") {
    TruncatedSeries s(SeriesKind::Taylor, order);
    for (long n = 0; n <= order; ++n)
      s.set(static_cast<int>(n), seq.bernoulli(n) * inverse_factorial(n));
    return s;
  }
  if (name == "coth_minus_inv" || name == "inv_sinh_minus_inv") {
    const bool bar = name == "inv_sinh_minus_inv";
    TruncatedSeries s(SeriesKind::Taylor, order);
    for (long k = 1; 2 * k - 1 <= order; ++k) {
      const Rational b = bar ? seq.bernoulli_bar(2 * k) : seq.bernoulli(2 * k);
      s.set(static_cast<int>(2 * k - 1), pow2(2 * k) * b * inverse_factorial(2 * k));
    }
    return s;
  }
  if (name == "sech") {
    TruncatedSeries s(SeriesKind::Taylor, order);
    for (long n = 0; 2 * n <= order; ++n)
      s.set(static_cast<int>(2 * n), Rational(seq.euler(2 * n)) * inverse_factorial(2 * n));
    return s;
  }
  if (name == "log_sinh_ratio") {
    TruncatedSeries s(SeriesKind::Taylor, order);
    for (long k = 1; 2 * k <= order; ++k)
      s.set(static_cast<int>(2 * k),
            pow2(2 * k - 1) * seq.bernoulli(2 * k) * inverse_factorial(2 * k) / k);
    return s;
  }
  if (name == "psi_tilde")
    return psi_derivative_series(order, 0, false, seq);
  if (name == "psi_bar")
    return psi_derivative_series(order, 0, true, seq);
  if (name == "psi_tilde_deriv")
    return psi_derivative_series(order, p, false, seq);
  if (name == "psi_bar_deriv")
    return psi_derivative_series(order, p, true, seq);
  if (name == "g") {
    TruncatedSeries s(SeriesKind::Asymptotic, order);
    for (long n = 0; 2 * n + 1 <= order; ++n)
      s.set(static_cast<int>(2 * n + 1), Rational(seq.euler(2 * n)) * pow2(-(2 * n + 1)));
    return s;
  }
  throw UnknownName("unknown series '" + std::string(name) + "'");
}

bool check_b_quadratic(int order) {
  if (order < 2)
    throw DomainError("check_b_quadratic requires order >= 2");
  const TruncatedSeries b = named_series("b", order);
  const TruncatedSeries lhs = series_mul(b, b);

  TruncatedSeries one_minus_x(SeriesKind::Taylor, order);
  one_minus_x.set(0, 1);
  one_minus_x.set(1, -1);
  const TruncatedSeries x_db = series_shift(series_derivative(b), 1);
  const TruncatedSeries rhs = series_sub(series_mul(one_minus_x, b), x_db);

  for (int m = 0; m <= order; ++m)
    if (lhs.coeff(m) != rhs.coeff(m))
      return false;
  return true;
}

bool check_doubling(int order) {
  if (order < 2 || order % 2 != 0)
    throw DomainError("check_doubling requires an even order >= 2");
  const TruncatedSeries tilde = named_series("psi_tilde", order);
  const TruncatedSeries lhs = series_add(tilde, named_series("psi_bar", order));
  const TruncatedSeries rhs = series_scale(argument_scale(tilde, 2), 2);
  return lhs == rhs;
}

} // namespace bernkit
