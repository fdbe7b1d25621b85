#include "bernkit/lemmas.hpp"

#include "bernkit/combinatorics.hpp"
#include "bernkit/errors.hpp"

namespace bernkit {

std::string_view to_string(LemmaTerm t) {
  switch (t) {
  case LemmaTerm::MikiProduct:
    return "miki-product";
  case LemmaTerm::MikiHarmonic:
    return "miki-harmonic";
  case LemmaTerm::FpzProduct:
    return "fpz-product";
  case LemmaTerm::FpzHarmonic:
    return "fpz-harmonic";
  }
  return "?";
}

LemmaTerm parse_lemma_term(std::string_view name) {
  for (LemmaTerm t : {LemmaTerm::MikiProduct, LemmaTerm::MikiHarmonic, LemmaTerm::FpzProduct,
                      LemmaTerm::FpzHarmonic})
    if (name == to_string(t))
      return t;
  throw UnknownName("unknown lemma term '" + std::string(name) + "'");
}

Rational integrate_over_one_minus_u(const std::vector<Rational> &numerator) {
  Rational at_one = 0;
  for (const Rational &c : numerator)
    at_one += c;
  if (at_one != 0)
    throw DomainError("numerator does not vanish at u = 1");
  if (numerator.size() < 2)
    return 0;
  // P(u) = (1-u) Q(u). Dividing from the top: q_{d-1} = -p_d,
  // q_{j-1} = q_j - p_j.
  const std::size_t d = numerator.size() - 1;
  std::vector<Rational> q(d);
  q[d - 1] = -numerator[d];
  for (std::size_t j = d - 1; j >= 1; --j)
    q[j - 1] = q[j] - numerator[j];
  Rational integral = 0;
  for (std::size_t j = 0; j < d; ++j)
    integral += q[j] / static_cast<unsigned long>(j + 1);
  return integral;
}

namespace {

// u^e - 1
std::vector<Rational> power_minus_one(int e) {
  std::vector<Rational> p(static_cast<std::size_t>(e) + 1, Rational(0));
  p[0] = -1;
  p[static_cast<std::size_t>(e)] += 1;
  return p;
}

TruncatedSeries closed_form(LemmaTerm term, int order, const SequenceView &seq) {
  TruncatedSeries s(SeriesKind::Asymptotic, order);
  auto b = [&](long m) { return seq.bernoulli(m); };
  auto bb = [&](long m) { return seq.bernoulli_bar(m); };
  for (long n = 1; 2 * n <= order; ++n) {
    Rational c = 0;
    switch (term) {
    case LemmaTerm::MikiProduct:
      for (long k = 1; k < n; ++k)
        c += b(2 * k) * b(2 * n - 2 * k) / (2 * k) / (2 * n - 2 * k) *
             Rational(binomial(2 * n, 2 * k));
      break;
    case LemmaTerm::MikiHarmonic:
      c = b(2 * n) / n * harmonic(static_cast<std::size_t>(2 * n));
      break;
    case LemmaTerm::FpzProduct:
      for (long k = 1; k <= n; ++k)
        c += b(2 * k) * bb(2 * n - 2 * k) / (2 * k) * Rational(binomial(2 * n, 2 * k));
      c /= n;
      break;
    case LemmaTerm::FpzHarmonic:
      c = bb(2 * n) / n * harmonic(static_cast<std::size_t>(2 * n - 1));
      break;
    }
    s.set(static_cast<int>(2 * n), c);
  }
  return s;
}

// -2 sum_m c_m [∫ P_m(u)/(1-u) du] y^m, with P_m the u-polynomial multiplying
// y^m after expanding the bracket.
TruncatedSeries harmonic_integrand(const TruncatedSeries &odd_part, bool with_u_factor) {
  TruncatedSeries t(SeriesKind::Taylor, odd_part.truncation_order());
  for (const auto &[m, c] : odd_part.coeffs()) {
    // u C(yu) - C(y) contributes y^m (u^{m+1} - 1);
    // S(yu) - S(y) contributes y^m (u^m - 1).
    const int e = with_u_factor ? m + 1 : m;
    t.set(m, -2 * c * integrate_over_one_minus_u(power_minus_one(e)));
  }
  return t;
}

} // namespace

LemmaRoutes lemma_routes(LemmaTerm term, int order, const SequenceView &seq) {
  const int taylor_order = order + 1;
  LemmaRoutes routes{closed_form(term, order, seq), {}};
  auto finish = [&](const TruncatedSeries &s) { routes.derived.push_back(s.truncated(order)); };

  const TruncatedSeries log_ratio = named_series("log_sinh_ratio", taylor_order, 0, seq);
  switch (term) {
  case LemmaTerm::MikiProduct: {
    // The u integral of coth yu - 1/(yu) is ln(sinh y / y) / y.
    const TruncatedSeries coth = named_series("coth_minus_inv", taylor_order, 0, seq);
    finish(series_scale(laplace_asymptotic(series_mul(coth, log_ratio)), 2));
    // After integrating by parts in y: 2x ∫ e^{-2xy} ln^2(sinh y / y) dy.
    finish(series_shift(
        series_scale(laplace_asymptotic(series_mul(log_ratio, log_ratio)), 2), -1));
    break;
  }
  case LemmaTerm::MikiHarmonic: {
    const TruncatedSeries coth = named_series("coth_minus_inv", taylor_order, 0, seq);
    finish(laplace_asymptotic(harmonic_integrand(coth, true)));
    break;
  }
  case LemmaTerm::FpzProduct: {
    // 1/sinh y = 1/y + (1/sinh y - 1/y); the 1/y piece lowers the log series by one.
    const TruncatedSeries sinh = named_series("inv_sinh_minus_inv", taylor_order, 0, seq);
    const TruncatedSeries integrand =
        series_add(series_shift(log_ratio, -1), series_mul(sinh, log_ratio));
    finish(series_scale(laplace_asymptotic(integrand), 2));
    break;
  }
  case LemmaTerm::FpzHarmonic: {
    const TruncatedSeries sinh = named_series("inv_sinh_minus_inv", taylor_order, 0, seq);
    finish(laplace_asymptotic(harmonic_integrand(sinh, false)));
    break;
  }
  }
  return routes;
}

bool verify_lemma_expansion(LemmaTerm term, int order) {
  if (order < 4 || order % 2 != 0)
    throw DomainError("verify_lemma_expansion requires an even order >= 4");
  const LemmaRoutes routes = lemma_routes(term, order);
  for (const TruncatedSeries &d : routes.derived)
    if (!(d == routes.closed_form))
      return false;
  return true;
}

} // namespace bernkit
