#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bernkit/combinatorics.hpp"
#include "bernkit/errors.hpp"
#include "bernkit/identities.hpp"
#include "bernkit/series.hpp"

using namespace bernkit;

namespace {

TruncatedSeries taylor(int order, std::initializer_list<std::pair<int, Rational>> terms) {
  TruncatedSeries s(SeriesKind::Taylor, order);
  for (const auto &[m, c] : terms)
    s.set(m, c);
  return s;
}

} // namespace

TEST_CASE("series storage") {
  TruncatedSeries s(SeriesKind::Taylor, 4);
  s.set(2, frac(1, 6));
  s.set(3, 0);
  s.set(7, 1);
  CHECK(s.coeffs().size() == 1);
  CHECK(s.coeff(3) == 0);
  CHECK_THROWS_AS(s.coeff(5), DomainError);
  CHECK_THROWS_AS(s.set(-1, 1), DomainError);
  CHECK(s.truncated(2).truncation_order() == 2);
}

TEST_CASE("series_add") {
  const TruncatedSeries sum =
      series_add(named_series("psi_tilde", 6), named_series("psi_bar", 6));
  CHECK(sum.coeff(2) == frac(-1, 24));
  const TruncatedSeries a = named_series("psi_tilde", 8);
  CHECK(series_add(a, TruncatedSeries(SeriesKind::Asymptotic, 8)) == a);
  CHECK_THROWS_AS(series_add(named_series("b", 4), a), KindMismatch);
  CHECK(series_add(a, named_series("psi_bar", 4)).truncation_order() == 4);
}

TEST_CASE("series_mul and series_pow") {
  const TruncatedSeries pt = named_series("psi_tilde", 12);
  CHECK(series_pow(pt, 2).coeff(4) == frac(1, 144));
  // B̄_2^2 / 4 = (1/144) / 4.
  CHECK(series_pow(named_series("psi_bar", 12), 2).coeff(4) == frac(1, 576));
  CHECK(series_pow(pt, 1) == pt);
  CHECK(series_pow(pt, 3).coeff(6) == frac(-1, 1728));
  CHECK_THROWS_AS(series_pow(pt, 0), DomainError);
  CHECK_THROWS_AS(series_mul(pt, named_series("sech", 4)), KindMismatch);
  CHECK(series_mul(pt, named_series("psi_bar", 6)).truncation_order() == 6);
}

TEST_CASE("series_mul is commutative and associative") {
  const TruncatedSeries a = named_series("coth_minus_inv", 15);
  const TruncatedSeries b = named_series("log_sinh_ratio", 13);
  const TruncatedSeries c = named_series("sech", 17);
  CHECK(series_mul(a, b) == series_mul(b, a));
  CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
}

TEST_CASE("psi_tilde squared reproduces the Miki left side") {
  const TruncatedSeries sq = series_pow(named_series("psi_tilde", 60), 2);
  for (int n = 2; n <= 30; ++n)
    CHECK(sq.coeff(2 * n) == verify_miki(n).lhs);
}

TEST_CASE("named series examples") {
  CHECK(named_series("coth_minus_inv", 4).coeff(1) == frac(1, 3));
  CHECK(named_series("log_sinh_ratio", 4).coeff(2) == frac(1, 6));
  CHECK(named_series("psi_tilde", 4).coeff(2) == frac(-1, 12));
  CHECK(named_series("psi_tilde_deriv", 5, 1).coeff(3) == frac(1, 6));
  const TruncatedSeries g = named_series("g", 5);
  CHECK(g.terms() == std::vector<std::pair<int, Rational>>{
                         {1, frac(1, 2)}, {3, frac(-1, 8)}, {5, frac(5, 32)}});
  CHECK(named_series("psi_tilde", 6).terms() ==
        std::vector<std::pair<int, Rational>>{
            {2, frac(-1, 12)}, {4, frac(1, 120)}, {6, frac(-1, 252)}});
  CHECK_THROWS_AS(named_series("tan", 4), UnknownName);
}

TEST_CASE("derivative series agree with term-wise differentiation in x") {
  for (const char *base : {"psi_tilde", "psi_bar"}) {
    const std::string deriv = std::string(base) + "_deriv";
    TruncatedSeries prev = named_series(base, 40);
    for (unsigned p = 1; p <= 4; ++p) {
      // d/dx c x^{-m} = -m c x^{-m-1}
      TruncatedSeries expect(SeriesKind::Asymptotic, 40 + static_cast<int>(p));
      for (const auto &[m, c] : prev.coeffs())
        expect.set(m + 1, -m * c);
      const TruncatedSeries got = named_series(deriv, 40 + static_cast<int>(p), p);
      CHECK(got == expect);
      prev = got;
    }
    CHECK(named_series(deriv, 20, 0) == named_series(base, 20));
  }
}

TEST_CASE("inv_sinh coefficients carry Bbar/B times the coth ones") {
  const TruncatedSeries c = named_series("coth_minus_inv", 61);
  const TruncatedSeries s = named_series("inv_sinh_minus_inv", 61);
  for (int k = 1; 2 * k - 1 <= 61; ++k)
    CHECK(s.coeff(2 * k - 1) ==
          c.coeff(2 * k - 1) * bernoulli_bar(static_cast<std::size_t>(2 * k)) /
              bernoulli(static_cast<std::size_t>(2 * k)));
}

TEST_CASE("sech times cosh is one") {
  TruncatedSeries cosh(SeriesKind::Taylor, 40);
  for (int k = 0; k <= 40; k += 2)
    cosh.set(k, 1 / Rational(factorial(static_cast<unsigned long>(k))));
  const TruncatedSeries prod = series_mul(named_series("sech", 40), cosh);
  CHECK(prod.terms() == std::vector<std::pair<int, Rational>>{{0, Rational(1)}});
}

TEST_CASE("log_sinh_ratio derivative is coth_minus_inv") {
  CHECK(series_derivative(named_series("log_sinh_ratio", 31)) == named_series("coth_minus_inv", 30));
  CHECK_THROWS_AS(series_derivative(named_series("psi_tilde", 4)), KindMismatch);
}

TEST_CASE("laplace_asymptotic") {
  const TruncatedSeries a = laplace_asymptotic(taylor(4, {{2, frac(1, 6)}}));
  CHECK(a.kind() == SeriesKind::Asymptotic);
  CHECK(a.coeff(3) == frac(1, 24));
  CHECK(laplace_asymptotic(taylor(4, {{1, frac(1, 3)}})).coeff(2) == frac(1, 12));
  CHECK(laplace_asymptotic(TruncatedSeries(SeriesKind::Taylor, 5)).coeffs().empty());
  CHECK_THROWS_AS(laplace_asymptotic(named_series("psi_tilde", 4)), KindMismatch);

  const TruncatedSeries u = named_series("coth_minus_inv", 21);
  const TruncatedSeries v = named_series("log_sinh_ratio", 21);
  CHECK(laplace_asymptotic(series_add(u, v)) ==
        series_add(laplace_asymptotic(u), laplace_asymptotic(v)));
  CHECK(laplace_asymptotic(series_scale(u, frac(-3, 7))) ==
        series_scale(laplace_asymptotic(u), frac(-3, 7)));
  // The integral representation of ψ̃: -L[coth y - 1/y] = ψ̃.
  CHECK(series_scale(laplace_asymptotic(u), -1) == named_series("psi_tilde", 22));
  CHECK(series_scale(laplace_asymptotic(named_series("inv_sinh_minus_inv", 21)), -1) ==
        named_series("psi_bar", 22));
  CHECK(laplace_asymptotic(named_series("sech", 20)) == named_series("g", 21));
}

TEST_CASE("argument_scale") {
  const TruncatedSeries pt = named_series("psi_tilde", 6);
  CHECK(argument_scale(pt, 2).coeff(2) == frac(-1, 48));
  CHECK(argument_scale(pt, 1) == pt);
  CHECK(argument_scale(taylor(4, {{2, frac(1, 6)}}), 2).coeff(2) == frac(2, 3));
  CHECK_THROWS_AS(argument_scale(pt, 0), ZeroScale);
}

TEST_CASE("series_shift") {
  const TruncatedSeries s = taylor(6, {{2, 1}, {4, 3}});
  CHECK(series_shift(s, 1).coeff(3) == 1);
  CHECK(series_shift(s, -2).coeff(0) == 1);
  CHECK_THROWS_AS(series_shift(s, -3), DomainError);
}

TEST_CASE("generating-function checks") {
  CHECK(check_b_quadratic(2));
  CHECK(check_b_quadratic(10));
  CHECK(check_b_quadratic(50));
  CHECK_THROWS_AS(check_b_quadratic(1), DomainError);
  CHECK(check_doubling(2));
  CHECK(check_doubling(4));
  CHECK(check_doubling(40));
  CHECK_THROWS_AS(check_doubling(5), DomainError);
}
