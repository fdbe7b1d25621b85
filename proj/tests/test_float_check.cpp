#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bernkit/errors.hpp"
#include "bernkit/float_check.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/trigamma.hpp>

#include <cmath>

using namespace bernkit;

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209;

} // namespace

TEST_CASE("digamma examples") {
  CHECK(digamma(1) == doctest::Approx(-kEulerGamma).epsilon(1e-14));
  CHECK(digamma(2) == doctest::Approx(1 - kEulerGamma).epsilon(1e-14));
  const double x = 3.7;
  CHECK(std::fabs(digamma(2 * x) - digamma(x) / 2 - digamma(x + 0.5) / 2 - std::log(2.0)) < 1e-12);
  CHECK_THROWS_AS(digamma(0), DomainError);
  CHECK_THROWS_AS(digamma(-1.5), DomainError);
}

TEST_CASE("digamma against Boost") {
  for (double x = 0.05; x < 60; x *= 1.13) {
    const double ref = boost::math::digamma(x);
    INFO("x=" << x);
    if (x >= 1)
      CHECK(digamma(x) == doctest::Approx(ref).epsilon(1e-12));
    else
      CHECK(std::fabs(digamma(x) - ref) < 1e-12 * std::fabs(ref) + 1e-14);
  }
}

TEST_CASE("digamma doubling identity on a grid") {
  for (int i = 0; i < 20; ++i) {
    const double x = 0.3 + 1.7 * i;
    CHECK(std::fabs(digamma(2 * x) - digamma(x) / 2 - digamma(x + 0.5) / 2 - std::log(2.0)) <
          1e-12);
  }
}

TEST_CASE("quad_rep examples") {
  const QuadResult a = quad_rep("psi_tilde", 10);
  CHECK(a.abs_dev < 1e-9);
  CHECK(a.target == doctest::Approx(digamma(10) - std::log(10.0) + 1.0 / 20).epsilon(1e-12));
  CHECK(a.ok);
  const QuadResult b = quad_rep("psi_bar", 5);
  CHECK(b.abs_dev < 1e-9);
  CHECK(b.target == doctest::Approx(digamma(5.5) - std::log(5.0)).epsilon(1e-12));
  const QuadResult c = quad_rep("psi_tilde_p", 8, 1);
  CHECK(c.abs_dev < 1e-7);
  CHECK(c.ok);
}

TEST_CASE("quad_rep derivatives match the closed form") {
  for (const char *name : {"psi_tilde_p", "psi_bar_p"})
    for (double x : {1.0, 2.0, 5.0, 10.0})
      for (double p : {1.0, 2.0, 3.0}) {
        const QuadResult r = quad_rep(name, x, p);
        INFO(name << " x=" << x << " p=" << p);
        CHECK(r.abs_dev < 1e-9);
        CHECK(r.ok);
      }
  // ψ̃'(x) = ψ'(x) - 1/x - 1/(2x^2).
  const double x = 3;
  const double expect = boost::math::trigamma(x) - 1 / x - 1 / (2 * x * x);
  CHECK(quad_rep("psi_tilde_p", x, 1).value == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("quad_rep at non-integer p tracks the asymptotic series") {
  for (double p : {0.5, 1.5, 2.5})
    for (double x : {2.0, 5.0, 10.0}) {
      const QuadResult r = quad_rep("psi_tilde_p", x, p);
      INFO("p=" << p << " x=" << x);
      CHECK(r.ok);
    }
}

TEST_CASE("quad_rep argument checks") {
  CHECK_THROWS_AS(quad_rep("psi_tilde", 0.5), DomainError);
  CHECK_THROWS_AS(quad_rep("psi_tilde_p", 2, -1), DomainError);
  CHECK_THROWS_AS(quad_rep("psi_tilde", 2, 1), DomainError);
  CHECK_THROWS_AS(quad_rep("tan", 2), UnknownName);
}

TEST_CASE("g against its asymptotic series") {
  for (double x : {2.0, 5.0, 10.0, 20.0}) {
    const QuadResult r = quad_rep("g", x);
    INFO("x=" << x);
    CHECK(r.ok);
  }
  CHECK(quad_rep("g", 10).abs_dev < 1e-12);
}

TEST_CASE("representations satisfy the doubling relation") {
  for (double x : {2.0, 5.0, 10.0, 20.0}) {
    const double lhs = quad_rep("psi_tilde", x).value + quad_rep("psi_bar", x).value;
    const double rhs = 2 * quad_rep("psi_tilde", 2 * x).value;
    CHECK(std::fabs(lhs - rhs) < 1e-8);
  }
}

TEST_CASE("deviation from the optimally truncated series decreases with x") {
  const double grid[] = {2, 5, 10, 20};
  for (const char *name : {"psi_tilde", "psi_bar", "g", "psi_tilde_p", "psi_bar_p"}) {
    const unsigned p = std::string(name).ends_with("_p") ? 1 : 0;
    double prev = INFINITY;
    for (double x : grid) {
      const double d = series_deviation(name, x, p);
      INFO(name << " x=" << x << " deviation=" << d);
      CHECK(d < prev);
      CHECK(d > 0);
      prev = d;
    }
  }
}

TEST_CASE("mixed trigonometric identity") {
  CHECK(check_mixed_trig(1) < 1e-13);
  CHECK(check_mixed_trig(0.1) < 1e-13);
  CHECK(check_mixed_trig(10) < 1e-13);
  for (double s = 0.1; s <= 20; s += 0.37)
    CHECK(check_mixed_trig(s) < 1e-13);
}

TEST_CASE("zeta relation") {
  for (int n = 1; n <= 8; ++n) {
    const QuadResult r = check_zeta(n);
    CHECK(r.abs_dev < 1e-12);
    CHECK(r.ok);
  }
  CHECK_THROWS_AS(check_zeta(0), DomainError);
  CHECK_THROWS_AS(check_zeta(9), DomainError);
}

TEST_CASE("g squared") {
  CHECK(check_g_squared(5).abs_dev < 1e-8);
  CHECK(check_g_squared(10).abs_dev < 1e-9);
  CHECK(check_g_squared(2).abs_dev < 1e-7);
  CHECK_THROWS_AS(check_g_squared(1), DomainError);
}

TEST_CASE("float family evaluation") {
  for (double p : {0.0, 0.3, 1.0, 2.7, -0.25})
    for (int n = 2; n <= 20; ++n)
      for (Family f : {Family::Miki, Family::Fpz, Family::Mixed}) {
        const FloatFamilyReport r = family_float(f, n, p);
        INFO(r.identity << " n=" << n << " p=" << p);
        CHECK(r.ok);
      }
  CHECK_THROWS_AS(family_float(Family::Miki, 3, -1), DomainError);
  CHECK_THROWS_AS(family_float(Family::Miki, 1, 0.5), DomainError);
}
