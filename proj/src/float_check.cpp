#include "bernkit/float_check.hpp"

#include "bernkit/combinatorics.hpp"
#include "bernkit/errors.hpp"
#include "bernkit/sequences.hpp"
#include "bernkit/series.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace bernkit {

namespace {

using Real100 = boost::multiprecision::cpp_bin_float_100;
using boost::math::quadrature::exp_sinh;
using boost::math::quadrature::gauss_kronrod;
using boost::math::quadrature::tanh_sinh;

constexpr long double kQuadFailure = 1e-8L;

template <class R>
R from_rational(const Rational &q);

template <>
long double from_rational<long double>(const Rational &q) {
  return to_long_double(q);
}

template <>
Real100 from_rational<Real100>(const Rational &q) {
  return Real100(q.get_num().get_str()) / Real100(q.get_den().get_str());
}

enum class Kernel { Coth, InvSinh, Sech };

// Taylor coefficients of coth s - 1/s (resp. 1/sinh s - 1/s) at s^{2k-1}, k = 1..60.
template <class R>
const std::vector<R> &odd_coefficients(Kernel kernel) {
  static const std::vector<R> coth = [] {
    const TruncatedSeries s = named_series("coth_minus_inv", 119);
    std::vector<R> c;
    for (int k = 1; k <= 60; ++k)
      c.push_back(from_rational<R>(s.coeff(2 * k - 1)));
    return c;
  }();
  static const std::vector<R> inv_sinh = [] {
    const TruncatedSeries s = named_series("inv_sinh_minus_inv", 119);
    std::vector<R> c;
    for (int k = 1; k <= 60; ++k)
      c.push_back(from_rational<R>(s.coeff(2 * k - 1)));
    return c;
  }();
  return kernel == Kernel::Coth ? coth : inv_sinh;
}

template <class R>
R odd_series(const std::vector<R> &c, const R &s) {
  using std::abs;
  const R s2 = s * s;
  R power = s;
  R sum = 0;
  for (const R &ck : c) {
    const R term = ck * power;
    sum += term;
    if (abs(term) <= std::numeric_limits<R>::epsilon() * abs(sum))
      break;
    power *= s2;
  }
  return sum;
}

template <class R>
R kernel_value(Kernel kernel, const R &s) {
  using std::cosh;
  using std::sinh;
  using std::tanh;
  switch (kernel) {
  case Kernel::Coth:
    if (s < R(0.25))
      return odd_series(odd_coefficients<R>(kernel), s);
    return 1 / tanh(s) - 1 / s;
  case Kernel::InvSinh:
    if (s < R(0.25))
      return odd_series(odd_coefficients<R>(kernel), s);
    return 1 / sinh(s) - 1 / s;
  case Kernel::Sech:
    return 1 / cosh(s);
  }
  return 0;
}

struct RepSpec {
  Kernel kernel;
  bool derivative; // takes a p
  bool bar;        // psi_bar family (sequence B̄ in the series)
};

RepSpec rep_spec(std::string_view name) {
  if (name == "psi_tilde")
    return {Kernel::Coth, false, false};
  if (name == "psi_bar")
    return {Kernel::InvSinh, false, true};
  if (name == "psi_tilde_p")
    return {Kernel::Coth, true, false};
  if (name == "psi_bar_p")
    return {Kernel::InvSinh, true, true};
  if (name == "g")
    return {Kernel::Sech, false, false};
  throw UnknownName("unknown representation '" + std::string(name) + "'");
}

bool is_integral(double p) { return std::floor(p) == p; }

// Sign in front of the integral: -(-2)^p for integer p, -2^p otherwise.
long double psi_prefactor(double p) {
  const long double mag = std::pow(2.0L, static_cast<long double>(p));
  if (!is_integral(p))
    return -mag;
  return (static_cast<long>(p) % 2 == 0) ? -mag : mag;
}

struct Integral {
  long double value;
  long double error;
};

// ∫_0^∞ f over [0,1] (tanh-sinh) and [1,T] (adaptive Gauss-Kronrod), where
// the integrand is negligible beyond T.
template <class F>
Integral integrate_split(const F &f, long double T) {
  thread_local tanh_sinh<long double> head;
  long double err_head = 0;
  const long double split = std::min(1.0L, T);
  long double value = head.integrate(f, 0.0L, split, 1e-16L, &err_head);
  long double err_tail = 0;
  if (T > 1)
    value += gauss_kronrod<long double, 31>::integrate(f, 1.0L, T, 15, 1e-16L, &err_tail);
  return {value, err_head + err_tail};
}

// Beyond T, e^{-2xs} s^p < ~1e-18.
long double tail_cutoff(long double x, long double p) {
  return (18.0L * std::log(10.0L) + 3.0L * p) / (2.0L * x);
}

Integral rep_integral(const RepSpec &rep, long double x, long double p) {
  const long double pre = rep.kernel == Kernel::Sech ? 1.0L : psi_prefactor(static_cast<double>(p));
  auto f = [&](long double s) {
    const long double w = std::exp(-2.0L * x * s);
    const long double sp = p == 0 ? 1.0L : std::pow(s, p);
    return pre * w * sp * kernel_value(rep.kernel, s);
  };
  return integrate_split(f, tail_cutoff(x, p));
}

// p-th derivative by central differences with two Richardson steps. f takes
// the shared number of digamma recurrence steps so every stencil point sees
// the same smooth function.
template <class F>
long double richardson_derivative(const F &f, long double x, unsigned p) {
  const long double h = 0.02L;
  const long double lowest = x - static_cast<long double>(p) / 2 * h;
  const int steps = lowest < 8 ? static_cast<int>(std::ceil(8 - lowest)) : 0;
  if (p == 0)
    return f(x, steps);
  auto central = [&](long double step) {
    long double sum = 0;
    for (unsigned j = 0; j <= p; ++j) {
      const long double c = to_long_double(Rational(binomial(p, j)));
      const long double at = x + (static_cast<long double>(p) / 2 - j) * step;
      sum += (j % 2 == 0 ? c : -c) * f(at, steps);
    }
    return sum / std::pow(step, static_cast<int>(p));
  };
  const long double d0 = central(h), d1 = central(h / 2), d2 = central(h / 4);
  const long double r0 = (4 * d1 - d0) / 3, r1 = (4 * d2 - d1) / 3;
  return (16 * r1 - r0) / 15;
}

// ψ(x) with exactly `steps` upward recurrence steps before the expansion.
long double digamma_shifted(long double x, int steps);

long double psi_closed_form(bool bar, long double x, int steps) {
  if (bar)
    return digamma_shifted(x + 0.5L, steps) - std::log(x);
  return digamma_shifted(x, steps) - std::log(x) + 1 / (2 * x);
}

// Terms of an asymptotic series, summed up to (not including) the smallest one.
struct Truncation {
  long double sum = 0;
  long double first_omitted = 0;
};

template <class R, class Term>
Truncation optimal_truncation(const Term &term, int first, int last, R &sum_out) {
  using std::abs;
  R sum = 0;
  R prev = term(first);
  int k = first;
  for (; k < last; ++k) {
    const R next = term(k + 1);
    if (abs(next) >= abs(prev))
      break;
    sum += prev;
    prev = next;
  }
  sum_out = sum;
  return {static_cast<long double>(sum), static_cast<long double>(prev)};
}

// Coefficient c_k of the representation's asymptotic series, with the
// x-power k-th exponent: psi: -X_{2k} Γ(p+2k)/(2k)! x^{-p-2k}; g: E_{2k}/2^{2k+1} x^{-2k-1}.
template <class R>
R series_term(const RepSpec &rep, const R &x, long double p, int k) {
  using std::pow;
  if (rep.kernel == Kernel::Sech) {
    const R e = from_rational<R>(Rational(euler_number(static_cast<std::size_t>(2 * k))));
    return e / pow(2 * x, 2 * k + 1);
  }
  const std::size_t m = static_cast<std::size_t>(2 * k);
  const Rational b = rep.bar ? bernoulli_bar(m) : bernoulli(m);
  R coefficient;
  if (std::floor(p) == p) {
    const unsigned pi = static_cast<unsigned>(p);
    // Γ(p+2k)/(2k)! = (p+2k-1)!/(2k)!
    coefficient = from_rational<R>(-b * Rational(factorial(pi + m - 1)) / Rational(factorial(m)));
    if (pi % 2 == 1)
      coefficient = -coefficient;
    return coefficient / pow(x, static_cast<int>(pi + m));
  }
  coefficient = from_rational<R>(-b) *
                R(std::exp(std::lgamma(p + static_cast<long double>(m)) -
                           std::lgamma(static_cast<long double>(m) + 1)));
  return coefficient * pow(x, -(R(p) + R(static_cast<long double>(m))));
}

} // namespace

namespace {

long double digamma_shifted(long double x, int steps) {
  static const std::vector<long double> b = [] {
    std::vector<long double> v;
    for (int k = 1; k <= 7; ++k)
      v.push_back(to_long_double(bernoulli(static_cast<std::size_t>(2 * k))));
    return v;
  }();
  long double shift = 0;
  for (int j = 0; j < steps; ++j) {
    shift -= 1 / x;
    x += 1;
  }
  const long double inv2 = 1 / (x * x);
  long double power = inv2;
  long double series = 0;
  for (int k = 1; k <= 7; ++k) {
    series += b[static_cast<std::size_t>(k - 1)] / (2 * k) * power;
    power *= inv2;
  }
  return shift + std::log(x) - 1 / (2 * x) - series;
}

} // namespace

long double digamma_ld(long double x) {
  if (!(x > 0))
    throw DomainError("digamma requires x > 0");
  return digamma_shifted(x, x < 8 ? static_cast<int>(std::ceil(8 - x)) : 0);
}

double digamma(double x) { return static_cast<double>(digamma_ld(x)); }

const std::vector<std::string> &quad_rep_names() {
  static const std::vector<std::string> names = {"psi_tilde", "psi_bar", "psi_tilde_p", "psi_bar_p",
                                                 "g"};
  return names;
}

QuadResult quad_rep(std::string_view name, double x, double p) {
  const RepSpec rep = rep_spec(name);
  if (!(x >= 1))
    throw DomainError("quad_rep requires x >= 1");
  if (!(p >= 0))
    throw DomainError("quad_rep requires p >= 0");
  if (!rep.derivative && p != 0)
    throw DomainError(std::string(name) + " takes no p");

  const Integral in = rep_integral(rep, x, p);
  if (in.error > kQuadFailure)
    throw QuadFailure(std::string(name) + ": estimated error " + std::to_string(static_cast<double>(in.error)));

  QuadResult r;
  r.name = std::string(name);
  r.x = x;
  r.p = p;
  r.value = static_cast<double>(in.value);
  r.est_error = static_cast<double>(in.error);

  long double target = 0;
  long double allowance = 0;
  if (rep.kernel == Kernel::Sech || !is_integral(p)) {
    const long double xl = x;
    long double sum = 0;
    const int first = rep.kernel == Kernel::Sech ? 0 : 1;
    const Truncation t = optimal_truncation<long double>(
        [&](int k) { return series_term<long double>(rep, xl, p, k); }, first, 100, sum);
    target = t.sum;
    allowance = std::fabs(t.first_omitted) + 1e-10L;
  } else {
    const unsigned pi = static_cast<unsigned>(p);
    target = richardson_derivative(
        [&](long double t, int steps) { return psi_closed_form(rep.bar, t, steps); },
        static_cast<long double>(x), pi);
    allowance = pi == 0 ? 1e-9L : 1e-7L;
  }
  const long double dev = std::fabs(in.value - target);
  r.target = static_cast<double>(target);
  r.abs_dev = static_cast<double>(dev);
  r.ok = dev < allowance;
  return r;
}

double series_deviation(std::string_view name, double x, unsigned p) {
  const RepSpec rep = rep_spec(name);
  if (!(x >= 1))
    throw DomainError("series_deviation requires x >= 1");
  if (!rep.derivative && p != 0)
    throw DomainError(std::string(name) + " takes no p");

  const Real100 xr = x;
  const long double pl = p;
  Real100 pre = 1;
  if (rep.kernel != Kernel::Sech) {
    pre = boost::multiprecision::pow(Real100(2), static_cast<int>(p));
    pre = (p % 2 == 0) ? -pre : pre;
  }
  auto f = [&](const Real100 &s) {
    Real100 v = pre * exp(-2 * xr * s) * kernel_value(rep.kernel, s);
    if (p != 0)
      v *= pow(s, static_cast<int>(p));
    return v;
  };
  thread_local exp_sinh<Real100> integrator;
  Real100 err = 0;
  const Real100 value = integrator.integrate(f, Real100(1e-80), &err);
  if (err > Real100(1e-70))
    throw QuadFailure(std::string(name) + ": high-precision quadrature did not converge");

  Real100 sum = 0;
  const int first = rep.kernel == Kernel::Sech ? 0 : 1;
  optimal_truncation<Real100>([&](int k) { return series_term<Real100>(rep, xr, pl, k); }, first,
                              200, sum);
  return static_cast<double>(abs(value - sum));
}

double check_mixed_trig(double s) {
  return std::fabs(1 / std::tanh(s) + 1 / std::sinh(s) - 1 / std::tanh(s / 2));
}

QuadResult check_zeta(int n) {
  if (n < 1 || n > 8)
    throw DomainError("check_zeta requires 1 <= n <= 8");
  const long double s = 2.0L * n;
  constexpr int K = 100;
  long double head = 0;
  for (int k = K - 1; k >= 1; --k)
    head += std::pow(static_cast<long double>(k), -s);
  // Euler-Maclaurin for sum_{k>=K} k^{-s}.
  const long double Kl = K;
  long double tail = std::pow(Kl, 1 - s) / (s - 1) + std::pow(Kl, -s) / 2;
  long double rising = s; // s (s+1) ... (s+2j-2)
  for (int j = 1; j <= 6; ++j) {
    const long double b = to_long_double(bernoulli(static_cast<std::size_t>(2 * j)) /
                                         Rational(factorial(static_cast<unsigned long>(2 * j))));
    tail += b * rising * std::pow(Kl, -s - (2 * j - 1));
    rising *= (s + 2 * j - 1) * (s + 2 * j);
  }
  const long double zeta = head + tail;
  const long double two_pi = 2 * boost::math::constants::pi<long double>();
  const long double fact = to_long_double(Rational(factorial(static_cast<unsigned long>(2 * n))));
  const long double sign = n % 2 == 1 ? 1.0L : -1.0L;
  const long double value = sign * 2 * fact / std::pow(two_pi, s) * zeta;
  const long double target = to_long_double(bernoulli(static_cast<std::size_t>(2 * n)));

  QuadResult r;
  r.name = "zeta";
  r.x = n;
  r.value = static_cast<double>(value);
  r.target = static_cast<double>(target);
  r.abs_dev = static_cast<double>(std::fabs((value - target) / target));
  r.ok = r.abs_dev < 1e-12;
  return r;
}

QuadResult check_g_squared(double x) {
  if (!(x >= 2))
    throw DomainError("check_g_squared requires x >= 2");
  const long double xl = x;
  auto log_cosh = [](long double y) {
    if (y < 1) {
      const long double h = std::sinh(y / 2);
      return std::log1p(2 * h * h);
    }
    return y + std::log1p(std::exp(-2 * y)) - std::log(2.0L);
  };
  auto f = [&](long double y) { return 2 * std::exp(-2 * xl * y) * log_cosh(y) / std::sinh(y); };
  const Integral in = integrate_split(f, tail_cutoff(xl, 1));
  if (in.error > kQuadFailure)
    throw QuadFailure("g_squared: estimated error " + std::to_string(static_cast<double>(in.error)));
  const Integral g = rep_integral(rep_spec("g"), xl, 0);
  if (g.error > kQuadFailure)
    throw QuadFailure("g: estimated error " + std::to_string(static_cast<double>(g.error)));

  QuadResult r;
  r.name = "g_squared";
  r.x = x;
  r.value = static_cast<double>(in.value);
  r.est_error = static_cast<double>(in.error);
  r.target = static_cast<double>(g.value * g.value);
  r.abs_dev = static_cast<double>(std::fabs(in.value - g.value * g.value));
  r.ok = r.abs_dev < 1e-8;
  return r;
}

FloatFamilyReport family_float(Family which, int n, double p) {
  FloatFamilyReport r;
  r.identity = "family-" + std::string(to_string(which));
  r.n = n;
  r.p = p;
  if (n < 2)
    throw DomainError(r.identity + " requires n >= 2");

  const long double pl = p;
  auto gamma = [&](long double z) {
    if (z <= 0 && std::floor(z) == z)
      throw DomainError(r.identity + ": gamma pole at p=" + std::to_string(p));
    return std::tgamma(z);
  };
  auto b = [](long m) { return to_long_double(bernoulli(static_cast<std::size_t>(m))); };
  auto bb = [](long m) { return to_long_double(bernoulli_bar(static_cast<std::size_t>(m))); };
  auto fact = [](long m) { return std::tgamma(static_cast<long double>(m) + 1); };
  auto lhs_left = which == Family::Fpz ? bb : b;
  auto lhs_right = which == Family::Miki ? b : bb;
  auto rhs_right = which == Family::Fpz ? bb : b;

  long double lhs = 0, rhs = 0, scale = 0;
  for (long k = 1; k < n; ++k) {
    const long double t = lhs_left(2 * k) * lhs_right(2 * n - 2 * k) / (2 * k) /
                          (2 * n - 2 * k) / fact(2 * k - 1) / fact(2 * n - 2 * k - 1) *
                          gamma(pl + 2 * k) * gamma(pl + 2 * n - 2 * k);
    lhs += t;
    scale += std::fabs(t);
  }
  const long double g2n = gamma(2 * pl + 2 * n);
  const long double gp1 = gamma(pl + 1);
  for (long k = 1; k <= n; ++k) {
    long double t = 2 * b(2 * k) * rhs_right(2 * n - 2 * k) / fact(2 * k) / fact(2 * n - 2 * k) *
                    gp1 * gamma(pl + 2 * k) * g2n / gamma(2 * pl + 2 * k + 1);
    if (which == Family::Mixed)
      t *= (1 - std::pow(2.0L, 2 * k - 1)) / std::pow(2.0L, 2 * n - 1);
    rhs += t;
    scale += std::fabs(t);
  }
  long double c = 0;
  switch (which) {
  case Family::Miki:
    c = 2 * b(2 * n) / fact(2 * n);
    break;
  case Family::Fpz:
    c = 2 * bb(2 * n) / fact(2 * n);
    break;
  case Family::Mixed:
    c = b(2 * n) / fact(2 * n) / std::pow(2.0L, 2 * n - 1);
    break;
  }
  for (long k = 1; k <= 2 * n - 1; ++k) {
    const long double t = c * g2n * gamma(pl + k) * gp1 / gamma(2 * pl + k + 1);
    rhs += t;
    scale += std::fabs(t);
  }
  r.lhs = lhs;
  r.rhs = rhs;
  r.residual = lhs - rhs;
  r.scale = scale;
  r.ok = std::fabs(r.residual) <= 1e-12L * scale;
  return r;
}

} // namespace bernkit
