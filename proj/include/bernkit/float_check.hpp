#pragma once

// Floating-point checks of the analytic inputs: integral representations of
// ψ̃, ψ̄, their p-th derivatives and g, the zeta relation for B_{2n}, and a
// float evaluation of the gamma families at real p.

#include "bernkit/identities.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace bernkit {

struct QuadResult {
  std::string name;
  double x = 0;
  double p = 0;
  double value = 0;
  double est_error = 0;
  double target = 0;
  double abs_dev = 0;
  bool ok = false;
};

/// ψ(x) for x > 0 (DomainError otherwise).
double digamma(double x);
long double digamma_ld(long double x);

/// Names accepted by quad_rep.
const std::vector<std::string> &quad_rep_names();

/// Quadrature of the integral representation of `name` at (x, p), compared
/// with its closed form (digamma; finite differences of it for integer p)
/// or, where no closed form exists, the optimally truncated asymptotic
/// series. Requires x >= 1 and p >= 0; p must be 0 for psi_tilde, psi_bar
/// and g. Throws QuadFailure when the estimated error exceeds 1e-8.
QuadResult quad_rep(std::string_view name, double x, double p = 0);

/// |value - S(x)| where S is the optimally truncated asymptotic series of
/// the representation, evaluated with 100-digit arithmetic. Integer p only.
double series_deviation(std::string_view name, double x, unsigned p = 0);

/// |coth s + 1/sinh s - coth(s/2)|, s > 0.
double check_mixed_trig(double s);

/// B_{2n} against (-1)^{n+1} 2 (2n)! ζ(2n) / (2π)^{2n}, 1 <= n <= 8.
/// abs_dev holds the relative deviation.
QuadResult check_zeta(int n);

/// 2 ∫ e^{-2xy} ln(cosh y) / sinh y dy against quad_rep("g", x).value^2, x >= 2.
QuadResult check_g_squared(double x);

struct FloatFamilyReport {
  std::string identity;
  int n = 0;
  double p = 0;
  long double lhs = 0;
  long double rhs = 0;
  long double residual = 0;
  /// Sum of absolute values of all terms on both sides.
  long double scale = 0;
  bool ok = false;
  std::string error;
};

/// The gamma family at real p in long double, n >= 2. ok iff
/// |residual| <= 1e-12 * scale. DomainError at gamma poles.
FloatFamilyReport family_float(Family which, int n, double p);

} // namespace bernkit
