#pragma once

// Truncated formal series with exact coefficients.
//
// A Taylor series stands for sum c_m y^m, an asymptotic series for
// sum c_m x^{-m}. Either way coefficients are keyed by the non-negative
// order m, stored sparsely (zeros are never stored), and known exactly for
// every m <= truncation_order. Asymptotic series are formal objects: no
// summation is attempted, equality is coefficient-wise.

#include "bernkit/rational.hpp"
#include "bernkit/sequences.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bernkit {

enum class SeriesKind { Taylor, Asymptotic };

std::string_view to_string(SeriesKind kind);

class TruncatedSeries {
public:
  TruncatedSeries(SeriesKind kind, int truncation_order);

  SeriesKind kind() const { return kind_; }
  int truncation_order() const { return truncation_order_; }

  /// Coefficient of order m; zero for unstored orders. Throws DomainError
  /// when m is beyond the truncation order (the value is unknown there).
  Rational coeff(int m) const;

  /// Sets c_m. Orders above the truncation order are dropped; negative orders
  /// are rejected with DomainError.
  void set(int m, const Rational &value);

  const std::map<int, Rational> &coeffs() const { return coeffs_; }

  /// Same kind, order and coefficients.
  bool operator==(const TruncatedSeries &other) const = default;

  /// Copy truncated at a lower order (the order may only decrease).
  TruncatedSeries truncated(int order) const;

  /// Ordered (order, coefficient) pairs, zeros omitted.
  std::vector<std::pair<int, Rational>> terms() const;

private:
  SeriesKind kind_;
  int truncation_order_;
  std::map<int, Rational> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries series_sub(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries series_scale(const TruncatedSeries &a, const Rational &factor);

/// Cauchy product; the result is truncated at the smaller of the two orders.
TruncatedSeries series_mul(const TruncatedSeries &a, const TruncatedSeries &b);

/// a^N by binary powering, N >= 1 (DomainError otherwise).
TruncatedSeries series_pow(const TruncatedSeries &a, unsigned N);

/// Term-wise d/dy of a Taylor series (order drops by one).
TruncatedSeries series_derivative(const TruncatedSeries &a);

/// Multiply by y^shift (Taylor) or x^{-shift} (asymptotic), i.e. move every
/// order by +shift. Negative shifts require the vacated low orders to be zero.
TruncatedSeries series_shift(const TruncatedSeries &a, int shift);

/// Taylor: c_m -> c_m λ^m. Asymptotic: c_m -> c_m λ^{-m}. Throws ZeroScale.
TruncatedSeries argument_scale(const TruncatedSeries &a, const Rational &lambda);

/// Term-wise Laplace transform with kernel e^{-2xy}:
///   y^m  ->  m! / (2x)^{m+1}.
/// Taylor input only (KindMismatch otherwise); truncation order grows by one.
TruncatedSeries laplace_asymptotic(const TruncatedSeries &t);

/// Named generating functions. `p` is the derivative order for
/// psi_tilde_deriv / psi_bar_deriv and ignored otherwise.
///
///   b                   x/(e^x-1)          = sum B_n x^n/n!
///   coth_minus_inv      coth y - 1/y       = sum_{k>=1} 2^{2k} B_{2k} y^{2k-1}/(2k)!
///   inv_sinh_minus_inv  1/sinh y - 1/y     = sum_{k>=1} 2^{2k} Bbar_{2k} y^{2k-1}/(2k)!
///   sech                sech y             = sum E_{2n} y^{2n}/(2n)!
///   log_sinh_ratio      ln(sinh y / y)     = sum_{k>=1} 2^{2k-1} B_{2k} y^{2k}/(k (2k)!)
///   psi_tilde           ψ(x) - ln x + 1/(2x) ~ -sum B_{2k}/(2k) x^{-2k}
///   psi_bar             ψ(x+1/2) - ln x      ~ -sum Bbar_{2k}/(2k) x^{-2k}
///   psi_tilde_deriv     p-th derivative: (-1)^{p+1} sum B_{2n} Γ(2n+p)/((2n)Γ(2n)) x^{-2n-p}
///   psi_bar_deriv       same with Bbar
///   g                   ∫ e^{-2xs} sech s ds ~ sum E_{2n} / (2x)^{2n+1}
///
/// Sequence values are read through `seq`, so a perturbed view perturbs the
/// series as well. Throws UnknownName for anything else.
TruncatedSeries named_series(std::string_view name, int order, unsigned p = 0,
                             const SequenceView &seq = SequenceView());

/// Names accepted by named_series.
const std::vector<std::string> &series_names();

/// b(x)^2 == (1-x) b(x) - x b'(x) through x^order. Requires order >= 2.
bool check_b_quadratic(int order);

/// ψ̃(x) + ψ̄(x) == 2 ψ̃(2x) through x^{-order}. Requires order >= 2 and even.
bool check_doubling(int order);

} // namespace bernkit
