#pragma once

// Exact verifiers for the Bernoulli/Euler convolution identities.
//
// Every verifier evaluates both printed sides with exact rationals and
// reports lhs, rhs and residual = lhs - rhs; ok holds iff the residual is
// exactly zero. Sequence inputs come from a SequenceView so tests can inject
// perturbed Bernoulli values.

#include "bernkit/rational.hpp"
#include "bernkit/sequences.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bernkit {

struct IdentityReport {
  std::string identity;
  int n = 0;
  std::optional<Rational> p;
  std::optional<int> N;
  Rational lhs;
  Rational rhs;
  Rational residual;
  bool ok = false;
  /// Γ(p), Γ(2p) exponents shared by both sides of a gamma-normalized family.
  std::optional<std::pair<int, int>> gamma_exponents;
  /// Set when the row could not be evaluated (domain, pole, ...).
  std::string error;
};

/// Fills residual and ok from lhs and rhs.
IdentityReport make_report(std::string identity, int n, Rational lhs, Rational rhs);

/// sum_{k=1}^{n-1} C(2n,2k) B_{2k} B_{2n-2k} = -(2n+1) B_{2n}, n >= 2.
IdentityReport verify_euler(int n, const SequenceView &seq = SequenceView());

/// Miki's identity with H_{2n}, n >= 2.
IdentityReport verify_miki(int n, const SequenceView &seq = SequenceView());

/// Miki's identity with the k = n term folded in and H_{2n-1}, n >= 2.
/// Also evaluates the intermediate H_{2n} form and throws RouteMismatch if the
/// two right-hand sides differ.
IdentityReport verify_miki_modified(int n, const SequenceView &seq = SequenceView());

/// Faber-Pandharipande-Zagier identity, n >= 2.
IdentityReport verify_fpz(int n, const SequenceView &seq = SequenceView());

/// Mixed B / Bbar convolution, n >= 2.
IdentityReport verify_mixed(int n, const SequenceView &seq = SequenceView());

enum class Family { Miki, Fpz, Mixed };

std::string_view to_string(Family f);

/// One-parameter generalization at rational p, n >= 2. Both sides are built
/// term by term as gamma products, normalized to Γ(p)^a Γ(2p)^b · rational,
/// and compared after asserting equal exponents (ExponentMismatch).
/// Propagates PoleEncountered / ZeroDivisor from the normalization.
IdentityReport verify_family(Family which, int n, const Rational &p,
                             const SequenceView &seq = SequenceView());

/// The p = 1 specializations in their printed form (miki: n >= 2, fpz and
/// mixed: n >= 1). For n >= 2 the residual is also checked against
/// verify_family(which, n, 1) (RouteMismatch if they differ).
IdentityReport verify_p1(Family which, int n, const SequenceView &seq = SequenceView());

/// Gessel's triple-product identity, n >= 3.
IdentityReport verify_gessel(int n, const SequenceView &seq = SequenceView());

/// The integration-by-parts variant of Gessel's identity, n >= 3.
IdentityReport verify_gessel_modified(int n, const SequenceView &seq = SequenceView());

/// Cubic generalization of the FPZ identity, n >= 3.
IdentityReport verify_fpz_cubic(int n, const SequenceView &seq = SequenceView());

/// sum_{k=1}^{n} E_{2k-2} E_{2n-2k} against the Bernoulli convolution, n >= 1.
IdentityReport verify_euler_bernoulli(int n, const SequenceView &seq = SequenceView());

enum class Variant { Plain, Bar };

/// The N-fold convolution
///   sum_{k_1+...+k_N = n, k_i >= 1} prod B_{2k_i} / (2k_i)
/// (Bbar for Variant::Bar), by direct nested summation and as
/// (-1)^N times the x^{-2n} coefficient of ψ̃^N (resp. ψ̄^N).
struct MultiLhs {
  Rational direct;
  Rational via_series;
};

/// Requires N >= 2 and n >= N (DomainError).
MultiLhs multi_lhs_routes(int N, int n, Variant variant, const SequenceView &seq = SequenceView());

/// Both routes, RouteMismatch if they differ.
Rational multi_lhs(int N, int n, Variant variant, const SequenceView &seq = SequenceView());

/// Report form: lhs = direct route, rhs = series route.
IdentityReport verify_multi_lhs(int N, int n, Variant variant,
                                const SequenceView &seq = SequenceView());

} // namespace bernkit
