#pragma once

// Coefficient-level reconstruction of the four y-integrals whose asymptotic
// expansions assemble the right-hand sides of the Miki and FPZ identities.
//
//   MikiProduct   2 ∫ dy y e^{-2xy} ∫ du (coth y - 1/y)(coth yu - 1/(yu))
//   MikiHarmonic  -2 ∫ dy e^{-2xy} ∫ du [u C(yu) - C(y)] / (1-u),  C = coth - 1/id
//   FpzProduct    2 ∫ dy y e^{-2xy} ∫ du (1/sinh y)(coth yu - 1/(yu))
//   FpzHarmonic   -2 ∫ dy e^{-2xy} ∫ du [S(yu) - S(y)] / (1-u),    S = 1/sinh - 1/id
//
// Each is expanded twice: from the closed-form coefficient formula, and by
// exact u-integration of Taylor data followed by laplace_asymptotic.

#include "bernkit/rational.hpp"
#include "bernkit/sequences.hpp"
#include "bernkit/series.hpp"

#include <string_view>
#include <vector>

namespace bernkit {

enum class LemmaTerm { MikiProduct, MikiHarmonic, FpzProduct, FpzHarmonic };

std::string_view to_string(LemmaTerm t);

/// Accepts the names produced by to_string; throws UnknownName otherwise.
LemmaTerm parse_lemma_term(std::string_view name);

struct LemmaRoutes {
  /// Expansion from the closed-form coefficients.
  TruncatedSeries closed_form;
  /// One or more independent reconstructions from Taylor data.
  std::vector<TruncatedSeries> derived;
};

/// Both kinds of expansion through x^{-order}.
LemmaRoutes lemma_routes(LemmaTerm term, int order, const SequenceView &seq = SequenceView());

/// True when every derived route equals the closed form coefficient-wise.
/// Requires an even order >= 4 (DomainError).
bool verify_lemma_expansion(LemmaTerm term, int order);

/// ∫_0^1 P(u)/(1-u) du for a polynomial P (coefficients by ascending power)
/// with P(1) = 0, by exact synthetic division. Throws DomainError if P(1) != 0.
Rational integrate_over_one_minus_u(const std::vector<Rational> &numerator);

} // namespace bernkit
