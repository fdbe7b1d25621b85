#pragma once

// Exact normalization of gamma-function products at rational p.
//
// Every factor is Γ(p + m) or Γ(2p + m) for an integer offset m. At a
// concrete rational p each such factor is rewritten against an anchor value
// Γ(a) via rising factorials, leaving Γ(a_p)^i · Γ(a_2p)^j · (rational).
// The anchor is p itself (resp. 2p) whenever that is not a pole; when p
// (resp. 2p) is a nonpositive integer every reachable factor is a factorial
// and the anchor is 1, with Γ(1) = 1.

#include "bernkit/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace bernkit {

enum class GammaBase { P, TwoP };

/// Formal product  scalar · ∏ Γ(base + offset)^exponent.
class GammaProduct {
public:
  GammaProduct() = default;
  explicit GammaProduct(Rational scalar) : scalar_(std::move(scalar)) {}

  /// Γ(base + offset)^exponent.
  static GammaProduct gamma(GammaBase base, int offset, int exponent = 1);

  GammaProduct &operator*=(const GammaProduct &other);
  GammaProduct &operator*=(const Rational &factor);
  friend GammaProduct operator*(GammaProduct a, const GammaProduct &b) { return a *= b; }
  friend GammaProduct operator*(GammaProduct a, const Rational &b) { return a *= b; }

  /// Reciprocal: exponents negate, scalar inverts (DomainError if zero).
  GammaProduct inverse() const;

  const Rational &scalar() const { return scalar_; }

  /// (base, offset) -> exponent, canonical: merged and nonzero.
  const std::map<std::pair<GammaBase, int>, int> &factors() const { return factors_; }

private:
  Rational scalar_ = 1;
  std::map<std::pair<GammaBase, int>, int> factors_;
};

/// value · Γ(anchor_p)^exp_gamma_p · Γ(anchor_2p)^exp_gamma_2p.
struct ReducedGamma {
  int exp_gamma_p = 0;
  int exp_gamma_2p = 0;
  Rational value;
  Rational anchor_p;
  Rational anchor_2p;

  /// Multiplies the anchors back in floating point.
  double to_double() const;
};

/// Reduces products at one fixed p, memoizing rising factorials of the two
/// anchors so long sums of products stay cheap.
class GammaReducer {
public:
  explicit GammaReducer(Rational p);

  const Rational &p() const { return p_; }
  const Rational &anchor(GammaBase base) const;

  /// Throws PoleEncountered when a numerator factor sits on a pole and
  /// ZeroDivisor when a denominator factor does (its reciprocal vanishes).
  ReducedGamma reduce(const GammaProduct &g);

  /// Γ(base + offset) / Γ(anchor) as an exact rational.
  Rational ratio_to_anchor(GammaBase base, int offset, bool in_denominator);

private:
  struct Anchor {
    Rational value;      // argument a of Γ(a)
    Rational shift;      // base - a, an integer
    std::vector<Rational> up;   // up[m] = (a)_m
    std::vector<Rational> down; // down[m] = (a-m)(a-m+1)...(a-1)
  };

  Anchor &anchor_data(GammaBase base);
  static bool is_pole(const Rational &z);

  Rational p_;
  Anchor p_anchor_;
  Anchor two_p_anchor_;
};

ReducedGamma gamma_reduce(const GammaProduct &g, const Rational &p);

/// β(p+k, p+1) = Γ(p+k) Γ(p+1) / Γ(2p+k+1), k >= 1 (DomainError otherwise).
GammaProduct beta_factor(int k);

/// sum_{k=1}^{2n-1} β(p+k, p+1), reduced. All summands must reduce to the
/// same gamma exponents (ExponentMismatch otherwise).
ReducedGamma beta_sum(int n, const Rational &p);

/// Running sum of reduced terms. Every added term must carry the same gamma
/// exponents as the first one (ExponentMismatch otherwise). An empty sum is
/// zero with zero exponents.
class ReducedSum {
public:
  explicit ReducedSum(const GammaReducer &reducer);
  void add(const ReducedGamma &term);
  const ReducedGamma &value() const { return sum_; }
  bool empty() const { return empty_; }

private:
  ReducedGamma sum_;
  bool empty_ = true;
};

} // namespace bernkit
