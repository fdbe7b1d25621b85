#include "bernkit/gamma.hpp"

#include "bernkit/errors.hpp"

#include <cmath>

namespace bernkit {

GammaProduct GammaProduct::gamma(GammaBase base, int offset, int exponent) {
  GammaProduct g;
  if (exponent != 0)
    g.factors_[{base, offset}] = exponent;
  return g;
}

GammaProduct &GammaProduct::operator*=(const GammaProduct &other) {
  scalar_ *= other.scalar_;
  for (const auto &[key, e] : other.factors_) {
    const int merged = (factors_[key] += e);
    if (merged == 0)
      factors_.erase(key);
  }
  return *this;
}

GammaProduct &GammaProduct::operator*=(const Rational &factor) {
  scalar_ *= factor;
  return *this;
}

GammaProduct GammaProduct::inverse() const {
  if (scalar_ == 0)
    throw DomainError("inverse of a zero gamma product");
  GammaProduct g(Rational(1) / scalar_);
  for (const auto &[key, e] : factors_)
    g.factors_[key] = -e;
  return g;
}

double ReducedGamma::to_double() const {
  return value.get_d() * std::pow(std::tgamma(anchor_p.get_d()), exp_gamma_p) *
         std::pow(std::tgamma(anchor_2p.get_d()), exp_gamma_2p);
}

bool GammaReducer::is_pole(const Rational &z) { return is_integer(z) && z <= 0; }

GammaReducer::GammaReducer(Rational p) : p_(std::move(p)) {
  auto init = [](Anchor &a, const Rational &base) {
    a.value = is_pole(base) ? Rational(1) : base;
    a.shift = base - a.value;
    a.up = {Rational(1)};
    a.down = {Rational(1)};
  };
  init(p_anchor_, p_);
  init(two_p_anchor_, 2 * p_);
}

GammaReducer::Anchor &GammaReducer::anchor_data(GammaBase base) {
  return base == GammaBase::P ? p_anchor_ : two_p_anchor_;
}

const Rational &GammaReducer::anchor(GammaBase base) const {
  return base == GammaBase::P ? p_anchor_.value : two_p_anchor_.value;
}

Rational GammaReducer::ratio_to_anchor(GammaBase base, int offset, bool in_denominator) {
  Anchor &a = anchor_data(base);
  const Rational z = a.value + a.shift + offset;
  if (is_pole(z)) {
    const std::string where = (base == GammaBase::P ? "Γ(p" : "Γ(2p") +
                              std::string(offset < 0 ? "" : "+") + std::to_string(offset) +
                              ") at p=" + to_string(p_);
    if (in_denominator)
      throw ZeroDivisor("reciprocal of " + where + " vanishes (pole)");
    throw PoleEncountered(where + " is a pole");
  }
  // z - anchor is an integer j.
  const Rational jq = a.shift + offset;
  const long j = jq.get_num().get_si();
  if (j >= 0) {
    while (static_cast<long>(a.up.size()) <= j) {
      const long m = static_cast<long>(a.up.size());
      a.up.push_back(a.up.back() * (a.value + (m - 1)));
    }
    return a.up[static_cast<std::size_t>(j)];
  }
  const long d = -j;
  while (static_cast<long>(a.down.size()) <= d) {
    const long m = static_cast<long>(a.down.size());
    const Rational factor = a.value - m;
    if (factor == 0)
      throw ZeroDivisor("zero rising-factorial factor below anchor at p=" + to_string(p_));
    a.down.push_back(a.down.back() * factor);
  }
  return Rational(1) / a.down[static_cast<std::size_t>(d)];
}

ReducedGamma GammaReducer::reduce(const GammaProduct &g) {
  ReducedGamma r;
  r.value = g.scalar();
  r.anchor_p = p_anchor_.value;
  r.anchor_2p = two_p_anchor_.value;
  for (const auto &[key, e] : g.factors()) {
    const auto [base, offset] = key;
    const Rational ratio = ratio_to_anchor(base, offset, e < 0);
    r.value *= pow(ratio, e);
    (base == GammaBase::P ? r.exp_gamma_p : r.exp_gamma_2p) += e;
  }
  return r;
}

ReducedGamma gamma_reduce(const GammaProduct &g, const Rational &p) {
  GammaReducer reducer(p);
  return reducer.reduce(g);
}

GammaProduct beta_factor(int k) {
  if (k < 1)
    throw DomainError("beta_factor requires k >= 1");
  return GammaProduct::gamma(GammaBase::P, k) * GammaProduct::gamma(GammaBase::P, 1) *
         GammaProduct::gamma(GammaBase::TwoP, k + 1, -1);
}

ReducedSum::ReducedSum(const GammaReducer &reducer) {
  sum_.value = 0;
  sum_.anchor_p = reducer.anchor(GammaBase::P);
  sum_.anchor_2p = reducer.anchor(GammaBase::TwoP);
}

void ReducedSum::add(const ReducedGamma &term) {
  if (empty_) {
    sum_.exp_gamma_p = term.exp_gamma_p;
    sum_.exp_gamma_2p = term.exp_gamma_2p;
    empty_ = false;
  } else if (term.exp_gamma_p != sum_.exp_gamma_p || term.exp_gamma_2p != sum_.exp_gamma_2p) {
    throw ExponentMismatch("summand has Γ exponents (" + std::to_string(term.exp_gamma_p) + "," +
                           std::to_string(term.exp_gamma_2p) + "), sum has (" +
                           std::to_string(sum_.exp_gamma_p) + "," +
                           std::to_string(sum_.exp_gamma_2p) + ")");
  }
  sum_.value += term.value;
}

ReducedGamma beta_sum(int n, const Rational &p) {
  if (n < 1)
    throw DomainError("beta_sum requires n >= 1");
  GammaReducer reducer(p);
  ReducedSum sum(reducer);
  for (int k = 1; k <= 2 * n - 1; ++k)
    sum.add(reducer.reduce(beta_factor(k)));
  return sum.value();
}

} // namespace bernkit
