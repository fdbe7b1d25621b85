#include "bernkit/identities.hpp"

#include "bernkit/combinatorics.hpp"
#include "bernkit/errors.hpp"
#include "bernkit/gamma.hpp"
#include "bernkit/series.hpp"

#include <array>
#include <functional>

namespace bernkit {

IdentityReport make_report(std::string identity, int n, Rational lhs, Rational rhs) {
  IdentityReport r;
  r.identity = std::move(identity);
  r.n = n;
  r.residual = lhs - rhs;
  r.ok = r.residual == 0;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

std::string_view to_string(Family f) {
  switch (f) {
  case Family::Miki:
    return "miki";
  case Family::Fpz:
    return "fpz";
  case Family::Mixed:
    return "mixed";
  }
  return "?";
}

namespace {

void require_n(std::string_view id, int n, int floor) {
  if (n < floor)
    throw DomainError(std::string(id) + " requires n >= " + std::to_string(floor) + ", got " +
                      std::to_string(n));
}

Rational C(long n, long k) { return Rational(binomial(n, k)); }

Rational inv_fact(long n) { return make_rational(1, factorial(static_cast<unsigned long>(n))); }

// Sums shared by the quadratic identities.

// sum_{k=1}^{n-1} X_{2k} Y_{2n-2k} / ((2k)(2n-2k)) [C(2n,2k) if weighted]
template <class X, class Y>
Rational folded_pair_sum(int n, X x, Y y, bool binomial_weight) {
  Rational s = 0;
  for (long k = 1; k < n; ++k) {
    Rational t = x(2 * k) * y(2 * n - 2 * k) / (2 * k) / (2 * n - 2 * k);
    if (binomial_weight)
      t *= C(2 * n, 2 * k);
    s += t;
  }
  return s;
}

// (1/n) sum_{k=1}^{n} X_{2k} Y_{2n-2k} / (2k) C(2n,2k) w_k
template <class X, class Y, class W>
Rational single_divisor_sum(int n, X x, Y y, W weight) {
  Rational s = 0;
  for (long k = 1; k <= n; ++k)
    s += x(2 * k) * y(2 * n - 2 * k) / (2 * k) * C(2 * n, 2 * k) * weight(k);
  return s / n;
}

Rational unit_weight(long) { return 1; }

} // namespace

IdentityReport verify_euler(int n, const SequenceView &seq) {
  require_n("euler", n, 2);
  Rational lhs = 0;
  for (long k = 1; k < n; ++k)
    lhs += C(2 * n, 2 * k) * seq.bernoulli(2 * k) * seq.bernoulli(2 * n - 2 * k);
  return make_report("euler", n, lhs, -(2 * n + 1) * seq.bernoulli(2 * n));
}

IdentityReport verify_miki(int n, const SequenceView &seq) {
  require_n("miki", n, 2);
  auto b = [&](long m) { return seq.bernoulli(m); };
  const Rational lhs = folded_pair_sum(n, b, b, false);
  const Rational rhs = folded_pair_sum(n, b, b, true) + b(2 * n) / n * harmonic(2 * n);
  return make_report("miki", n, lhs, rhs);
}

IdentityReport verify_miki_modified(int n, const SequenceView &seq) {
  require_n("miki-modified", n, 2);
  auto b = [&](long m) { return seq.bernoulli(m); };
  const Rational lhs = folded_pair_sum(n, b, b, false);

  // k runs to n-1 with H_{2n} ...
  Rational partial = 0;
  for (long k = 1; k < n; ++k)
    partial += b(2 * k) * b(2 * n - 2 * k) / (2 * k) * C(2 * n, 2 * k);
  const Rational with_h2n = partial / n + b(2 * n) / n * harmonic(2 * n);
  // ... or to n (B_0 term) with H_{2n-1}.
  const Rational rhs = single_divisor_sum(n, b, b, unit_weight) + b(2 * n) / n * harmonic(2 * n - 1);

  if (with_h2n != rhs)
    throw RouteMismatch("miki-modified: H_{2n} and H_{2n-1} forms differ at n=" +
                        std::to_string(n));
  return make_report("miki-modified", n, lhs, rhs);
}

IdentityReport verify_fpz(int n, const SequenceView &seq) {
  require_n("fpz", n, 2);
  auto b = [&](long m) { return seq.bernoulli(m); };
  auto bb = [&](long m) { return seq.bernoulli_bar(m); };
  const Rational lhs = folded_pair_sum(n, bb, bb, false);
  const Rational rhs = single_divisor_sum(n, b, bb, unit_weight) + bb(2 * n) / n * harmonic(2 * n - 1);
  return make_report("fpz", n, lhs, rhs);
}

IdentityReport verify_mixed(int n, const SequenceView &seq) {
  require_n("mixed", n, 2);
  auto b = [&](long m) { return seq.bernoulli(m); };
  auto bb = [&](long m) { return seq.bernoulli_bar(m); };
  const Rational lhs = folded_pair_sum(n, b, bb, false);
  auto weight = [&](long k) -> Rational { return (1 - pow2(2 * k - 1)) * pow2(-(2 * n - 1)); };
  const Rational rhs =
      single_divisor_sum(n, b, b, weight) + b(2 * n) * pow2(-2 * n) / n * harmonic(2 * n - 1);
  return make_report("mixed", n, lhs, rhs);
}

// ---------------------------------------------------------------------------
// One-parameter families

IdentityReport verify_family(Family which, int n, const Rational &p, const SequenceView &seq) {
  const std::string id = "family-" + std::string(to_string(which));
  require_n(id, n, 2);

  auto b = [&](long m) { return seq.bernoulli(m); };
  auto bb = [&](long m) { return seq.bernoulli_bar(m); };
  std::function<Rational(long)> lhs_left = b, lhs_right = b, rhs_right = b;
  if (which == Family::Fpz) {
    lhs_left = bb;
    lhs_right = bb;
    rhs_right = bb;
  } else if (which == Family::Mixed) {
    lhs_right = bb;
  }

  using G = GammaProduct;
  const auto P = GammaBase::P;
  const auto P2 = GammaBase::TwoP;
  GammaReducer reducer(p);

  // Left side: X_{2k} Y_{2n-2k} / ((2k)(2n-2k)) Γ(2k+p) Γ(2n-2k+p) / (Γ(2k) Γ(2n-2k))
  ReducedSum lhs(reducer);
  for (long k = 1; k < n; ++k) {
    const Rational scalar = lhs_left(2 * k) * lhs_right(2 * n - 2 * k) / (2 * k) /
                            (2 * n - 2 * k) * inv_fact(2 * k - 1) * inv_fact(2 * n - 2 * k - 1);
    const G term = G(scalar) * G::gamma(P, static_cast<int>(2 * k)) *
                   G::gamma(P, static_cast<int>(2 * n - 2 * k));
    lhs.add(reducer.reduce(term));
  }

  // Right side, convolution part:
  //   2 Γ(p+1) X_{2k} Y_{2n-2k} / ((2k)!(2n-2k)!) w_k Γ(2k+p) Γ(2n+2p) / Γ(2p+2k+1)
  ReducedSum rhs(reducer);
  for (long k = 1; k <= n; ++k) {
    Rational scalar = 2 * b(2 * k) * rhs_right(2 * n - 2 * k) * inv_fact(2 * k) *
                      inv_fact(2 * n - 2 * k);
    if (which == Family::Mixed)
      scalar *= (1 - pow2(2 * k - 1)) * pow2(-(2 * n - 1));
    const G term = G(scalar) * G::gamma(P, 1) * G::gamma(P, static_cast<int>(2 * k)) *
                   G::gamma(P2, 2 * n) * G::gamma(P2, static_cast<int>(2 * k + 1), -1);
    rhs.add(reducer.reduce(term));
  }

  // Right side, beta part: c Γ(2n+2p) sum_{k=1}^{2n-1} β(p+k, p+1)
  Rational c;
  switch (which) {
  case Family::Miki:
    c = 2 * b(2 * n) * inv_fact(2 * n);
    break;
  case Family::Fpz:
    c = 2 * bb(2 * n) * inv_fact(2 * n);
    break;
  case Family::Mixed:
    c = b(2 * n) * inv_fact(2 * n) * pow2(-(2 * n - 1));
    break;
  }
  for (int k = 1; k <= 2 * n - 1; ++k)
    rhs.add(reducer.reduce(G(c) * G::gamma(P2, 2 * n) * beta_factor(k)));

  const ReducedGamma &l = lhs.value();
  const ReducedGamma &r = rhs.value();
  if (l.exp_gamma_p != r.exp_gamma_p || l.exp_gamma_2p != r.exp_gamma_2p)
    throw ExponentMismatch(id + ": sides carry different Γ exponents at n=" + std::to_string(n));

  IdentityReport report = make_report(id, n, l.value, r.value);
  report.p = p;
  report.gamma_exponents = std::make_pair(l.exp_gamma_p, l.exp_gamma_2p);
  return report;
}

IdentityReport verify_p1(Family which, int n, const SequenceView &seq) {
  const std::string id = "p1-" + std::string(to_string(which));
  require_n(id, n, which == Family::Miki ? 2 : 1);

  auto b = [&](long m) { return seq.bernoulli(m); };
  auto bb = [&](long m) { return seq.bernoulli_bar(m); };

  Rational lhs = 0;
  Rational conv = 0;
  Rational tail;
  switch (which) {
  case Family::Miki:
    for (long k = 1; k <= n; ++k) {
      lhs += b(2 * k) * b(2 * n - 2 * k);
      conv += b(2 * k) * b(2 * n - 2 * k) * C(2 * n + 2, 2 * k + 2);
    }
    tail = 2 * n * b(2 * n);
    break;
  case Family::Fpz:
    for (long k = 1; k <= n; ++k) {
      lhs += bb(2 * k) * bb(2 * n - 2 * k);
      conv += b(2 * k) * bb(2 * n - 2 * k) * C(2 * n + 2, 2 * k + 2);
    }
    tail = 2 * n * bb(2 * n);
    break;
  case Family::Mixed:
    for (long k = 1; k <= n; ++k) {
      if (k < n)
        lhs += b(2 * k) * bb(2 * n - 2 * k);
      conv += b(2 * k) * b(2 * n - 2 * k) * (1 - pow2(2 * k - 1)) * pow2(-(2 * n - 1)) *
              C(2 * n + 2, 2 * k + 2);
    }
    tail = (2 * n - 1) * b(2 * n) * pow2(-2 * n);
    break;
  }
  IdentityReport report = make_report(id, n, lhs, conv / (n + 1) + tail);
  report.p = Rational(1);

  if (n >= 2) {
    const IdentityReport family = verify_family(which, n, 1, seq);
    if (family.residual != report.residual)
      throw RouteMismatch(id + ": residual differs from the family at p=1, n=" +
                          std::to_string(n));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Triple products

namespace {

struct Triple {
  long k, l, m;
};

std::vector<Triple> compositions3(int n) {
  std::vector<Triple> out;
  for (long k = 1; k <= n - 2; ++k)
    for (long l = 1; k + l <= n - 1; ++l)
      out.push_back({k, l, n - k - l});
  return out;
}

Rational multinomial_even(int n, const Triple &t) {
  const std::array<unsigned long, 3> parts = {static_cast<unsigned long>(2 * t.k),
                                              static_cast<unsigned long>(2 * t.l),
                                              static_cast<unsigned long>(2 * t.m)};
  return Rational(multinomial(static_cast<unsigned long>(2 * n), parts));
}

template <class X>
Rational triple_lhs(int n, X x) {
  Rational s = 0;
  for (const Triple &t : compositions3(n))
    s += x(2 * t.k) * x(2 * t.l) * x(2 * t.m) / (2 * t.k) / (2 * t.l) / (2 * t.m);
  return s;
}

// (n^2 - 3n/2 + 5/4)
Rational gessel_polynomial(long n) { return Rational(n * n) - frac(3 * n, 2) + frac(5, 4); }

} // namespace

IdentityReport verify_gessel(int n, const SequenceView &seq) {
  require_n("gessel", n, 3);
  auto b = [&](long m) { return seq.bernoulli(m); };
  const Rational lhs = triple_lhs(n, b);

  Rational rhs = 0;
  for (const Triple &t : compositions3(n))
    rhs += b(2 * t.k) * b(2 * t.l) * b(2 * t.m) / (2 * t.k) / (2 * t.l) / (2 * t.m) *
           multinomial_even(n, t);
  rhs += 3 * harmonic(2 * n) * folded_pair_sum(n, b, b, true);
  rhs += 6 * harmonic_second(n) * b(2 * n) / (2 * n);
  rhs -= gessel_polynomial(n) * b(2 * n - 2) / (2 * n - 2);
  return make_report("gessel", n, lhs, rhs);
}

IdentityReport verify_gessel_modified(int n, const SequenceView &seq) {
  require_n("gessel-modified", n, 3);
  auto b = [&](long m) { return seq.bernoulli(m); };
  const Rational lhs = triple_lhs(n, b);

  Rational triple = 0;
  for (const Triple &t : compositions3(n))
    triple += b(2 * t.k) * b(2 * t.l) * b(2 * t.m) / (2 * t.k) / (2 * t.l) * multinomial_even(n, t);
  Rational pair = 0;
  for (long k = 1; k < n; ++k)
    pair += C(2 * n, 2 * k) * b(2 * k) * b(2 * n - 2 * k) / (2 * k);

  Rational rhs = frac(3, 2 * n) * triple;
  rhs += frac(3, n) * harmonic(2 * n) * pair;
  rhs += 6 * harmonic_second(n) * b(2 * n) / (2 * n);
  rhs -= gessel_polynomial(n) * b(2 * n - 2) / (2 * n - 2);
  return make_report("gessel-modified", n, lhs, rhs);
}

IdentityReport verify_fpz_cubic(int n, const SequenceView &seq) {
  require_n("fpz-cubic", n, 3);
  auto b = [&](long m) { return seq.bernoulli(m); };
  auto bb = [&](long m) { return seq.bernoulli_bar(m); };
  const Rational lhs = triple_lhs(n, bb);

  Rational triple = 0;
  for (const Triple &t : compositions3(n))
    triple +=
        b(2 * t.k) * b(2 * t.l) * bb(2 * t.m) / (2 * t.k) / (2 * t.l) * multinomial_even(n, t);
  Rational pair = 0;
  Rational diff = 0;
  for (long k = 1; k < n; ++k) {
    pair += C(2 * n, 2 * k) * b(2 * k) * bb(2 * n - 2 * k) / (2 * k);
    diff += C(2 * n, 2 * k) * b(2 * k) / (2 * k) * (b(2 * n - 2 * k) - bb(2 * n - 2 * k));
  }
  const Rational nn(2L * n * n);

  Rational rhs = frac(3, 2 * n) * triple;
  rhs += frac(3, n) * harmonic(2 * n) * pair;
  rhs += 3 / nn * diff;
  rhs += 3 / nn * harmonic(2 * n - 1) * (b(2 * n) - bb(2 * n));
  rhs += 6 * harmonic_second(n) * bb(2 * n) / (2 * n);
  rhs -= frac(2 * n - 1, 4) * bb(2 * n - 2);
  return make_report("fpz-cubic", n, lhs, rhs);
}

IdentityReport verify_euler_bernoulli(int n, const SequenceView &seq) {
  require_n("euler-bernoulli", n, 1);
  Rational lhs = 0;
  for (long k = 1; k <= n; ++k)
    lhs += Rational(seq.euler(2 * k - 2) * seq.euler(2 * n - 2 * k));

  Rational rhs = 0;
  for (long k = 1; k <= n; ++k) {
    const Rational b2 = seq.bernoulli(2 * k) * seq.bernoulli(2 * n - 2 * k) / k;
    rhs += C(2 * n, 2 * k) * b2 * (pow2(2 * k) - 1) * pow2(2 * k - 1) *
           (1 - pow2(2 * n - 2 * k - 1));
  }
  rhs *= frac(2, n);
  return make_report("euler-bernoulli", n, lhs, rhs);
}

// ---------------------------------------------------------------------------
// N-fold convolutions

namespace {

// Nested summation over compositions of `remaining` into `parts` positive
// pieces, accumulating prod x_{2k_i}/(2k_i).
template <class X>
void compose(int parts, long remaining, const Rational &prefix, X &x, Rational &out) {
  if (parts == 1) {
    out += prefix * x(2 * remaining) / (2 * remaining);
    return;
  }
  for (long k = 1; k <= remaining - (parts - 1); ++k)
    compose(parts - 1, remaining - k, prefix * x(2 * k) / (2 * k), x, out);
}

} // namespace

MultiLhs multi_lhs_routes(int N, int n, Variant variant, const SequenceView &seq) {
  if (N < 2)
    throw DomainError("multi_lhs requires N >= 2");
  if (n < N)
    throw DomainError("multi_lhs requires n >= N");

  auto x = [&](long m) {
    return variant == Variant::Bar ? seq.bernoulli_bar(m) : seq.bernoulli(m);
  };
  MultiLhs r;
  r.direct = 0;
  compose(N, n, Rational(1), x, r.direct);

  const TruncatedSeries psi =
      named_series(variant == Variant::Bar ? "psi_bar" : "psi_tilde", 2 * n, 0, seq);
  const Rational sign = (N % 2 == 0) ? 1 : -1;
  r.via_series = sign * series_pow(psi, static_cast<unsigned>(N)).coeff(2 * n);
  return r;
}

Rational multi_lhs(int N, int n, Variant variant, const SequenceView &seq) {
  MultiLhs r = multi_lhs_routes(N, n, variant, seq);
  if (r.direct != r.via_series)
    throw RouteMismatch("multi_lhs: nested sum " + to_string(r.direct) + " != series power " +
                        to_string(r.via_series));
  return r.direct;
}

IdentityReport verify_multi_lhs(int N, int n, Variant variant, const SequenceView &seq) {
  MultiLhs r = multi_lhs_routes(N, n, variant, seq);
  IdentityReport report = make_report(variant == Variant::Bar ? "multi-lhs-bar" : "multi-lhs", n,
                                      std::move(r.direct), std::move(r.via_series));
  report.N = N;
  return report;
}

} // namespace bernkit
