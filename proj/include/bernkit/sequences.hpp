#pragma once

// Bernoulli, modified Bernoulli, Euler and harmonic numbers.
//
// Convention: B_1 = -1/2, i.e. the coefficients of x/(e^x - 1).

#include "bernkit/rational.hpp"

#include <cstddef>
#include <deque>
#include <map>
#include <shared_mutex>

namespace bernkit {

/// Memo tables for B_n and E_n. Entries are filled by their defining
/// recurrences, extend monotonically, and never change once present.
/// Reads may run concurrently; extension takes an exclusive lock.
/// References returned stay valid for the cache's lifetime.
class SequenceCache {
public:
  SequenceCache();

  /// B_n from sum_{k=0}^{n} C(n+1,k) B_k = 0 (n >= 1), B_0 = 1.
  const Rational &bernoulli(std::size_t n);

  /// E_n, the Taylor coefficients of sech s = sum E_n s^n / n!.
  const BigInt &euler(std::size_t n);

  /// Fill both tables through index n so later reads never need the write lock.
  void reserve(std::size_t n);

  std::size_t bernoulli_size() const;
  std::size_t euler_size() const;

  /// Process-wide instance used by the free functions below.
  static SequenceCache &global();

private:
  void extend_bernoulli(std::size_t n);
  void extend_euler(std::size_t n);

  mutable std::shared_mutex mutex_;
  std::deque<Rational> bernoulli_;
  std::deque<BigInt> euler_;
};

Rational bernoulli(std::size_t n);

/// ((1 - 2^{n-1}) / 2^{n-1}) B_n, the coefficients arising from 1/sinh.
Rational bernoulli_bar(std::size_t n);

BigInt euler_number(std::size_t n);

/// H_i = sum_{j=1}^{i} 1/j, H_0 = 0.
Rational harmonic(std::size_t i);

/// H_{2n,2} = sum_{1 <= i < j <= 2n} 1/(ij). Evaluated both as the double sum
/// and as sum_{l=1}^{2n-1} H_l/(l+1); throws RouteMismatch if they differ.
/// Throws DomainError for n == 0.
Rational harmonic_second(std::size_t n);

/// The sequence inputs an identity verifier reads. Defaults to the global
/// cache; individual Bernoulli entries can be overridden to inject a
/// perturbation (B-bar follows the overridden B automatically).
class SequenceView {
public:
  SequenceView() = default;
  explicit SequenceView(SequenceCache &cache) : cache_(&cache) {}

  Rational bernoulli(std::size_t n) const;
  Rational bernoulli_bar(std::size_t n) const;
  BigInt euler(std::size_t n) const;

  /// Copy of this view with B_index replaced by B_index + delta.
  SequenceView with_bernoulli_shift(std::size_t index, const Rational &delta) const;

  bool perturbed() const { return !overrides_.empty(); }

private:
  SequenceCache *cache_ = &SequenceCache::global();
  std::map<std::size_t, Rational> overrides_;
};

} // namespace bernkit
