#include "bernkit/sequences.hpp"

#include "bernkit/errors.hpp"

#include <mutex>

namespace bernkit {

SequenceCache::SequenceCache() {
  bernoulli_.emplace_back(1);
  euler_.emplace_back(1);
}

SequenceCache &SequenceCache::global() {
  static SequenceCache cache;
  return cache;
}

const Rational &SequenceCache::bernoulli(std::size_t n) {
  {
    std::shared_lock lock(mutex_);
    if (n < bernoulli_.size())
      return bernoulli_[n];
  }
  std::unique_lock lock(mutex_);
  extend_bernoulli(n);
  return bernoulli_[n];
}

const BigInt &SequenceCache::euler(std::size_t n) {
  {
    std::shared_lock lock(mutex_);
    if (n < euler_.size())
      return euler_[n];
  }
  std::unique_lock lock(mutex_);
  extend_euler(n);
  return euler_[n];
}

void SequenceCache::reserve(std::size_t n) {
  std::unique_lock lock(mutex_);
  extend_bernoulli(n);
  extend_euler(n);
}

std::size_t SequenceCache::bernoulli_size() const {
  std::shared_lock lock(mutex_);
  return bernoulli_.size();
}

std::size_t SequenceCache::euler_size() const {
  std::shared_lock lock(mutex_);
  return euler_.size();
}

// Caller holds the unique lock.
void SequenceCache::extend_bernoulli(std::size_t n) {
  while (bernoulli_.size() <= n) {
    const std::size_t m = bernoulli_.size();
    // sum_{k=0}^{m} C(m+1,k) B_k = 0, solved for B_m.
    Rational acc = 0;
    BigInt c = 1; // C(m+1, k)
    for (std::size_t k = 0; k < m; ++k) {
      acc += c * bernoulli_[k];
      c = c * static_cast<unsigned long>(m + 1 - k) / static_cast<unsigned long>(k + 1);
    }
    Rational b = -acc / static_cast<unsigned long>(m + 1);
    bernoulli_.push_back(std::move(b));
  }
}

// Caller holds the unique lock.
void SequenceCache::extend_euler(std::size_t n) {
  while (euler_.size() <= n) {
    const std::size_t m = euler_.size();
    if (m % 2 == 1) {
      euler_.emplace_back(0);
      continue;
    }
    // sech * cosh = 1: sum_{k even} C(m,k) E_k = 0 for even m >= 2.
    BigInt acc = 0;
    BigInt c = 1; // C(m, k)
    for (std::size_t k = 0; k < m; ++k) {
      if (k % 2 == 0)
        acc += c * euler_[k];
      c = c * static_cast<unsigned long>(m - k) / static_cast<unsigned long>(k + 1);
    }
    euler_.push_back(-acc);
  }
}

Rational bernoulli(std::size_t n) { return SequenceCache::global().bernoulli(n); }

namespace {

Rational bar_weight(std::size_t n) {
  // (1 - 2^{n-1}) / 2^{n-1} = 2^{1-n} - 1
  return pow2(1 - static_cast<long>(n)) - 1;
}

} // namespace

Rational bernoulli_bar(std::size_t n) { return bar_weight(n) * bernoulli(n); }

BigInt euler_number(std::size_t n) { return SequenceCache::global().euler(n); }

Rational harmonic(std::size_t i) {
  Rational h = 0;
  for (std::size_t j = 1; j <= i; ++j)
    h += Rational(1, static_cast<unsigned long>(j));
  return h;
}

Rational harmonic_second(std::size_t n) {
  if (n == 0)
    throw DomainError("harmonic_second requires n >= 1");
  const std::size_t top = 2 * n;

  Rational pairs = 0;
  for (std::size_t j = 2; j <= top; ++j)
    for (std::size_t i = 1; i < j; ++i)
      pairs += Rational(1, static_cast<unsigned long>(i * j));

  Rational folded = 0;
  Rational h = 0;
  for (std::size_t l = 1; l < top; ++l) {
    h += Rational(1, static_cast<unsigned long>(l));
    folded += h / static_cast<unsigned long>(l + 1);
  }

  if (pairs != folded)
    throw RouteMismatch("H_{2n,2}: double sum " + to_string(pairs) + " != folded form " +
                        to_string(folded));
  return pairs;
}

Rational SequenceView::bernoulli(std::size_t n) const {
  if (auto it = overrides_.find(n); it != overrides_.end())
    return it->second;
  return cache_->bernoulli(n);
}

Rational SequenceView::bernoulli_bar(std::size_t n) const {
  return bar_weight(n) * bernoulli(n);
}

BigInt SequenceView::euler(std::size_t n) const { return cache_->euler(n); }

SequenceView SequenceView::with_bernoulli_shift(std::size_t index,
                                                const Rational &delta) const {
  SequenceView shifted = *this;
  shifted.overrides_[index] = bernoulli(index) + delta;
  return shifted;
}

} // namespace bernkit
