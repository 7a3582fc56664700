#include "momo/mutation.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>

#include "momo/error.hpp"

namespace momo {

BitString flip_one_uniform(const BitString& x, Rng& rng) {
  BitString y = x;
  y.flip(static_cast<std::size_t>(rng.below(x.size())));
  return y;
}

BitString standard_bitwise(const BitString& x, double rate, Rng& rng) {
  if (!(rate > 0.0 && rate <= 1.0)) throw UsageError("mutation rate must lie in (0, 1]");
  BitString y = x;
  BitwiseMutator mutator(x.size());
  mutator.mutate(y, rate, rng);
  return y;
}

FlipCountTable::FlipCountTable(std::size_t n, double p) : n_(n), p_(p), cdf_(n + 1, 0.0) {
  if (!(p > 0.0 && p <= 1.0)) throw UsageError("mutation rate must lie in (0, 1]");
  if (p == 1.0) {
    cdf_.back() = 1.0;
    return;
  }
  const double q = 1.0 - p;
  double pmf = 1.0;
  for (std::size_t i = 0; i < n; ++i) pmf *= q;
  if (pmf < DBL_MIN) {
    usable_ = false;
    return;
  }
  const double odds = p / q;
  double cumulative = 0.0;
  for (std::size_t j = 0; j <= n; ++j) {
    cumulative += pmf;
    cdf_[j] = cumulative;
    pmf = pmf * static_cast<double>(n - j) / static_cast<double>(j + 1) * odds;
  }
}

std::size_t FlipCountTable::sample(Rng& rng) const noexcept {
  const double u = rng.uniform01();
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  return std::min(static_cast<std::size_t>(it - cdf_.begin()), n_);
}

BitwiseMutator::BitwiseMutator(std::size_t n) : n_(n), tables_(n + 1), positions_(n) {
  std::iota(positions_.begin(), positions_.end(), std::uint32_t{0});
}

std::size_t BitwiseMutator::mutate_at(BitString& x, std::size_t r, Rng& rng) {
  if (r == 0 || r > n_) throw UsageError("rate index must lie in [1..n]");
  auto& slot = tables_[r];
  if (!slot) slot.emplace(n_, static_cast<double>(r) / static_cast<double>(n_));
  return apply(x, *slot, rng);
}

std::size_t BitwiseMutator::mutate(BitString& x, double rate, Rng& rng) {
  return apply(x, FlipCountTable(n_, rate), rng);
}

std::size_t BitwiseMutator::apply(BitString& x, const FlipCountTable& table, Rng& rng) {
  if (!table.usable()) return flip_per_bit(x, table.rate(), rng);
  return flip_subset(x, table.sample(rng), rng);
}

std::size_t BitwiseMutator::flip_subset(BitString& x, std::size_t count, Rng& rng) {
  // Partial Fisher-Yates; positions_ stays a permutation, which is all the
  // next call needs for a uniform subset.
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(n_ - i));
    std::swap(positions_[i], positions_[j]);
    x.flip(positions_[i]);
  }
  return count;
}

std::size_t BitwiseMutator::flip_per_bit(BitString& x, double rate, Rng& rng) {
  std::size_t flipped = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (rng.bernoulli(rate)) {
      x.flip(i);
      ++flipped;
    }
  }
  return flipped;
}

PowerLawDist::PowerLawDist(std::size_t n, double beta) : n_(n), beta_(beta) {
  if (n < 2) throw UsageError("power-law mutation requires n >= 2");
  if (!(beta > 1.0)) throw UsageError("power-law exponent beta must exceed 1");
  const std::size_t m = n / 2;
  cdf_.resize(m);
  double running = 0.0;
  for (std::size_t i = 1; i <= m; ++i) {
    running += std::pow(static_cast<double>(i), -beta);
    cdf_[i - 1] = running;
  }
  // Sum smallest terms first for the normalization constant itself.
  norm_ = 0.0;
  for (std::size_t i = m; i >= 1; --i) norm_ += std::pow(static_cast<double>(i), -beta);
  for (auto& c : cdf_) c /= running;
  cdf_.back() = 1.0;
}

double PowerLawDist::pmf(std::size_t alpha) const noexcept {
  if (alpha < 1 || alpha > cdf_.size()) return 0.0;
  return std::pow(static_cast<double>(alpha), -beta_) / norm_;
}

std::size_t PowerLawDist::sample(Rng& rng) const noexcept {
  const double u = rng.uniform01();
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  return std::min(static_cast<std::size_t>(it - cdf_.begin()), cdf_.size() - 1) + 1;
}

std::size_t sample_power_law(const PowerLawDist& dist, Rng& rng) { return dist.sample(rng); }

BitString heavy_tailed_mutate(const BitString& x, const PowerLawDist& dist, Rng& rng,
                              std::size_t* sampled_alpha) {
  if (x.size() != dist.n()) throw UsageError("heavy_tailed_mutate: length differs from distribution n");
  const std::size_t alpha = dist.sample(rng);
  if (sampled_alpha != nullptr) *sampled_alpha = alpha;
  BitString y = x;
  BitwiseMutator mutator(x.size());
  mutator.mutate_at(y, alpha, rng);
  return y;
}

}  // namespace momo
