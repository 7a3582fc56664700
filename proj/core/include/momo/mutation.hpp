#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "momo/bits.hpp"
#include "momo/rng.hpp"
#include "momo/stagnation.hpp"

namespace momo {

// Flips exactly one position chosen uniformly at random.
BitString flip_one_uniform(const BitString& x, Rng& rng);

// Each bit flipped independently with probability rate, 0 < rate <= 1.
// Throws UsageError for a rate outside that range.
BitString standard_bitwise(const BitString& x, double rate, Rng& rng);

// Binomial(n, p) flip-count sampler by inversion of a cumulative table.
//
// Standard bit-wise mutation is equivalent in distribution to drawing the
// number of flipped bits K ~ Bin(n, p) and then flipping a uniformly random
// K-subset of positions; this costs one draw plus K position draws instead of
// n Bernoulli trials. The table is built with multiplications only, so it is
// identical on every IEEE platform.
class FlipCountTable {
 public:
  FlipCountTable(std::size_t n, double p);

  std::size_t n() const noexcept { return n_; }
  double rate() const noexcept { return p_; }
  // False when (1-p)^n underflows; callers fall back to per-bit trials.
  bool usable() const noexcept { return usable_; }
  std::size_t sample(Rng& rng) const noexcept;

 private:
  std::size_t n_;
  double p_;
  bool usable_ = true;
  std::vector<double> cdf_;
};

// Run-local standard bit-wise mutation at rates r/n, r in [1..n]. Flip-count
// tables are built lazily per r and reused; the scratch permutation makes
// subset selection O(K). Not shareable across threads.
class BitwiseMutator {
 public:
  explicit BitwiseMutator(std::size_t n);

  // Mutates x in place at rate r/n; returns the number of flipped bits.
  std::size_t mutate_at(BitString& x, std::size_t r, Rng& rng);

  // Mutates x in place at an arbitrary rate in (0, 1].
  std::size_t mutate(BitString& x, double rate, Rng& rng);

 private:
  std::size_t flip_subset(BitString& x, std::size_t count, Rng& rng);
  std::size_t flip_per_bit(BitString& x, double rate, Rng& rng);
  std::size_t apply(BitString& x, const FlipCountTable& table, Rng& rng);

  std::size_t n_;
  std::vector<std::optional<FlipCountTable>> tables_;
  std::vector<std::uint32_t> positions_;
};

// Truncated discrete power law on [1..floor(n/2)]: Pr[a] proportional to a^-beta.
class PowerLawDist {
 public:
  // Throws UsageError unless n >= 2 and beta > 1.
  PowerLawDist(std::size_t n, double beta);

  std::size_t n() const noexcept { return n_; }
  double beta() const noexcept { return beta_; }
  std::size_t support_max() const noexcept { return cdf_.size(); }
  // Normalization sum over i in [1..floor(n/2)] of i^-beta.
  double normalization() const noexcept { return norm_; }
  double pmf(std::size_t alpha) const noexcept;
  std::size_t sample(Rng& rng) const noexcept;

 private:
  std::size_t n_;
  double beta_;
  double norm_ = 0.0;
  std::vector<double> cdf_;
};

std::size_t sample_power_law(const PowerLawDist& dist, Rng& rng);

// Samples alpha from dist, then mutates bit-wise at rate alpha/n. If
// sampled_alpha is non-null it receives alpha.
BitString heavy_tailed_mutate(const BitString& x, const PowerLawDist& dist, Rng& rng,
                              std::size_t* sampled_alpha = nullptr);

}  // namespace momo
