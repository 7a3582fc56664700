#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace momo {

// Identifies one independent run. The canonical encoding of these fields is
// hashed together with the master seed, so the stream a run receives does not
// depend on scheduling order.
struct StreamLabel {
  std::string algorithm;
  std::string problem;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t run_index = 0;

  std::string canonical() const;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;
std::uint64_t fnv1a64(std::string_view bytes) noexcept;
std::uint64_t derive_stream_seed(std::uint64_t master_seed, const StreamLabel& label) noexcept;

// Random stream owned by exactly one run.
//
// Built on std::mt19937_64, whose output sequence is fixed by the standard.
// The conversions to doubles and bounded integers are done here rather than
// through <random> distributions, which are implementation-defined.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}
  Rng(std::uint64_t master_seed, const StreamLabel& label)
      : Rng(derive_stream_seed(master_seed, label)) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  result_type operator()() noexcept { return engine_(); }

  std::uint64_t seed() const noexcept { return seed_; }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() noexcept { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform on [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = engine_();
      if (x >= threshold) return x % bound;
    }
  }

  bool bernoulli(double p) noexcept { return uniform01() < p; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace momo
