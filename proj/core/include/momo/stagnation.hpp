#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace momo {

// Largest phase length / budget we represent; larger values saturate here.
inline constexpr std::uint64_t kSaturatedCount =
    static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());

// Stagnation-detection state: current rate index r (mutation rate r/n) and
// failure counter u.
struct SdState {
  std::size_t r = 1;
  std::uint64_t u = 0;

  friend bool operator==(const SdState&, const SdState&) = default;
};

// 2 * pop_size * (e*n/r)^r * ln(n*R) before rounding up, evaluated in extended
// precision and rounded once to double.
double sd_threshold_real(std::size_t pop_size, std::size_t n, std::size_t r, std::uint64_t R);

// Phase length ceil(sd_threshold_real(...)), saturating at kSaturatedCount.
// With pop_size = 1 this is the single-parent phase length.
std::uint64_t sd_threshold(std::size_t pop_size, std::size_t n, std::size_t r, std::uint64_t R);

// Largest admissible rate index, floor(n/2) (at least 1).
inline std::size_t max_rate_index(std::size_t n) noexcept { return n / 2 == 0 ? 1 : n / 2; }

// Threshold cache for one run. Recomputes only when (pop_size, r) changes.
class ThresholdCache {
 public:
  ThresholdCache(std::size_t n, std::uint64_t R) : n_(n), R_(R) {}

  std::uint64_t get(std::size_t pop_size, std::size_t r) {
    if (pop_size != pop_size_ || r != r_) {
      pop_size_ = pop_size;
      r_ = r;
      value_ = sd_threshold(pop_size, n_, r, R_);
    }
    return value_;
  }

 private:
  std::size_t n_;
  std::uint64_t R_;
  std::size_t pop_size_ = 0;
  std::size_t r_ = 0;
  std::uint64_t value_ = 0;
};

// Global-counter stagnation detection, one step per iteration:
//   u <- u + 1; on acceptance r <- 1, u <- 0;
//   then if u exceeds the phase length for (|P|, r): r <- min(r + 1, n/2), u <- 0.
class StagnationDetector {
 public:
  StagnationDetector(std::size_t n, std::uint64_t R) : n_(n), cache_(n, R) {}

  const SdState& state() const noexcept { return state_; }
  void set_state(const SdState& s) noexcept { state_ = s; }

  // pop_size is the population size after the acceptance step.
  void on_iteration(bool accepted, std::size_t pop_size) {
    ++state_.u;
    if (accepted) state_ = SdState{};
    if (state_.u > cache_.get(pop_size, state_.r)) {
      state_.r = std::min(state_.r + 1, max_rate_index(n_));
      state_.u = 0;
    }
  }

 private:
  std::size_t n_;
  ThresholdCache cache_;
  SdState state_;
};

}  // namespace momo
