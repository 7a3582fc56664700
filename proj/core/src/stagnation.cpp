#include "momo/stagnation.hpp"

#include <cmath>
#include <numbers>

#include "momo/error.hpp"

namespace momo {

double sd_threshold_real(std::size_t pop_size, std::size_t n, std::size_t r, std::uint64_t R) {
  if (pop_size == 0 || n == 0 || r == 0 || R == 0) {
    throw UsageError("sd_threshold requires positive pop_size, n, r and R");
  }
  const long double base = std::numbers::e_v<long double> * static_cast<long double>(n) /
                           static_cast<long double>(r);
  const long double value = 2.0L * static_cast<long double>(pop_size) *
                            std::pow(base, static_cast<long double>(r)) *
                            std::log(static_cast<long double>(n) * static_cast<long double>(R));
  return static_cast<double>(value);
}

std::uint64_t sd_threshold(std::size_t pop_size, std::size_t n, std::size_t r, std::uint64_t R) {
  const double value = std::ceil(sd_threshold_real(pop_size, n, r, R));
  if (!std::isfinite(value) || value >= static_cast<double>(kSaturatedCount)) return kSaturatedCount;
  return static_cast<std::uint64_t>(value);
}

}  // namespace momo
