#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "momo/rng.hpp"

namespace momo {

// Fixed-length binary search point, packed into 64-bit words.
//
// Position i lives in bit (i % 64) of word (i / 64). Bits past the logical
// length are always zero, so word-wise popcount and comparisons are exact.
// A pattern written 1^i 0^(n-i) has ones in positions [0, i).
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t n);

  static BitString from_string(std::string_view bits);
  static BitString from_mask(std::size_t n, std::uint64_t mask);
  static BitString all_ones(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  void set(std::size_t i, bool value) noexcept {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= bit;
    } else {
      words_[i >> 6] &= ~bit;
    }
  }

  std::string to_string() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  friend BitString complement(const BitString& x);
  friend BitString uniform_random(std::size_t n, Rng& rng);

  void clear_tail() noexcept;

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

inline std::size_t ones_count(const BitString& x) noexcept {
  std::size_t count = 0;
  for (const std::uint64_t w : x.words()) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

inline std::size_t zeros_count(const BitString& x) noexcept { return x.size() - ones_count(x); }

// Throws UsageError on length mismatch.
std::size_t hamming(const BitString& x, const BitString& y);

BitString complement(const BitString& x);

// Each bit independently uniform. Throws UsageError for n = 0.
BitString uniform_random(std::size_t n, Rng& rng);

// Returns i when x = 1^i 0^(n-i), otherwise nullopt.
std::optional<std::size_t> ones_prefix_length(const BitString& x) noexcept;

}  // namespace momo
