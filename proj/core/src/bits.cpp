#include "momo/bits.hpp"

#include "momo/error.hpp"

namespace momo {
namespace {

std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

}  // namespace

BitString::BitString(std::size_t n) : n_(n), words_(word_count(n), 0) {
  if (n == 0) throw UsageError("bitstring length must be positive");
}

BitString BitString::from_string(std::string_view bits) {
  BitString x(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      x.set(i, true);
    } else if (bits[i] != '0') {
      throw UsageError("bitstring literal may only contain '0' and '1'");
    }
  }
  return x;
}

BitString BitString::from_mask(std::size_t n, std::uint64_t mask) {
  if (n > 64) throw UsageError("from_mask supports at most 64 bits");
  BitString x(n);
  x.words_[0] = mask;
  x.clear_tail();
  return x;
}

BitString BitString::all_ones(std::size_t n) {
  BitString x(n);
  for (auto& w : x.words_) w = ~std::uint64_t{0};
  x.clear_tail();
  return x;
}

std::string BitString::to_string() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i) {
    if (test(i)) s[i] = '1';
  }
  return s;
}

void BitString::clear_tail() noexcept {
  const std::size_t used = n_ & 63;
  if (used != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << used) - 1;
}

std::size_t hamming(const BitString& x, const BitString& y) {
  if (x.size() != y.size()) throw UsageError("hamming: bitstring lengths differ");
  const auto xw = x.words();
  const auto yw = y.words();
  std::size_t d = 0;
  for (std::size_t i = 0; i < xw.size(); ++i) d += static_cast<std::size_t>(std::popcount(xw[i] ^ yw[i]));
  return d;
}

BitString complement(const BitString& x) {
  BitString y = x;
  for (auto& w : y.words_) w = ~w;
  y.clear_tail();
  return y;
}

BitString uniform_random(std::size_t n, Rng& rng) {
  BitString x(n);
  for (auto& w : x.words_) w = rng();
  x.clear_tail();
  return x;
}

std::optional<std::size_t> ones_prefix_length(const BitString& x) noexcept {
  const std::size_t i = ones_count(x);
  const auto words = x.words();
  for (std::size_t w = 0; w < words.size(); ++w) {
    const std::size_t lo = w * 64;
    std::uint64_t expected = 0;
    if (i >= lo + 64) {
      expected = ~std::uint64_t{0};
    } else if (i > lo) {
      expected = (std::uint64_t{1} << (i - lo)) - 1;
    }
    if (words[w] != expected) return std::nullopt;
  }
  return i;
}

}  // namespace momo
