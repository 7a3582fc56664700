#include "momo/rng.hpp"

namespace momo {

std::string StreamLabel::canonical() const {
  return "algo=" + algorithm + ";problem=" + problem + ";n=" + std::to_string(n) +
         ";k=" + std::to_string(k) + ";run=" + std::to_string(run_index);
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t derive_stream_seed(std::uint64_t master_seed, const StreamLabel& label) noexcept {
  return splitmix64(splitmix64(master_seed) ^ fnv1a64(label.canonical()));
}

}  // namespace momo
