#pragma once

#include <cstdint>

namespace wzt {

/// Deterministic splitmix64 generator. The standard library distributions are
/// implementation-defined, so every draw used in reports goes through this
/// class to keep fixed-seed runs byte-identical across platforms.
class RandomGen {
 public:
  explicit RandomGen(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi], inclusive. Requires lo <= hi.
  int uniform_int(int lo, int hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    // Rejection sampling keeps the distribution exactly uniform.
    std::uint64_t limit = (~0ull / span) * span;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return lo + static_cast<int>(x % span);
  }

  bool coin() { return (next() & 1) != 0; }

  /// Geometric length with the given mean, clamped to [0, cap].
  int geometric_length(int mean, int cap) {
    if (mean <= 0) return 0;
    int len = 0;
    while (len < cap && uniform_int(0, mean) != 0) ++len;
    return len;
  }

 private:
  std::uint64_t state_;
};

}  // namespace wzt
