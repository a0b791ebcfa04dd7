#pragma once

#include <cmath>
#include <cstdint>

namespace qtricycle {

/// SplitMix64 (Steele, Lea & Flood 2014). Chosen because its output is
/// fully specified by the algorithm, so seeded runs reproduce bit-for-bit
/// across platforms and releases, unlike std::uniform_real_distribution.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Log-uniform on [lo, hi]; degenerate ranges (lo == hi) return lo.
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

 private:
  std::uint64_t state_;
};

/// Stream-splitting rule: substream i of a seeded run starts from the
/// SplitMix64 finalizer applied to seed + (i+1)*golden_gamma. The finalizer
/// is a bijective avalanching mix, so consecutive substreams share no
/// structure. Serial and parallel sweeps therefore draw identical samples.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(substream_seed(seed, index));
}

}  // namespace qtricycle
