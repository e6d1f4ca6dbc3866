#pragma once

#include <cstdint>

namespace dmwc {

/// Counter-based generator: draw i (0-based) of stream `seed` is
/// splitmix64_mix(seed + (i + 1) * 0x9E3779B97F4A7C15). No hidden state
/// beyond the counter, so any language can reproduce a stream exactly.
class CounterRng {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next_u64() { return mix(seed_ + (++counter_) * kGamma); }

  /// Uniform in [0, bound) by multiply-high; bound must be positive.
  std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
  }

  /// Uniform in [0, 1) with 53 bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool next_coin() { return (next_u64() >> 63) != 0; }

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

/// Independent sub-stream seed, e.g. for the second sampling round.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return CounterRng::mix(seed ^ CounterRng::mix(stream + CounterRng::kGamma));
}

}  // namespace dmwc
