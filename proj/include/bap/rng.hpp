#pragma once

#include <cstdint>

namespace bap {

// SplitMix64 (Steele, Lea, Flood 2014). Instance files record it as
// "splitmix64-v1"; any reimplementation of the three functions below
// reproduces generated instances bit for bit.
class SplitMix64 {
 public:
  static constexpr const char* kName = "splitmix64-v1";

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // lo + next() mod (hi - lo + 1). The modulo bias is part of the format.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

  // Top 53 bits scaled into [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace bap
