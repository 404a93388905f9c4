// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace remsamp {

// Stateless 64-bit mixer (splitmix64). Pure integer arithmetic, so the
// same inputs give the same outputs on every platform and compiler.
inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  return splitmix64(a ^ splitmix64(b + 0x632BE59BD9B4E019ull));
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return mix_seed(mix_seed(a, b), c);
}

// Map a 64-bit word to [0, 1) using the top 53 bits.
inline double unit_double(std::uint64_t x) {
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

// Sub-stream tags. Decisions that must not shift when an unrelated sample
// parameter changes draw from independently derived streams.
inline constexpr std::uint64_t kStreamInclusion = 0x0001;
inline constexpr std::uint64_t kStreamControls = 0x0002;
inline constexpr std::uint64_t kStreamSimulate = 0x0003;

inline constexpr std::string_view kRngAlgorithm = "splitmix64+mt19937_64";

// Deterministic generator with platform-stable draws. std::mt19937_64 output
// is fully specified by the standard; the distribution adaptors are not, so
// unit doubles and bounded integers are produced by hand.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next() { return engine_(); }

  double unit() { return unit_double(next()); }

  // Unbiased draw from [0, n) by multiply-shift rejection.
  std::uint64_t bounded(std::uint64_t n) {
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * n;
    auto low = static_cast<std::uint64_t>(m);
    if (low < n) {
      const std::uint64_t threshold = -n % n;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(next()) * n;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace remsamp
