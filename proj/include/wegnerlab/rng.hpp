#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace wegner::rng {

/* Counter-based randomness.  Every variate is a pure function of a 64-bit
 * key; keys are derived by folding words into the parent key through the
 * splitmix64 finalizer.  This makes all sampling reproducible bit-for-bit
 * across runs and thread counts.
 *
 * Derivation scheme (stable contract, documented for reproducibility):
 *   mix64(x)       = splitmix64 finalizer of (x + 0x9E3779B97F4A7C15)
 *   derive(k, w)   = mix64(k + w)
 *   normal key for coordinate j of sample i under stream s:
 *                    derive(derive(derive(seed, s), i), j)
 *   standard_normal(key) = Box-Muller cosine branch on the two uniforms
 *                    uniform01(derive(key, 0x51)) and uniform01(derive(key, 0xA3))
 */

constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive(std::uint64_t key, std::uint64_t word) { return mix64(key + word); }

// strictly inside (0,1)
constexpr double uniform01(std::uint64_t bits) {
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

inline double standard_normal(std::uint64_t key) {
  const double u1 = uniform01(derive(key, 0x51ull));
  const double u2 = uniform01(derive(key, 0xA3ull));
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

// fixed stream tags so subsystems never share keys
inline constexpr std::uint64_t kPotentialStream = 0x706f7431ull;
inline constexpr std::uint64_t kBackgroundStream = 0x62616b31ull;
inline constexpr std::uint64_t kAveragingStream = 0x61766731ull;
inline constexpr std::uint64_t kRegularityStream = 0x72656731ull;

}  // namespace wegner::rng
