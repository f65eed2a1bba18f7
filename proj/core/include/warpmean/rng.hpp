#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace warpmean {

// Distribution helpers built directly on the engine's bit stream, so that
// seeded output is identical across standard-library implementations
// (std::uniform_real_distribution and friends are not portable).

inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_real(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

inline double normal_real(std::mt19937_64& rng, double mean, double sigma) {
  // Box-Muller; draws two uniforms per call, no cached spare.
  double u1 = uniform_unit(rng);
  double u2 = uniform_unit(rng);
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  const double r = std::sqrt(-2.0 * std::log(u1));
  constexpr double two_pi = 6.283185307179586476925286766559;
  return mean + sigma * r * std::cos(two_pi * u2);
}

inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

}  // namespace warpmean
