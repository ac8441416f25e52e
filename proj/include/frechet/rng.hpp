#ifndef FRECHET_RNG_HPP
#define FRECHET_RNG_HPP

#include <cstdint>
#include <random>

namespace frechet::rng {

// Draw helpers on top of mt19937_64. The standard distributions are
// implementation-defined, so everything that must reproduce bit-for-bit
// from a seed goes through these instead.

/// Uniform double in [0, 1), 53 bits of entropy.
inline double u01(std::mt19937_64 &g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64 &g, double lo, double hi) {
  return lo + (hi - lo) * u01(g);
}

/// Uniform integer in [0, n); n must be positive.
inline std::uint64_t below(std::mt19937_64 &g, std::uint64_t n) {
  return g() % n;
}

inline std::size_t uniform_index(std::mt19937_64 &g, std::size_t lo,
                                 std::size_t hi_inclusive) {
  return lo + static_cast<std::size_t>(below(g, hi_inclusive - lo + 1));
}

} // namespace frechet::rng

#endif
