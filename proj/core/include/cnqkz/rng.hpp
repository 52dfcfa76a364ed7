#ifndef CNQKZ_RNG_HPP
#define CNQKZ_RNG_HPP

#include <cstdint>

namespace cnqkz {

/// splitmix64: the documented PRNG contract for all randomized sampling.
/// Identical seeds give identical streams on every platform.
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, bound).
  uint64_t below(uint64_t bound) { return next() % bound; }
};

}  // namespace cnqkz

#endif
