#pragma once

#include <cstdint>

namespace gramvol {

// Counter-mode SplitMix64 (constants from Steele, Lea & Flood's SplitMix;
// finalizer mixing constants due to Stafford/Vigna). Stateless: the value
// at a counter depends on (seed, counter) only, so any partition of the
// counter range across workers reproduces the same stream.
struct CounterRng {
  std::uint64_t seed = 0;

  std::uint64_t at(std::uint64_t counter) const {
    std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform01(std::uint64_t counter) const {
    return static_cast<double>(at(counter) >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t counter, std::uint64_t bound) const {
    return at(counter) % bound;
  }
};

}  // namespace gramvol
