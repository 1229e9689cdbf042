#pragma once

#include <cstdint>

namespace ising {

// Counter-based random stream: every draw is a pure function of
// (seed, stream, sweep, counter), so parallel sweeps are bit-reproducible
// regardless of how sites are assigned to workers.
namespace rng {

inline constexpr std::uint64_t kStreamPcaSite = 0;
inline constexpr std::uint64_t kStreamGlauberOrder = 1;
inline constexpr std::uint64_t kStreamGlauberFlip = 2;

// splitmix64 finalizer; bijective on 64-bit words.
inline std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t word(std::uint64_t seed, std::uint64_t stream,
                          std::uint64_t sweep, std::uint64_t counter) {
  return mix(mix(mix(mix(seed) ^ stream) ^ sweep) ^ counter);
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform(std::uint64_t seed, std::uint64_t stream,
                      std::uint64_t sweep, std::uint64_t counter) {
  return static_cast<double>(word(seed, stream, sweep, counter) >> 11) *
         0x1.0p-53;
}

}  // namespace rng
}  // namespace ising
