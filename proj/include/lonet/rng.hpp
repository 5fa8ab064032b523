#pragma once

#include <cstdint>
#include <random>

namespace lonet {

/// One step of SplitMix64. Advances `state` and returns the mixed output.
std::uint64_t splitmix64(std::uint64_t& state);

/// Seed of the independent stream number `stream` derived from a base seed.
///
/// Stream derivation rule: the base seed is offset by `stream` times the
/// 64-bit golden-ratio constant and passed through two SplitMix64 rounds.
/// Every randomized component of the toolkit seeds its generators through
/// this function, so a (seed, stream) pair pins a sequence exactly.
std::uint64_t deriveStreamSeed(std::uint64_t seed, std::uint64_t stream);

/// 64-bit Mersenne Twister with distribution helpers whose output does not
/// depend on the standard library implementation.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform double in [0, 1) built from the top 53 bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound). `bound` must be positive.
    std::uint64_t below(std::uint64_t bound);

  private:
    std::mt19937_64 engine_;
};

} // namespace lonet
