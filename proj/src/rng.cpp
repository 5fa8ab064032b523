#include <lonet/rng.hpp>

#include <stdexcept>

namespace lonet {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t deriveStreamSeed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t state = seed + stream * 0x9E3779B97F4A7C15ULL;
    splitmix64(state);
    return splitmix64(state);
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("Rng::below: bound must be positive");
    }
    // Rejection keeps the draw unbiased: discard the low partial block.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t x = next();
        if (x >= threshold) {
            return x % bound;
        }
    }
}

} // namespace lonet
