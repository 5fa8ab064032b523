#include <lonet/solution.hpp>

#include <bit>
#include <stdexcept>
#include <string>

namespace lonet {

Solution Solution::bits(std::vector<int> values) {
    if (values.size() > static_cast<std::size_t>(kMaxBinaryLength)) {
        throw std::invalid_argument("bit string longer than " + std::to_string(kMaxBinaryLength));
    }
    for (int v : values) {
        if (v != 0 && v != 1) {
            throw std::invalid_argument("bit string element outside {0,1}");
        }
    }
    return Solution(Representation::binary, std::move(values));
}

Solution Solution::permutation(std::vector<int> values) {
    const int n = static_cast<int>(values.size());
    if (n > kMaxPermutationLength) {
        throw std::invalid_argument("permutation longer than " + std::to_string(kMaxPermutationLength));
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : values) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("not a permutation of 0..N-1");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
    return Solution(Representation::permutation, std::move(values));
}

int Neighborhood::size() const {
    return kind == MoveKind::bitFlip ? length : length * (length - 1) / 2;
}

std::uint64_t Neighborhood::searchSpaceSize() const {
    if (kind == MoveKind::bitFlip) {
        if (length < 0 || length > kMaxBinaryLength) {
            throw std::invalid_argument("bit-flip length out of range");
        }
        return std::uint64_t{1} << length;
    }
    return factorial(length);
}

std::uint64_t factorial(int n) {
    if (n < 0 || n > kMaxPermutationLength) {
        throw std::invalid_argument("factorial argument out of range");
    }
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= static_cast<std::uint64_t>(i);
    }
    return f;
}

Rank rank(const Solution& s) {
    const int n = s.size();
    if (s.kind() == Representation::binary) {
        Rank r = 0;
        for (int i = 0; i < n; ++i) {
            r |= static_cast<Rank>(s[i]) << i;
        }
        return r;
    }
    Rank r = 0;
    std::uint32_t remaining = n == 32 ? ~0u : (1u << n) - 1u;
    for (int k = 0; k < n; ++k) {
        const int v = s[k];
        remaining &= ~(1u << v);
        const auto digit = static_cast<Rank>(std::popcount(remaining & ((1u << v) - 1u)));
        r = r * static_cast<Rank>(n - k) + digit;
    }
    return r;
}

Solution unrank(Rank r, Representation kind, int length) {
    if (kind == Representation::binary) {
        if (length < 64 && (r >> length) != 0) {
            throw std::invalid_argument("rank outside the binary search space");
        }
        std::vector<int> bits(static_cast<std::size_t>(length));
        for (int i = 0; i < length; ++i) {
            bits[static_cast<std::size_t>(i)] = static_cast<int>((r >> i) & 1u);
        }
        return Solution::bits(std::move(bits));
    }
    if (r >= factorial(length)) {
        throw std::invalid_argument("rank outside the permutation search space");
    }
    std::vector<int> digits(static_cast<std::size_t>(length));
    for (int k = length - 1; k >= 0; --k) {
        const auto base = static_cast<Rank>(length - k);
        digits[static_cast<std::size_t>(k)] = static_cast<int>(r % base);
        r /= base;
    }
    std::vector<int> available(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) {
        available[static_cast<std::size_t>(i)] = i;
    }
    std::vector<int> perm(static_cast<std::size_t>(length));
    for (int k = 0; k < length; ++k) {
        const auto pick = available.begin() + digits[static_cast<std::size_t>(k)];
        perm[static_cast<std::size_t>(k)] = *pick;
        available.erase(pick);
    }
    return Solution::permutation(std::move(perm));
}

namespace {

void checkCompatible(const Solution& s, const Neighborhood& nb) {
    if (s.kind() != nb.representation()) {
        throw std::invalid_argument("solution representation does not match the neighborhood");
    }
    if (s.size() != nb.length) {
        throw std::invalid_argument("solution length " + std::to_string(s.size()) +
                                    " does not match neighborhood length " +
                                    std::to_string(nb.length));
    }
}

} // namespace

std::vector<Solution> neighbors(const Solution& s, const Neighborhood& nb) {
    checkCompatible(s, nb);
    std::vector<Solution> out;
    out.reserve(static_cast<std::size_t>(nb.size()));
    std::vector<int> values = s.values();
    if (nb.kind == MoveKind::bitFlip) {
        for (auto& bit : values) {
            bit ^= 1;
            out.push_back(Solution::bits(values));
            bit ^= 1;
        }
        return out;
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            std::swap(values[i], values[j]);
            out.push_back(Solution::permutation(values));
            std::swap(values[i], values[j]);
        }
    }
    return out;
}

double transitionProbability(const Solution& from, const Solution& to, const Neighborhood& nb) {
    checkCompatible(from, nb);
    checkCompatible(to, nb);
    int differing = 0;
    for (int i = 0; i < from.size(); ++i) {
        differing += from[i] != to[i] ? 1 : 0;
    }
    // One flip changes one locus; one exchange changes exactly two positions.
    const int expected = nb.kind == MoveKind::bitFlip ? 1 : 2;
    return differing == expected ? 1.0 / static_cast<double>(nb.size()) : 0.0;
}

RankNeighborhood::RankNeighborhood(const Neighborhood& nb)
    : nb_(nb), spaceSize_(nb.searchSpaceSize()) {
    if (nb.kind == MoveKind::pairwiseExchange) {
        weights_.resize(static_cast<std::size_t>(nb.length));
        for (int k = 0; k < nb.length; ++k) {
            weights_[static_cast<std::size_t>(k)] = factorial(nb.length - 1 - k);
        }
    }
}

void RankNeighborhood::neighborRanks(Rank r, std::span<Rank> out) const {
    const int n = nb_.length;
    if (nb_.kind == MoveKind::bitFlip) {
        for (int i = 0; i < n; ++i) {
            out[static_cast<std::size_t>(i)] = r ^ (Rank{1} << i);
        }
        return;
    }

    // Decode the Lehmer digits, then the permutation and its suffix masks.
    int digits[kMaxPermutationLength];
    int perm[kMaxPermutationLength];
    std::uint32_t after[kMaxPermutationLength];
    Rank rest = r;
    for (int k = n - 1; k >= 0; --k) {
        const auto base = static_cast<Rank>(n - k);
        digits[k] = static_cast<int>(rest % base);
        rest /= base;
    }
    std::uint32_t available = (1u << n) - 1u;
    for (int k = 0; k < n; ++k) {
        // The digit-th smallest available value.
        std::uint32_t mask = available;
        for (int skip = digits[k]; skip > 0; --skip) {
            mask &= mask - 1u;
        }
        perm[k] = std::countr_zero(mask);
        available &= ~(1u << perm[k]);
        after[k] = available;
    }

    std::size_t slot = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int a = perm[i];
            const int b = perm[j];
            std::int64_t delta = 0;
            const std::uint32_t afterI = (after[i] & ~(1u << b)) | (1u << a);
            const int newDigitI = std::popcount(afterI & ((1u << b) - 1u));
            delta += static_cast<std::int64_t>(newDigitI - digits[i]) *
                     static_cast<std::int64_t>(weights_[static_cast<std::size_t>(i)]);
            for (int k = i + 1; k < j; ++k) {
                const int c = perm[k];
                const int change = (a < c ? 1 : 0) - (b < c ? 1 : 0);
                delta += static_cast<std::int64_t>(change) *
                         static_cast<std::int64_t>(weights_[static_cast<std::size_t>(k)]);
            }
            const int newDigitJ = std::popcount(after[j] & ((1u << a) - 1u));
            delta += static_cast<std::int64_t>(newDigitJ - digits[j]) *
                     static_cast<std::int64_t>(weights_[static_cast<std::size_t>(j)]);
            out[slot++] = static_cast<Rank>(static_cast<std::int64_t>(r) + delta);
        }
    }
}

} // namespace lonet
