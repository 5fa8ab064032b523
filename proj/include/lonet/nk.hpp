/// @file nk.hpp
/// @brief Kauffman NK landscapes under the random neighborhood model.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <lonet/solution.hpp>

namespace lonet::nk {

/// An NK instance: each locus i reads itself plus K distinct other loci
/// (`links`) and looks its contribution up in a 2^(K+1)-entry table.
///
/// Table index packing: the locus' own bit is the most significant bit,
/// followed by the linked loci in `links` order.
struct NkInstance {
    int n = 0;
    int k = 0;
    std::uint64_t seed = 0;
    std::vector<std::vector<int>> links;
    std::vector<std::vector<double>> tables;

    std::size_t tableSize() const { return std::size_t{1} << (k + 1); }

    friend bool operator==(const NkInstance&, const NkInstance&) = default;
};

/// Generates an instance fully determined by (n, k, seed).
///
/// Row i draws from the stream `deriveStreamSeed(seed, i)`: first the K links
/// by a partial Fisher-Yates shuffle of the other N-1 loci, then the
/// 2^(K+1) contributions uniform on [0, 1).
/// @throws std::invalid_argument unless 1 <= n <= 63 and 0 <= k <= n-1
NkInstance generateNk(int n, int k, std::uint64_t seed);

/// @throws std::invalid_argument if the structure violates the instance invariants
void validate(const NkInstance& inst);

/// Mean contribution over all loci.
/// @throws std::invalid_argument if `s` is not a bit string of length n
double nkFitness(const NkInstance& inst, const Solution& s);

/// Fitness of the bit string whose base-2 value is `bits` (locus 0 = LSB).
double nkFitnessOfRank(const NkInstance& inst, Rank bits);

/// Text form: `NK <N> <K> <seed>`, N link rows, then N table rows, values in
/// shortest round-trip decimal. `parseNk(toText(x)) == x` holds bit-exactly.
std::string toText(const NkInstance& inst);
/// @throws lonet::ParseError on malformed input
NkInstance parseNk(std::string_view text);

} // namespace lonet::nk
