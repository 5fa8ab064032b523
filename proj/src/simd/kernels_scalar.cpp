#include <lonet/simd/kernels.hpp>

#include <limits>

namespace lonet::simd::detail {

void nkFitnessRangeScalar(const NkTablesView& nk, std::uint64_t first, std::span<double> out) {
    const std::size_t stride = std::size_t{1} << (nk.k + 1);
    for (std::size_t s = 0; s < out.size(); ++s) {
        const std::uint64_t bits = first + s;
        double sum = 0.0;
        for (int i = 0; i < nk.n; ++i) {
            std::uint64_t index = (bits >> i) & 1u;
            const std::int32_t* links = nk.links.data() + static_cast<std::size_t>(i * nk.k);
            for (int m = 0; m < nk.k; ++m) {
                index = (index << 1) | ((bits >> links[m]) & 1u);
            }
            sum += nk.tables[static_cast<std::size_t>(i) * stride + index];
        }
        out[s] = sum / static_cast<double>(nk.n);
    }
}

void bestFlipSuccessorsScalar(std::span<const double> scores, int n, std::uint64_t first,
                              std::span<std::uint32_t> out) {
    for (std::size_t s = 0; s < out.size(); ++s) {
        const std::uint64_t r = first + s;
        double best = -std::numeric_limits<double>::infinity();
        std::uint64_t bestNeighbor = r;
        for (int i = 0; i < n; ++i) {
            const std::uint64_t v = r ^ (std::uint64_t{1} << i);
            const double score = scores[v];
            if (score > best) {
                best = score;
                bestNeighbor = v;
            }
        }
        out[s] = static_cast<std::uint32_t>(best > scores[r] ? bestNeighbor : r);
    }
}

std::int64_t qapCostScalar(const QapMatricesView& qap, const std::int32_t* perm) {
    const int n = qap.n;
    std::int64_t cost = 0;
    for (int i = 0; i < n; ++i) {
        const std::int32_t* arow = qap.distances.data() + static_cast<std::size_t>(i * n);
        const std::int32_t* brow = qap.flows.data() + static_cast<std::size_t>(perm[i] * n);
        for (int j = 0; j < n; ++j) {
            cost += static_cast<std::int64_t>(arow[j]) * brow[perm[j]];
        }
    }
    return cost;
}

} // namespace lonet::simd::detail
