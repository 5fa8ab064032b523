#include <lonet/basins.hpp>

#include <lonet/parallel.hpp>
#include <lonet/simd/kernels.hpp>

#include <limits>
#include <stdexcept>

namespace lonet {

namespace {

constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();
constexpr std::size_t kGrain = std::size_t{1} << 14;

} // namespace

std::uint32_t BasinMap::globalOptimum(Direction direction) const {
    if (optima.empty()) {
        throw std::logic_error("basin map has no optima");
    }
    std::uint32_t best = 0;
    for (const auto& lo : optima) {
        const double a = direction == Direction::maximize ? lo.fitness : -lo.fitness;
        const double b = direction == Direction::maximize ? optima[best].fitness
                                                          : -optima[best].fitness;
        if (a > b) {
            best = lo.id;
        }
    }
    return best;
}

std::vector<std::uint32_t> successors(const Landscape& landscape, const FitnessTable& table,
                                      unsigned workers) {
    const std::uint64_t size = landscape.searchSpaceSize();
    if (table.score.size() != size) {
        throw std::invalid_argument("fitness table does not cover the search space");
    }
    if (size > std::numeric_limits<std::uint32_t>::max()) {
        throw BudgetExceeded(size, std::numeric_limits<std::uint32_t>::max());
    }
    std::vector<std::uint32_t> next(size);
    const auto& nb = landscape.neighborhood();
    if (nb.kind == MoveKind::bitFlip) {
        parallelFor(size, workers, kGrain, [&](std::size_t begin, std::size_t end) {
            simd::bestFlipSuccessors(table.score, nb.length, begin,
                                     std::span<std::uint32_t>(next).subspan(begin, end - begin));
        });
        return next;
    }
    const RankNeighborhood ranks(nb);
    parallelFor(size, workers, kGrain, [&](std::size_t begin, std::size_t end) {
        std::vector<Rank> buffer(static_cast<std::size_t>(ranks.size()));
        for (std::size_t r = begin; r < end; ++r) {
            ranks.neighborRanks(r, buffer);
            double best = -std::numeric_limits<double>::infinity();
            Rank bestRank = r;
            for (const Rank v : buffer) {
                if (table.score[v] > best) {
                    best = table.score[v];
                    bestRank = v;
                }
            }
            next[r] = static_cast<std::uint32_t>(best > table.score[r] ? bestRank : r);
        }
    });
    return next;
}

BasinMap enumerateBasins(const Landscape& landscape, const FitnessTable& table,
                         const EnumerationOptions& options) {
    const std::uint64_t size = landscape.searchSpaceSize();
    if (size > options.budget) {
        throw BudgetExceeded(size, options.budget);
    }
    const std::vector<std::uint32_t> next = successors(landscape, table, options.workers);

    BasinMap basins;
    basins.neighborhood = landscape.neighborhood();
    basins.assignment.assign(size, kUnassigned);
    for (std::uint64_t r = 0; r < size; ++r) {
        if (next[r] == r) {
            const auto id = static_cast<std::uint32_t>(basins.optima.size());
            basins.assignment[r] = id;
            basins.optima.push_back({id, r, table.fitness[r], 0, 0});
        }
    }

    // Resolve every climb, assigning each visited rank on the way back.
    std::vector<std::uint32_t> trail;
    for (std::uint64_t r = 0; r < size; ++r) {
        std::uint64_t x = r;
        while (basins.assignment[x] == kUnassigned) {
            trail.push_back(static_cast<std::uint32_t>(x));
            x = next[x];
        }
        const std::uint32_t id = basins.assignment[x];
        for (const std::uint32_t t : trail) {
            basins.assignment[t] = id;
        }
        trail.clear();
    }

    std::vector<std::uint8_t> interior(size, 0);
    const RankNeighborhood ranks(landscape.neighborhood());
    parallelFor(size, options.workers, kGrain, [&](std::size_t begin, std::size_t end) {
        std::vector<Rank> buffer(static_cast<std::size_t>(ranks.size()));
        for (std::size_t r = begin; r < end; ++r) {
            ranks.neighborRanks(r, buffer);
            const std::uint32_t own = basins.assignment[r];
            bool inside = true;
            for (const Rank v : buffer) {
                if (basins.assignment[v] != own) {
                    inside = false;
                    break;
                }
            }
            interior[r] = inside ? 1 : 0;
        }
    });
    for (std::uint64_t r = 0; r < size; ++r) {
        auto& lo = basins.optima[basins.assignment[r]];
        ++lo.basinSize;
        lo.interiorCount += interior[r];
    }
    return basins;
}

BasinMap enumerateBasins(const Landscape& landscape, const EnumerationOptions& options) {
    const FitnessTable table = tabulate(landscape, {options.budget, options.workers});
    return enumerateBasins(landscape, table, options);
}

InteriorFractions basinInteriorFraction(const BasinMap& basins) {
    InteriorFractions out;
    out.perOptimum.reserve(basins.optima.size());
    double sum = 0.0;
    for (const auto& lo : basins.optima) {
        const double f = lo.basinSize == 0 ? 0.0
                                           : static_cast<double>(lo.interiorCount) /
                                                 static_cast<double>(lo.basinSize);
        out.perOptimum.push_back(f);
        sum += f;
    }
    out.average = out.perOptimum.empty() ? 0.0 : sum / static_cast<double>(out.perOptimum.size());
    return out;
}

} // namespace lonet
