/// @file basins.hpp
/// @brief Exhaustive basin-of-attraction enumeration.

#pragma once

#include <cstdint>
#include <vector>

#include <lonet/landscape.hpp>

namespace lonet {

struct LocalOptimum {
    std::uint32_t id = 0;
    Rank representative = 0;
    double fitness = 0.0;
    std::uint64_t basinSize = 0;
    /// Basin members whose whole neighborhood lies in the same basin.
    std::uint64_t interiorCount = 0;
};

/// Total map from every rank to the id of the local optimum it climbs to.
///
/// Optimum ids follow ascending representative rank, so they do not depend
/// on discovery order or worker count.
struct BasinMap {
    Neighborhood neighborhood;
    std::vector<std::uint32_t> assignment;
    std::vector<LocalOptimum> optima;

    std::uint64_t spaceSize() const { return assignment.size(); }
    /// Id of the best optimum under `direction`; the lowest id wins ties.
    std::uint32_t globalOptimum(Direction direction) const;
};

struct EnumerationOptions {
    std::uint64_t budget = std::uint64_t{1} << 26;
    unsigned workers = 1;
};

/// @throws lonet::BudgetExceeded when the space exceeds the budget
BasinMap enumerateBasins(const Landscape& landscape, const FitnessTable& table,
                         const EnumerationOptions& options = {});
BasinMap enumerateBasins(const Landscape& landscape, const EnumerationOptions& options = {});

/// Best-improvement successor of every rank (itself for local optima).
std::vector<std::uint32_t> successors(const Landscape& landscape, const FitnessTable& table,
                                      unsigned workers);

struct InteriorFractions {
    std::vector<double> perOptimum;
    double average = 0.0;
};

InteriorFractions basinInteriorFraction(const BasinMap& basins);

} // namespace lonet
