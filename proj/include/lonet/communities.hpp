/// @file communities.hpp
/// @brief Greedy agglomerative modularity optimization on LONs.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <lonet/network.hpp>

namespace lonet {

struct CommunityPartition {
    /// Community of each node. Communities are numbered 0.. in order of
    /// their smallest member.
    std::vector<std::uint32_t> assignment;
    double modularity = 0.0;
    std::size_t communityCount = 0;
};

/// Modularity of `assignment` on the symmetrized network w'_ij = (w_ij + w_ji) / 2
/// with self-loops dropped. 0 when the projection has no edges.
/// @throws std::invalid_argument if the assignment size differs from the node count
double modularity(const LocalOptimaNetwork& net, const std::vector<std::uint32_t>& assignment);

/// Clauset-Newman-Moore style greedy merging on the symmetrized network.
///
/// Starting from singletons, connected communities are merged in order of
/// largest modularity gain until no connected pair remains; the partition
/// with the largest modularity seen along the way is returned. Equal gains
/// go to the lexicographically smallest community pair, and the merged
/// community keeps the smaller id.
CommunityPartition detectCommunities(const LocalOptimaNetwork& net);

/// `node,community` rows preceded by a header.
std::string partitionCsv(const CommunityPartition& partition);

} // namespace lonet
