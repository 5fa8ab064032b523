/// @file network.hpp
/// @brief Local optima networks and their extraction from basin maps.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <lonet/basins.hpp>
#include <lonet/landscape.hpp>

namespace lonet {

/// How edge weights were defined.
struct EdgeModel {
    enum class Kind { basinTransition, escape };
    Kind kind = Kind::basinTransition;
    int distance = 0;       ///< escape radius D
    bool normalized = true; ///< escape weights divided by the ball size

    static EdgeModel basinTransition() { return {}; }
    static EdgeModel escape(int d, bool normalize = true) { return {Kind::escape, d, normalize}; }

    /// `basin-transition`, `escape-D2`, `escape-D1-raw`, ...
    std::string label() const;
    /// Inverse of label().
    /// @throws std::invalid_argument on an unknown label
    static EdgeModel parse(const std::string& label);

    friend bool operator==(const EdgeModel&, const EdgeModel&) = default;
};

struct LonNode {
    std::uint32_t id = 0;
    double fitness = 0.0;
    std::optional<std::uint64_t> basinSize;
    Rank representative = 0;

    friend bool operator==(const LonNode&, const LonNode&) = default;
};

struct LonEdge {
    std::uint32_t source = 0;
    std::uint32_t target = 0;
    double weight = 0.0;

    friend bool operator==(const LonEdge&, const LonEdge&) = default;
};

/// Directed weighted graph over local optima. Self-loops are kept; w_ij and
/// w_ji are stored independently; zero weights are never stored.
class LocalOptimaNetwork {
  public:
    LocalOptimaNetwork() = default;
    /// Nodes must carry ids 0..n-1 in order. Edges are sorted by (source,
    /// target); duplicate pairs or non-positive weights are rejected.
    /// @throws std::invalid_argument on malformed input
    LocalOptimaNetwork(std::vector<LonNode> nodes, std::vector<LonEdge> edges, EdgeModel model,
                       Direction direction, std::string provenance);

    std::size_t nodeCount() const { return nodes_.size(); }
    std::size_t edgeCount() const { return edges_.size(); }
    const std::vector<LonNode>& nodes() const { return nodes_; }
    const std::vector<LonEdge>& edges() const { return edges_; }
    std::span<const LonEdge> outEdges(std::uint32_t node) const;
    /// Weight of i -> j, 0 when absent.
    double weight(std::uint32_t i, std::uint32_t j) const;

    const EdgeModel& model() const { return model_; }
    Direction direction() const { return direction_; }
    const std::string& provenance() const { return provenance_; }

    /// Node with the best fitness under the direction; lowest id on ties.
    /// @throws std::logic_error on an empty network
    std::uint32_t globalOptimum() const;

    friend bool operator==(const LocalOptimaNetwork&, const LocalOptimaNetwork&) = default;

  private:
    std::vector<LonNode> nodes_;
    std::vector<LonEdge> edges_;
    std::vector<std::size_t> offsets_;
    EdgeModel model_;
    Direction direction_ = Direction::maximize;
    std::string provenance_;
};

struct ExtractionOptions {
    unsigned workers = 1;
};

/// w_ij = (1 / #b_i) * sum_{s in b_i} sum_{s' in V(s) ∩ b_j} 1/|V(s)|.
/// @throws std::invalid_argument if the basin map was not built for `landscape`
LocalOptimaNetwork basinTransitionLon(const Landscape& landscape, const BasinMap& basins,
                                      const ExtractionOptions& options = {});

/// w_ij = #{s : d(s, LO_i) <= D, h(s) = LO_j}, optionally divided by the
/// size of the D-ball around LO_i.
/// @throws std::invalid_argument if distance < 1 or on a mismatched basin map
LocalOptimaNetwork escapeLon(const Landscape& landscape, const BasinMap& basins, int distance,
                             bool normalize = true, const ExtractionOptions& options = {});

/// Ranks within `distance` moves of `center`, sorted ascending.
std::vector<Rank> movesBall(const RankNeighborhood& nb, Rank center, int distance);

} // namespace lonet
