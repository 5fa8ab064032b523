#include <lonet/network.hpp>

#include <lonet/parallel.hpp>

#include <algorithm>
#include <stdexcept>

namespace lonet {

std::string EdgeModel::label() const {
    if (kind == Kind::basinTransition) {
        return "basin-transition";
    }
    return "escape-D" + std::to_string(distance) + (normalized ? "" : "-raw");
}

EdgeModel EdgeModel::parse(const std::string& label) {
    if (label == "basin-transition" || label == "basin") {
        return basinTransition();
    }
    const std::string prefix = "escape-D";
    if (label.rfind(prefix, 0) == 0) {
        std::string rest = label.substr(prefix.size());
        bool normalize = true;
        const std::string raw = "-raw";
        if (rest.size() > raw.size() && rest.compare(rest.size() - raw.size(), raw.size(), raw) == 0) {
            normalize = false;
            rest.resize(rest.size() - raw.size());
        }
        if (!rest.empty() && std::all_of(rest.begin(), rest.end(), [](char c) {
                return c >= '0' && c <= '9';
            })) {
            const int d = std::stoi(rest);
            if (d >= 1) {
                return escape(d, normalize);
            }
        }
    }
    throw std::invalid_argument("unknown edge model '" + label + "'");
}

LocalOptimaNetwork::LocalOptimaNetwork(std::vector<LonNode> nodes, std::vector<LonEdge> edges,
                                       EdgeModel model, Direction direction,
                                       std::string provenance)
    : nodes_(std::move(nodes)), edges_(std::move(edges)), model_(model), direction_(direction),
      provenance_(std::move(provenance)) {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].id != i) {
            throw std::invalid_argument("network nodes must carry ids 0..n-1 in order");
        }
    }
    std::sort(edges_.begin(), edges_.end(), [](const LonEdge& a, const LonEdge& b) {
        return a.source != b.source ? a.source < b.source : a.target < b.target;
    });
    offsets_.assign(nodes_.size() + 1, 0);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const auto& edge = edges_[e];
        if (edge.source >= nodes_.size() || edge.target >= nodes_.size()) {
            throw std::invalid_argument("edge endpoint outside the node set");
        }
        if (!(edge.weight > 0.0)) {
            throw std::invalid_argument("edge weights must be positive");
        }
        if (e > 0 && edges_[e - 1].source == edge.source && edges_[e - 1].target == edge.target) {
            throw std::invalid_argument("duplicate edge " + std::to_string(edge.source) + " -> " +
                                        std::to_string(edge.target));
        }
        ++offsets_[edge.source + 1];
    }
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        offsets_[i + 1] += offsets_[i];
    }
}

std::span<const LonEdge> LocalOptimaNetwork::outEdges(std::uint32_t node) const {
    return std::span<const LonEdge>(edges_).subspan(offsets_[node],
                                                    offsets_[node + 1] - offsets_[node]);
}

double LocalOptimaNetwork::weight(std::uint32_t i, std::uint32_t j) const {
    const auto out = outEdges(i);
    const auto it = std::lower_bound(out.begin(), out.end(), j,
                                     [](const LonEdge& e, std::uint32_t t) { return e.target < t; });
    return it != out.end() && it->target == j ? it->weight : 0.0;
}

std::uint32_t LocalOptimaNetwork::globalOptimum() const {
    if (nodes_.empty()) {
        throw std::logic_error("empty network has no global optimum");
    }
    std::uint32_t best = 0;
    for (const auto& node : nodes_) {
        const bool better = direction_ == Direction::maximize
                                ? node.fitness > nodes_[best].fitness
                                : node.fitness < nodes_[best].fitness;
        if (better) {
            best = node.id;
        }
    }
    return best;
}

namespace {

void checkBasins(const Landscape& landscape, const BasinMap& basins) {
    if (!(basins.neighborhood == landscape.neighborhood()) ||
        basins.spaceSize() != landscape.searchSpaceSize()) {
        throw std::invalid_argument("basin map was built for a different landscape");
    }
}

std::vector<LonNode> nodesOf(const BasinMap& basins) {
    std::vector<LonNode> nodes;
    nodes.reserve(basins.optima.size());
    for (const auto& lo : basins.optima) {
        nodes.push_back({lo.id, lo.fitness, lo.basinSize, lo.representative});
    }
    return nodes;
}

std::vector<LonEdge> concatenate(std::vector<std::vector<LonEdge>>& rows) {
    std::size_t total = 0;
    for (const auto& row : rows) {
        total += row.size();
    }
    std::vector<LonEdge> edges;
    edges.reserve(total);
    for (auto& row : rows) {
        edges.insert(edges.end(), row.begin(), row.end());
        std::vector<LonEdge>().swap(row);
    }
    return edges;
}

/// Sparse accumulator over target optima for one source row.
class RowCounter {
  public:
    explicit RowCounter(std::size_t width) : counts_(width, 0) {}

    void add(std::uint32_t target) {
        if (counts_[target]++ == 0) {
            touched_.push_back(target);
        }
    }

    template <class Weight>
    void flush(std::uint32_t source, std::vector<LonEdge>& row, Weight&& weight) {
        std::sort(touched_.begin(), touched_.end());
        row.reserve(touched_.size());
        for (const std::uint32_t t : touched_) {
            row.push_back({source, t, weight(counts_[t])});
            counts_[t] = 0;
        }
        touched_.clear();
    }

  private:
    std::vector<std::uint64_t> counts_;
    std::vector<std::uint32_t> touched_;
};

} // namespace

LocalOptimaNetwork basinTransitionLon(const Landscape& landscape, const BasinMap& basins,
                                      const ExtractionOptions& options) {
    checkBasins(landscape, basins);
    const std::size_t optimaCount = basins.optima.size();

    // Group ranks by basin, ascending within each basin.
    std::vector<std::uint64_t> start(optimaCount + 1, 0);
    for (const std::uint32_t id : basins.assignment) {
        ++start[id + 1];
    }
    for (std::size_t i = 0; i < optimaCount; ++i) {
        start[i + 1] += start[i];
    }
    std::vector<std::uint32_t> members(basins.assignment.size());
    {
        std::vector<std::uint64_t> fill(start.begin(), start.end() - 1);
        for (std::uint64_t r = 0; r < basins.assignment.size(); ++r) {
            members[fill[basins.assignment[r]]++] = static_cast<std::uint32_t>(r);
        }
    }

    const RankNeighborhood nb(landscape.neighborhood());
    const auto moves = static_cast<double>(nb.size());
    std::vector<std::vector<LonEdge>> rows(optimaCount);
    parallelFor(optimaCount, options.workers, 64, [&](std::size_t begin, std::size_t end) {
        RowCounter counter(optimaCount);
        std::vector<Rank> buffer(static_cast<std::size_t>(nb.size()));
        for (std::size_t i = begin; i < end; ++i) {
            for (std::uint64_t m = start[i]; m < start[i + 1]; ++m) {
                nb.neighborRanks(members[m], buffer);
                for (const Rank v : buffer) {
                    counter.add(basins.assignment[v]);
                }
            }
            const double denominator = moves * static_cast<double>(start[i + 1] - start[i]);
            counter.flush(static_cast<std::uint32_t>(i), rows[i], [&](std::uint64_t count) {
                return static_cast<double>(count) / denominator;
            });
        }
    });
    return LocalOptimaNetwork(nodesOf(basins), concatenate(rows), EdgeModel::basinTransition(),
                              landscape.direction(), landscape.describe());
}

std::vector<Rank> movesBall(const RankNeighborhood& nb, Rank center, int distance) {
    std::vector<Rank> ball{center};
    std::vector<Rank> frontier{center};
    std::vector<Rank> buffer(static_cast<std::size_t>(nb.size()));
    std::vector<Rank> candidates;
    std::vector<Rank> fresh;
    for (int depth = 0; depth < distance && !frontier.empty(); ++depth) {
        candidates.clear();
        for (const Rank r : frontier) {
            nb.neighborRanks(r, buffer);
            candidates.insert(candidates.end(), buffer.begin(), buffer.end());
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        fresh.clear();
        std::set_difference(candidates.begin(), candidates.end(), ball.begin(), ball.end(),
                            std::back_inserter(fresh));
        const std::size_t mid = ball.size();
        ball.insert(ball.end(), fresh.begin(), fresh.end());
        std::inplace_merge(ball.begin(), ball.begin() + static_cast<std::ptrdiff_t>(mid),
                           ball.end());
        frontier.swap(fresh);
    }
    return ball;
}

LocalOptimaNetwork escapeLon(const Landscape& landscape, const BasinMap& basins, int distance,
                             bool normalize, const ExtractionOptions& options) {
    if (distance < 1) {
        throw std::invalid_argument("escape distance D must be at least 1");
    }
    checkBasins(landscape, basins);
    const std::size_t optimaCount = basins.optima.size();
    const RankNeighborhood nb(landscape.neighborhood());
    std::vector<std::vector<LonEdge>> rows(optimaCount);
    parallelFor(optimaCount, options.workers, 64, [&](std::size_t begin, std::size_t end) {
        RowCounter counter(optimaCount);
        for (std::size_t i = begin; i < end; ++i) {
            const auto ball = movesBall(nb, basins.optima[i].representative, distance);
            for (const Rank s : ball) {
                counter.add(basins.assignment[s]);
            }
            const auto ballSize = static_cast<double>(ball.size());
            counter.flush(static_cast<std::uint32_t>(i), rows[i], [&](std::uint64_t count) {
                return normalize ? static_cast<double>(count) / ballSize
                                 : static_cast<double>(count);
            });
        }
    });
    return LocalOptimaNetwork(nodesOf(basins), concatenate(rows),
                              EdgeModel::escape(distance, normalize), landscape.direction(),
                              landscape.describe());
}

} // namespace lonet
