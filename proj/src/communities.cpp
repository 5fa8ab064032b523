#include <lonet/communities.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace lonet {

namespace {

/// Symmetrized adjacency: adj[i][j] = (w_ij + w_ji) / 2 for i != j.
std::vector<std::map<std::uint32_t, double>> symmetrize(const LocalOptimaNetwork& net) {
    std::vector<std::map<std::uint32_t, double>> adj(net.nodeCount());
    for (const auto& e : net.edges()) {
        if (e.source != e.target) {
            adj[e.source][e.target] += e.weight / 2.0;
            adj[e.target][e.source] += e.weight / 2.0;
        }
    }
    return adj;
}

std::vector<std::uint32_t> relabel(const std::vector<std::uint32_t>& raw, std::size_t& count) {
    std::map<std::uint32_t, std::uint32_t> names;
    std::vector<std::uint32_t> out(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const auto [it, inserted] =
            names.emplace(raw[i], static_cast<std::uint32_t>(names.size()));
        out[i] = it->second;
    }
    count = names.size();
    return out;
}

} // namespace

double modularity(const LocalOptimaNetwork& net, const std::vector<std::uint32_t>& assignment) {
    if (assignment.size() != net.nodeCount()) {
        throw std::invalid_argument("assignment size does not match the node count");
    }
    const auto adj = symmetrize(net);
    double twoM = 0.0;
    std::map<std::uint32_t, double> inside;
    std::map<std::uint32_t, double> degree;
    for (std::size_t i = 0; i < adj.size(); ++i) {
        for (const auto& [j, w] : adj[i]) {
            twoM += w;
            degree[assignment[i]] += w;
            if (assignment[i] == assignment[j]) {
                inside[assignment[i]] += w;
            }
        }
    }
    if (!(twoM > 0.0)) {
        return 0.0;
    }
    double q = 0.0;
    for (const auto& [c, d] : degree) {
        const double a = d / twoM;
        q += inside[c] / twoM - a * a;
    }
    return q;
}

CommunityPartition detectCommunities(const LocalOptimaNetwork& net) {
    const std::size_t n = net.nodeCount();
    CommunityPartition result;
    std::vector<std::uint32_t> owner(n);
    for (std::size_t i = 0; i < n; ++i) {
        owner[i] = static_cast<std::uint32_t>(i);
    }
    auto adj = symmetrize(net);
    double twoM = 0.0;
    std::vector<double> a(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [j, w] : adj[i]) {
            a[i] += w;
            twoM += w;
        }
    }
    if (!(twoM > 0.0)) {
        result.assignment = relabel(owner, result.communityCount);
        result.modularity = 0.0;
        return result;
    }
    // e[i][j] holds the fraction of edge ends between communities i and j.
    double q = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        a[i] /= twoM;
        for (auto& [j, w] : adj[i]) {
            w /= twoM;
        }
        q -= a[i] * a[i];
    }
    std::vector<std::vector<std::uint32_t>> members(n);
    for (std::size_t i = 0; i < n; ++i) {
        members[i] = {static_cast<std::uint32_t>(i)};
    }

    double bestQ = q;
    std::vector<std::uint32_t> best = owner;
    for (;;) {
        bool found = false;
        double bestGain = 0.0;
        std::uint32_t bi = 0;
        std::uint32_t bj = 0;
        for (std::uint32_t i = 0; i < n; ++i) {
            for (const auto& [j, e] : adj[i]) {
                if (j <= i) {
                    continue;
                }
                const double gain = 2.0 * (e - a[i] * a[j]);
                const double tolerance = 1e-12 * std::max(1.0, std::abs(gain));
                if (!found || gain > bestGain + tolerance) {
                    found = true;
                    bestGain = gain;
                    bi = i;
                    bj = j;
                }
            }
        }
        if (!found) {
            break;
        }
        // Merge bj into bi.
        auto moved = std::move(adj[bj]);
        adj[bj].clear();
        for (const auto& [k, e] : moved) {
            adj[k].erase(bj);
            if (k == bi) {
                continue;
            }
            adj[bi][k] += e;
            adj[k][bi] += e;
        }
        a[bi] += a[bj];
        a[bj] = 0.0;
        for (const auto v : members[bj]) {
            owner[v] = bi;
        }
        members[bi].insert(members[bi].end(), members[bj].begin(), members[bj].end());
        members[bj].clear();
        q += bestGain;
        if (q > bestQ + 1e-12) {
            bestQ = q;
            best = owner;
        }
    }
    result.assignment = relabel(best, result.communityCount);
    result.modularity = modularity(net, result.assignment);
    return result;
}

std::string partitionCsv(const CommunityPartition& partition) {
    std::string out = "node,community\n";
    for (std::size_t i = 0; i < partition.assignment.size(); ++i) {
        out += std::to_string(i) + "," + std::to_string(partition.assignment[i]) + "\n";
    }
    return out;
}

} // namespace lonet
