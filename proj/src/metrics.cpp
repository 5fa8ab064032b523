#include <lonet/metrics.hpp>

#include <lonet/format.hpp>
#include <lonet/parallel.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>

namespace lonet::metrics {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void checkNode(const LocalOptimaNetwork& net, std::uint32_t node) {
    if (node >= net.nodeCount()) {
        throw std::invalid_argument("unknown node " + std::to_string(node));
    }
}

/// Sorted undirected neighbor lists without self-loops.
std::vector<std::vector<std::uint32_t>> undirectedProjection(const LocalOptimaNetwork& net) {
    std::vector<std::vector<std::uint32_t>> adj(net.nodeCount());
    for (const auto& e : net.edges()) {
        if (e.source != e.target) {
            adj[e.source].push_back(e.target);
            adj[e.target].push_back(e.source);
        }
    }
    for (auto& list : adj) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return adj;
}

double localClustering(const std::vector<std::vector<std::uint32_t>>& adj, std::uint32_t node,
                       std::vector<std::uint8_t>& mark) {
    const auto& nbrs = adj[node];
    const std::size_t k = nbrs.size();
    if (k < 2) {
        return 0.0;
    }
    for (const auto j : nbrs) {
        mark[j] = 1;
    }
    std::size_t links = 0;
    for (const auto j : nbrs) {
        for (const auto h : adj[j]) {
            links += mark[h];
        }
    }
    for (const auto j : nbrs) {
        mark[j] = 0;
    }
    // Each link between neighbors was seen from both ends.
    return static_cast<double>(links) / static_cast<double>(k * (k - 1));
}

/// Reverse adjacency (in-edges) without self-loops.
struct InEdges {
    std::vector<std::size_t> offsets;
    std::vector<std::uint32_t> sources;
    std::vector<double> weights;
};

InEdges reverse(const LocalOptimaNetwork& net) {
    InEdges in;
    in.offsets.assign(net.nodeCount() + 1, 0);
    for (const auto& e : net.edges()) {
        if (e.source != e.target) {
            ++in.offsets[e.target + 1];
        }
    }
    for (std::size_t i = 0; i < net.nodeCount(); ++i) {
        in.offsets[i + 1] += in.offsets[i];
    }
    in.sources.resize(in.offsets.back());
    in.weights.resize(in.offsets.back());
    std::vector<std::size_t> fill(in.offsets.begin(), in.offsets.end() - 1);
    for (const auto& e : net.edges()) {
        if (e.source != e.target) {
            const std::size_t slot = fill[e.target]++;
            in.sources[slot] = e.source;
            in.weights[slot] = e.weight;
        }
    }
    return in;
}

double localWeightedClustering(const LocalOptimaNetwork& net, std::uint32_t i,
                               std::vector<double>& outWeight, std::vector<std::uint8_t>& inMark,
                               const InEdges& in) {
    std::size_t k = 0;
    double s = 0.0;
    for (const auto& e : net.outEdges(i)) {
        if (e.target != i) {
            ++k;
            s += e.weight;
            outWeight[e.target] = e.weight;
        }
    }
    double sum = 0.0;
    if (k >= 2) {
        for (std::size_t m = in.offsets[i]; m < in.offsets[i + 1]; ++m) {
            inMark[in.sources[m]] = 1;
        }
        for (const auto& ij : net.outEdges(i)) {
            const std::uint32_t j = ij.target;
            if (j == i) {
                continue;
            }
            for (const auto& jh : net.outEdges(j)) {
                const std::uint32_t h = jh.target;
                if (h == j || h == i || !inMark[h]) {
                    continue;
                }
                sum += (ij.weight + outWeight[h]) / 2.0;
            }
        }
        for (std::size_t m = in.offsets[i]; m < in.offsets[i + 1]; ++m) {
            inMark[in.sources[m]] = 0;
        }
    }
    for (const auto& e : net.outEdges(i)) {
        outWeight[e.target] = 0.0;
    }
    if (k < 2 || !(s > 0.0)) {
        return 0.0;
    }
    return sum / (s * static_cast<double>(k - 1));
}

struct QueueEntry {
    double distance;
    std::uint32_t node;
    bool operator>(const QueueEntry& o) const {
        return distance != o.distance ? distance > o.distance : node > o.node;
    }
};

/// Dijkstra over an adjacency given as a callable visiting (neighbor, weight).
template <class Adjacent>
void dijkstra(std::size_t n, std::uint32_t source, Adjacent&& adjacent, double* dist) {
    std::fill(dist, dist + n, kInf);
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> queue;
    dist[source] = 0.0;
    queue.push({0.0, source});
    while (!queue.empty()) {
        const auto [d, u] = queue.top();
        queue.pop();
        if (d > dist[u]) {
            continue;
        }
        adjacent(u, [&](std::uint32_t v, double w) {
            const double candidate = d + 1.0 / w;
            if (candidate < dist[v]) {
                dist[v] = candidate;
                queue.push({candidate, v});
            }
        });
    }
}

std::vector<WeightBin> logHistogram(const std::vector<double>& values, int binsPerDecade) {
    std::vector<WeightBin> bins;
    if (values.empty()) {
        return bins;
    }
    const double b = static_cast<double>(binsPerDecade);
    const auto edge = [&](long long index) { return std::pow(10.0, static_cast<double>(index) / b); };
    std::map<long long, std::size_t> counts;
    for (const double w : values) {
        auto index = static_cast<long long>(std::floor(std::log10(w) * b));
        while (edge(index + 1) <= w) {
            ++index;
        }
        while (edge(index) > w) {
            --index;
        }
        ++counts[index];
    }
    const auto total = static_cast<double>(values.size());
    const long long first = counts.begin()->first;
    const long long last = counts.rbegin()->first;
    for (long long index = first; index <= last; ++index) {
        const auto it = counts.find(index);
        const std::size_t c = it == counts.end() ? 0 : it->second;
        bins.push_back({edge(index), edge(index + 1), static_cast<double>(c) / total, 0.0});
    }
    double tail = 0.0;
    for (auto it = bins.rbegin(); it != bins.rend(); ++it) {
        tail += it->probability;
        it->complementaryCumulative = tail;
    }
    return bins;
}

std::vector<DegreeBin> degreeHistogram(const std::vector<std::size_t>& degrees) {
    std::vector<DegreeBin> bins;
    if (degrees.empty()) {
        return bins;
    }
    const std::size_t maxDegree = *std::max_element(degrees.begin(), degrees.end());
    std::vector<std::size_t> counts(maxDegree + 1, 0);
    for (const auto k : degrees) {
        ++counts[k];
    }
    const auto total = static_cast<double>(degrees.size());
    for (std::size_t k = 0; k <= maxDegree; ++k) {
        if (counts[k] > 0) {
            bins.push_back({k, static_cast<double>(counts[k]) / total, 0.0});
        }
    }
    double tail = 0.0;
    for (auto it = bins.rbegin(); it != bins.rend(); ++it) {
        tail += it->probability;
        it->complementaryCumulative = tail;
    }
    return bins;
}

std::string optionalText(const std::optional<double>& v) {
    return v ? shortestDecimal(*v) : std::string("NA");
}

} // namespace

std::size_t outDegree(const LocalOptimaNetwork& net, std::uint32_t node) {
    checkNode(net, node);
    std::size_t k = 0;
    for (const auto& e : net.outEdges(node)) {
        k += e.target != node ? 1 : 0;
    }
    return k;
}

double strength(const LocalOptimaNetwork& net, std::uint32_t node) {
    checkNode(net, node);
    double s = 0.0;
    for (const auto& e : net.outEdges(node)) {
        if (e.target != node) {
            s += e.weight;
        }
    }
    return s;
}

double clusteringCoefficient(const LocalOptimaNetwork& net, std::uint32_t node) {
    checkNode(net, node);
    const auto adj = undirectedProjection(net);
    std::vector<std::uint8_t> mark(net.nodeCount(), 0);
    return localClustering(adj, node, mark);
}

std::vector<double> clusteringCoefficients(const LocalOptimaNetwork& net) {
    const auto adj = undirectedProjection(net);
    std::vector<std::uint8_t> mark(net.nodeCount(), 0);
    std::vector<double> out(net.nodeCount());
    for (std::uint32_t i = 0; i < net.nodeCount(); ++i) {
        out[i] = localClustering(adj, i, mark);
    }
    return out;
}

double weightedClustering(const LocalOptimaNetwork& net, std::uint32_t node) {
    checkNode(net, node);
    std::vector<double> outWeight(net.nodeCount(), 0.0);
    std::vector<std::uint8_t> inMark(net.nodeCount(), 0);
    return localWeightedClustering(net, node, outWeight, inMark, reverse(net));
}

std::vector<double> weightedClusterings(const LocalOptimaNetwork& net) {
    std::vector<double> outWeight(net.nodeCount(), 0.0);
    std::vector<std::uint8_t> inMark(net.nodeCount(), 0);
    const InEdges in = reverse(net);
    std::vector<double> out(net.nodeCount());
    for (std::uint32_t i = 0; i < net.nodeCount(); ++i) {
        out[i] = localWeightedClustering(net, i, outWeight, inMark, in);
    }
    return out;
}

std::optional<double> disparity(const LocalOptimaNetwork& net, std::uint32_t node) {
    const double s = strength(net, node);
    if (!(s > 0.0)) {
        return std::nullopt;
    }
    double y = 0.0;
    for (const auto& e : net.outEdges(node)) {
        if (e.target != node) {
            const double share = e.weight / s;
            y += share * share;
        }
    }
    return y;
}

DistanceTable shortestPaths(const LocalOptimaNetwork& net, unsigned workers) {
    DistanceTable table;
    table.n = net.nodeCount();
    table.distance.assign(table.n * table.n, kInf);
    const auto forward = [&](std::uint32_t u, auto&& visit) {
        for (const auto& e : net.outEdges(u)) {
            if (e.target != u) {
                visit(e.target, e.weight);
            }
        }
    };
    parallelFor(table.n, workers, 16, [&](std::size_t begin, std::size_t end) {
        for (std::size_t s = begin; s < end; ++s) {
            dijkstra(table.n, static_cast<std::uint32_t>(s), forward,
                     table.distance.data() + s * table.n);
        }
    });
    return table;
}

std::vector<double> distancesTo(const LocalOptimaNetwork& net, std::uint32_t target) {
    checkNode(net, target);
    const InEdges in = reverse(net);
    const auto backward = [&](std::uint32_t u, auto&& visit) {
        for (std::size_t m = in.offsets[u]; m < in.offsets[u + 1]; ++m) {
            visit(in.sources[m], in.weights[m]);
        }
    };
    std::vector<double> dist(net.nodeCount());
    dijkstra(net.nodeCount(), target, backward, dist.data());
    return dist;
}

PathLength averagePathLength(const DistanceTable& paths) {
    PathLength out;
    double sum = 0.0;
    for (std::size_t i = 0; i < paths.n; ++i) {
        for (std::size_t j = 0; j < paths.n; ++j) {
            if (i == j) {
                continue;
            }
            const double d = paths.at(i, j);
            if (std::isfinite(d)) {
                sum += d;
                ++out.finitePairs;
            } else {
                ++out.unreachablePairs;
            }
        }
    }
    if (out.finitePairs > 0) {
        out.mean = sum / static_cast<double>(out.finitePairs);
    }
    return out;
}

namespace {

GlobalPath summarizeToGlobal(const LocalOptimaNetwork& net, std::uint32_t global,
                             const std::function<double(std::uint32_t)>& distance) {
    GlobalPath out;
    if (net.nodeCount() == 1) {
        out.mean = 0.0;
        out.singleNode = true;
        return out;
    }
    double sum = 0.0;
    for (std::uint32_t i = 0; i < net.nodeCount(); ++i) {
        if (i == global) {
            continue;
        }
        const double d = distance(i);
        if (std::isfinite(d)) {
            sum += d;
            ++out.reachable;
        } else {
            ++out.unreachable;
        }
    }
    if (out.reachable > 0) {
        out.mean = sum / static_cast<double>(out.reachable);
    }
    return out;
}

} // namespace

GlobalPath pathToGlobalOptimum(const LocalOptimaNetwork& net, const DistanceTable& paths) {
    const std::uint32_t global = net.globalOptimum();
    return summarizeToGlobal(net, global, [&](std::uint32_t i) { return paths.at(i, global); });
}

GlobalPath pathToGlobalOptimum(const LocalOptimaNetwork& net) {
    const std::uint32_t global = net.globalOptimum();
    const auto dist = distancesTo(net, global);
    return summarizeToGlobal(net, global, [&](std::uint32_t i) { return dist[i]; });
}

Distributions degreeAndWeightDistributions(const LocalOptimaNetwork& net, int binsPerDecade) {
    if (binsPerDecade < 1) {
        throw std::invalid_argument("binsPerDecade must be positive");
    }
    const std::size_t n = net.nodeCount();
    std::vector<std::size_t> in(n, 0);
    std::vector<std::size_t> out(n, 0);
    std::vector<double> inStrength(n, 0.0);
    std::vector<double> outWeights;
    for (const auto& e : net.edges()) {
        if (e.source == e.target) {
            continue;
        }
        ++out[e.source];
        ++in[e.target];
        inStrength[e.target] += e.weight;
        outWeights.push_back(e.weight);
    }
    std::vector<double> inShares;
    inShares.reserve(outWeights.size());
    for (const auto& e : net.edges()) {
        if (e.source != e.target) {
            inShares.push_back(e.weight / inStrength[e.target]);
        }
    }
    Distributions d;
    d.binsPerDecade = binsPerDecade;
    d.inDegree = degreeHistogram(in);
    d.outDegree = degreeHistogram(out);
    d.outWeight = logHistogram(outWeights, binsPerDecade);
    d.inWeight = logHistogram(inShares, binsPerDecade);
    return d;
}

MetricsReport buildReport(const LocalOptimaNetwork& net, const ReportOptions& options) {
    MetricsReport r;
    r.label = net.provenance();
    r.edgeModel = net.model().label();
    const std::size_t n = net.nodeCount();
    r.nodeCount = n;
    r.edgeCount = net.edgeCount();
    if (n > 0) {
        r.edgeDensity = static_cast<double>(r.edgeCount) / (static_cast<double>(n) * static_cast<double>(n));
        r.edgeDensityPercent = r.edgeDensity * 100.0;
    }

    double degreeSum = 0.0;
    double strengthSum = 0.0;
    double selfSum = 0.0;
    double offSum = 0.0;
    std::size_t offCount = 0;
    for (const auto& e : net.edges()) {
        if (e.source == e.target) {
            selfSum += e.weight;
        } else {
            degreeSum += 1.0;
            strengthSum += e.weight;
            offSum += e.weight;
            ++offCount;
        }
    }
    if (n > 0) {
        r.meanOutDegree = degreeSum / static_cast<double>(n);
        r.meanStrength = strengthSum / static_cast<double>(n);
        r.selfLoopMeanWeight = selfSum / static_cast<double>(n);
        r.globalOptimumFitness = net.nodes()[net.globalOptimum()].fitness;
    }
    r.offDiagonalMeanWeight = offCount > 0 ? offSum / static_cast<double>(offCount) : 0.0;

    const auto clustering = clusteringCoefficients(net);
    const auto weighted = weightedClusterings(net);
    double cSum = 0.0;
    double cwSum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        cSum += clustering[i];
        cwSum += weighted[i];
    }
    if (n > 0) {
        r.meanClustering = cSum / static_cast<double>(n);
        r.meanWeightedClustering = cwSum / static_cast<double>(n);
    }

    r.disparity.resize(n);
    double ySum = 0.0;
    std::size_t yCount = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
        r.disparity[i] = disparity(net, i);
        if (r.disparity[i]) {
            ySum += *r.disparity[i];
            ++yCount;
        }
    }
    if (yCount > 0) {
        r.meanDisparity = ySum / static_cast<double>(yCount);
    }

    if (n > 0 && n <= options.pathLengthNodeLimit) {
        const auto paths = shortestPaths(net, options.workers);
        const auto average = averagePathLength(paths);
        r.meanPathLength = average.mean;
        r.unreachablePairs = average.unreachablePairs;
        r.pathToGlobal = pathToGlobalOptimum(net, paths);
    } else {
        r.pathLengthSkipped = n > 0;
        if (n > 0) {
            r.pathToGlobal = pathToGlobalOptimum(net);
        }
    }

    r.distributions = degreeAndWeightDistributions(net, options.binsPerDecade);
    r.selfLoopPolicy = {
        {"edge_count", "includes self-loops"},
        {"edge_density", "includes self-loops (denominator N_v^2)"},
        {"out_degree", "excludes self-loops"},
        {"clustering", "excludes self-loops (undirected projection)"},
        {"weighted_clustering", "excludes self-loops"},
        {"strength", "excludes self-loops"},
        {"disparity", "excludes self-loops"},
        {"shortest_paths", "excludes self-loops"},
        {"self_loop_mean_weight", "self-loops only, mean over all nodes"},
        {"off_diagonal_mean_weight", "excludes self-loops, mean over edges"},
        {"distributions", "exclude self-loops"},
    };
    return r;
}

std::string reportCsvHeader() {
    return "label,edge_model,nodes,edges,edge_density,edge_density_percent,mean_out_degree,"
           "mean_clustering,mean_weighted_clustering,mean_disparity,mean_strength,"
           "mean_path_length,unreachable_pairs,path_to_global,path_to_global_reachable,"
           "self_loop_mean_weight,off_diagonal_mean_weight,global_optimum_fitness\n";
}

std::string reportCsvRow(const MetricsReport& r) {
    std::string label = r.label;
    std::replace(label.begin(), label.end(), ',', ';');
    std::string row = label + "," + r.edgeModel + "," + std::to_string(r.nodeCount) + "," +
                      std::to_string(r.edgeCount) + "," + shortestDecimal(r.edgeDensity) + "," +
                      shortestDecimal(r.edgeDensityPercent) + "," +
                      shortestDecimal(r.meanOutDegree) + "," + shortestDecimal(r.meanClustering) +
                      "," + shortestDecimal(r.meanWeightedClustering) + "," +
                      optionalText(r.meanDisparity) + "," + shortestDecimal(r.meanStrength) + "," +
                      optionalText(r.meanPathLength) + "," +
                      (r.pathLengthSkipped ? std::string("NA") : std::to_string(r.unreachablePairs)) +
                      "," + optionalText(r.pathToGlobal.mean) + "," +
                      std::to_string(r.pathToGlobal.reachable) + "," +
                      shortestDecimal(r.selfLoopMeanWeight) + "," +
                      shortestDecimal(r.offDiagonalMeanWeight) + "," +
                      shortestDecimal(r.globalOptimumFitness) + "\n";
    return row;
}

std::string reportText(const MetricsReport& r) {
    std::string out;
    const auto line = [&](const std::string& key, const std::string& value) {
        out += key + ": " + value + "\n";
    };
    line("network", r.label);
    line("edge model", r.edgeModel);
    line("nodes", std::to_string(r.nodeCount));
    line("edges", std::to_string(r.edgeCount));
    line("edge density", shortestDecimal(r.edgeDensity) + " (" +
                             shortestDecimal(r.edgeDensityPercent) + "%)");
    line("mean out-degree", shortestDecimal(r.meanOutDegree));
    line("mean clustering", shortestDecimal(r.meanClustering));
    line("mean weighted clustering", shortestDecimal(r.meanWeightedClustering));
    line("mean disparity", optionalText(r.meanDisparity));
    line("mean strength", shortestDecimal(r.meanStrength));
    if (r.pathLengthSkipped) {
        line("mean path length", "NA (skipped: node limit)");
    } else {
        line("mean path length", optionalText(r.meanPathLength) + " (" +
                                     std::to_string(r.unreachablePairs) +
                                     " unreachable pairs excluded)");
    }
    line("path to global optimum",
         optionalText(r.pathToGlobal.mean) + " (" + std::to_string(r.pathToGlobal.reachable) +
             " reachable, " + std::to_string(r.pathToGlobal.unreachable) + " unreachable" +
             (r.pathToGlobal.singleNode ? ", single node: 0 by convention" : "") + ")");
    line("self-loop mean weight", shortestDecimal(r.selfLoopMeanWeight));
    line("off-diagonal mean weight", shortestDecimal(r.offDiagonalMeanWeight));
    line("global optimum fitness", shortestDecimal(r.globalOptimumFitness));
    out += "self-loop policy:\n";
    for (const auto& [metric, policy] : r.selfLoopPolicy) {
        out += "  " + metric + ": " + policy + "\n";
    }
    return out;
}

std::string degreeHistogramCsv(const std::vector<DegreeBin>& bins, bool cumulative) {
    std::string out = cumulative ? "degree,ccdf\n" : "degree,probability\n";
    for (const auto& b : bins) {
        out += std::to_string(b.degree) + "," +
               shortestDecimal(cumulative ? b.complementaryCumulative : b.probability) + "\n";
    }
    return out;
}

std::string weightHistogramCsv(const std::vector<WeightBin>& bins, bool cumulative) {
    std::string out = cumulative ? "weight,ccdf\n" : "weight,probability\n";
    for (const auto& b : bins) {
        out += shortestDecimal(b.lower) + "," +
               shortestDecimal(cumulative ? b.complementaryCumulative : b.probability) + "\n";
    }
    return out;
}

} // namespace lonet::metrics
