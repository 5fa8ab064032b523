/// @file metrics.hpp
/// @brief Complex-network statistics over local optima networks.
///
/// Self-loop policy: degrees, clustering, strength, disparity and shortest
/// paths ignore self-loops. Self-loop weights are summarized on their own in
/// MetricsReport::selfLoopMeanWeight. Edge counts and densities include them,
/// since the density denominator N_v^2 counts every ordered pair.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <lonet/network.hpp>

namespace lonet::metrics {

/// Out-degree without the self-loop.
std::size_t outDegree(const LocalOptimaNetwork& net, std::uint32_t node);
/// Sum of out-weights without the self-loop.
double strength(const LocalOptimaNetwork& net, std::uint32_t node);

/// Undirected, unweighted clustering of one node: 2e / (k(k-1)), 0 when k < 2.
/// The projection links i and j when w_ij > 0 or w_ji > 0.
/// @throws std::invalid_argument for an unknown node
double clusteringCoefficient(const LocalOptimaNetwork& net, std::uint32_t node);
std::vector<double> clusteringCoefficients(const LocalOptimaNetwork& net);

/// Weighted clustering over the directed out-adjacency:
/// c(i) = 1/(s_i (k_i - 1)) * sum_{j,h} (w_ij + w_ih)/2 * a_ij a_jh a_hi,
/// with a_nm = [w_nm > 0]. Defined as 0 when k_i < 2.
/// @throws std::invalid_argument for an unknown node
double weightedClustering(const LocalOptimaNetwork& net, std::uint32_t node);
std::vector<double> weightedClusterings(const LocalOptimaNetwork& net);

/// Y2(i) = sum_{j != i} (w_ij / s_i)^2; absent for nodes without out-edges.
/// @throws std::invalid_argument for an unknown node
std::optional<double> disparity(const LocalOptimaNetwork& net, std::uint32_t node);

/// All-pairs shortest distances with edge length 1 / w_ij. Unreachable
/// pairs hold +infinity.
struct DistanceTable {
    std::size_t n = 0;
    std::vector<double> distance;

    double at(std::size_t i, std::size_t j) const { return distance[i * n + j]; }
};

DistanceTable shortestPaths(const LocalOptimaNetwork& net, unsigned workers = 1);
/// Distance from every node to `target`, by Dijkstra on the reversed graph.
std::vector<double> distancesTo(const LocalOptimaNetwork& net, std::uint32_t target);

struct PathLength {
    std::optional<double> mean;
    std::size_t finitePairs = 0;
    std::size_t unreachablePairs = 0;
};

/// Mean over ordered pairs i != j with a finite distance.
PathLength averagePathLength(const DistanceTable& paths);

struct GlobalPath {
    std::optional<double> mean;
    std::size_t reachable = 0;
    std::size_t unreachable = 0;
    /// Set when the network has a single node and the mean is 0 by convention.
    bool singleNode = false;
};

/// Mean distance from every other node to the global optimum, finite entries only.
GlobalPath pathToGlobalOptimum(const LocalOptimaNetwork& net, const DistanceTable& paths);
GlobalPath pathToGlobalOptimum(const LocalOptimaNetwork& net);

struct DegreeBin {
    std::size_t degree = 0;
    double probability = 0.0;
    double complementaryCumulative = 0.0; ///< P(K >= degree)
};

/// Logarithmic weight bin [lower, upper), upper = lower * 10^(1/binsPerDecade).
struct WeightBin {
    double lower = 0.0;
    double upper = 0.0;
    double probability = 0.0;
    double complementaryCumulative = 0.0; ///< P(W >= lower)
};

struct Distributions {
    std::vector<DegreeBin> inDegree;
    std::vector<DegreeBin> outDegree;
    /// Off-diagonal edge weights w_ij.
    std::vector<WeightBin> outWeight;
    /// Off-diagonal weights as a share of the target's in-strength, w_ij / sum_k w_kj.
    std::vector<WeightBin> inWeight;
    int binsPerDecade = 10;
};

Distributions degreeAndWeightDistributions(const LocalOptimaNetwork& net,
                                           int binsPerDecade = 10);

struct MetricsReport {
    std::string label;
    std::string edgeModel;
    std::size_t nodeCount = 0;
    std::size_t edgeCount = 0;
    double edgeDensity = 0.0;        ///< N_e / N_v^2
    double edgeDensityPercent = 0.0; ///< N_e / N_v^2 * 100
    double meanOutDegree = 0.0;
    double meanClustering = 0.0;
    double meanWeightedClustering = 0.0;
    std::optional<double> meanDisparity;
    std::vector<std::optional<double>> disparity;
    double meanStrength = 0.0;
    std::optional<double> meanPathLength;
    std::size_t unreachablePairs = 0;
    /// Set when the network exceeded ReportOptions::pathLengthNodeLimit.
    bool pathLengthSkipped = false;
    GlobalPath pathToGlobal;
    double selfLoopMeanWeight = 0.0;     ///< mean of w_ii over all nodes
    double offDiagonalMeanWeight = 0.0;  ///< mean of w_ij over edges with j != i
    double globalOptimumFitness = 0.0;
    Distributions distributions;
    std::vector<std::pair<std::string, std::string>> selfLoopPolicy;
};

struct ReportOptions {
    /// All-pairs path lengths are skipped above this many nodes.
    std::size_t pathLengthNodeLimit = 4000;
    int binsPerDecade = 10;
    unsigned workers = 1;
};

MetricsReport buildReport(const LocalOptimaNetwork& net, const ReportOptions& options = {});

std::string reportCsvHeader();
std::string reportCsvRow(const MetricsReport& report);
std::string reportText(const MetricsReport& report);
/// Two-column CSV: degree (or lower bin edge) and probability, or the
/// complementary cumulative probability when `cumulative` is set.
std::string degreeHistogramCsv(const std::vector<DegreeBin>& bins, bool cumulative = false);
std::string weightHistogramCsv(const std::vector<WeightBin>& bins, bool cumulative = false);

} // namespace lonet::metrics
