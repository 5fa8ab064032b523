/// @file experiments.hpp
/// @brief Per-instance pipelines and the ensemble tables built from them.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <lonet/basins.hpp>
#include <lonet/communities.hpp>
#include <lonet/ils.hpp>
#include <lonet/landscape.hpp>
#include <lonet/metrics.hpp>
#include <lonet/network.hpp>
#include <lonet/stats.hpp>

namespace lonet::experiments {

struct StudyOptions {
    bool basinTransition = true;
    std::vector<int> escapeDistances;
    bool escapeNormalized = true;
    bool communities = false;
    metrics::ReportOptions report;
    unsigned workers = 1;
};

/// Everything measured on one landscape.
struct InstanceStudy {
    std::string label;
    std::uint64_t seed = 0;
    std::size_t optimaCount = 0;
    double globalOptimumFitness = 0.0;
    /// Basin size of the global optimum divided by |S|.
    double globalBasinFraction = 0.0;
    /// Spearman correlation between optimum quality and basin size; absent
    /// when either is constant.
    std::optional<double> fitnessBasinSpearman;
    double interiorFraction = 0.0;
    std::optional<metrics::MetricsReport> basinTransition;
    std::map<int, metrics::MetricsReport> escape;
    /// Greedy-modularity partition of the basin-transition network.
    std::optional<CommunityPartition> communities;
};

InstanceStudy studyLandscape(const Landscape& landscape, const StudyOptions& options);

struct Table2Config {
    int n = 18;
    std::vector<int> ks{2, 4, 6, 8, 10, 12, 14, 16, 17};
    std::size_t instances = 30;
    std::uint64_t baseSeed = 1;
    unsigned workers = 1;
    std::size_t pathLengthNodeLimit = 4000;
};

struct Table2Row {
    int k = 0;
    std::vector<InstanceStudy> studies;
    stats::EnsembleSummary optima;
    stats::EnsembleSummary densityBasin;
    stats::EnsembleSummary densityEscape1;
    stats::EnsembleSummary densityEscape2;
    stats::EnsembleSummary pathBasin;
    stats::EnsembleSummary pathEscape1;
    stats::EnsembleSummary pathEscape2;
};

/// Instance i of every K uses seed baseSeed + i.
std::vector<Table2Row> reproduceTable2(const Table2Config& config);
std::string table2Text(const std::vector<Table2Row>& rows, int n);
std::string table2Csv(const std::vector<Table2Row>& rows);

struct Table3Config {
    std::vector<int> sizes{5, 6, 7, 8, 9, 10};
    std::size_t instances = 30;
    std::uint64_t baseSeed = 1;
    unsigned workers = 1;
};

struct Table3Cell {
    qap::InstanceClass instanceClass = qap::InstanceClass::uniform;
    int size = 0;
    std::vector<InstanceStudy> studies;
    stats::EnsembleSummary optima;
    stats::EnsembleSummary density;
    stats::EnsembleSummary weightedClustering;
    stats::EnsembleSummary disparity;
};

std::vector<Table3Cell> reproduceTable3(const Table3Config& config);
std::string table3Text(const std::vector<Table3Cell>& cells);
std::string table3Csv(const std::vector<Table3Cell>& cells);

/// Restart-based ERT on one landscape, with the target taken from the
/// enumerated global optimum.
struct IlsStudy {
    ils::ErtEstimate ert;
    std::uint64_t feMax = 0;
    std::vector<ils::RunResult> runs;
};

IlsStudy studyIls(const Landscape& landscape, const FitnessTable& table, const BasinMap& basins,
                  std::uint64_t restarts, std::uint64_t feMax, int perturbationStrength,
                  std::uint64_t seed, unsigned workers = 1);

} // namespace lonet::experiments
