/// @file ils.hpp
/// @brief Iterated local search and expected running time estimation.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <lonet/landscape.hpp>

namespace lonet::ils {

struct IlsConfig {
    /// Evaluation budget. Every fitness evaluation counts, including the
    /// initial solution, each perturbed solution and every neighbor scanned
    /// by the local search.
    std::uint64_t feMax = 1;
    /// Number of distinct moves applied by one perturbation.
    int perturbationStrength = 2;
    std::uint64_t restarts = 1;
    /// Objective value of the global optimum. Reaching it exactly stops a run.
    std::optional<double> targetFitness;
    unsigned workers = 1;
};

/// ceil(|S| / 5).
std::uint64_t defaultBudget(std::uint64_t searchSpaceSize);

struct RunResult {
    std::uint64_t runIndex = 0;
    std::uint64_t seed = 0;
    bool success = false;
    std::uint64_t evaluationsUsed = 0;
    double bestFitness = 0.0;
    std::uint64_t initialEvaluations = 0;
    std::uint64_t localSearchEvaluations = 0;
    std::uint64_t perturbationEvaluations = 0;
};

/// One run of ILS with greedy acceptance: the incumbent optimum is replaced
/// only by a strictly better one. With a table, evaluations read from it
/// instead of recomputing the objective; the counts are identical.
/// @throws std::invalid_argument on a missing target or an invalid config
RunResult runIls(const Landscape& landscape, const IlsConfig& config, std::uint64_t seed,
                 const FitnessTable* table = nullptr);

/// config.restarts independent runs; run i uses deriveStreamSeed(seed, i).
std::vector<RunResult> runRestarts(const Landscape& landscape, const IlsConfig& config,
                                   std::uint64_t seed, const FitnessTable* table = nullptr);

struct ErtEstimate {
    double successRate = 0.0;
    std::optional<double> meanSuccessEvals;
    /// meanSuccessEvals + (1 - p) / p * feMax; +infinity when p = 0.
    double ert = 0.0;
    std::size_t runCount = 0;
    std::size_t successes = 0;

    bool finite() const { return successes > 0; }
};

/// @throws std::invalid_argument on an empty result list
ErtEstimate estimateErt(const std::vector<RunResult>& results, std::uint64_t feMax);

std::string runsCsv(const std::vector<RunResult>& results);
std::string ertText(const ErtEstimate& estimate, std::uint64_t feMax);

} // namespace lonet::ils
