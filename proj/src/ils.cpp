#include <lonet/ils.hpp>

#include <lonet/format.hpp>
#include <lonet/parallel.hpp>
#include <lonet/rng.hpp>

#include <limits>
#include <numeric>
#include <stdexcept>

namespace lonet::ils {

namespace {

struct BudgetSpent {};
struct TargetReached {};

class Run {
  public:
    Run(const Landscape& landscape, const IlsConfig& config, const FitnessTable* table,
        std::uint64_t seed)
        : landscape_(landscape), config_(config), table_(table), nb_(landscape.neighborhood()),
          rng_(seed), target_(*config.targetFitness), scratch_(static_cast<std::size_t>(nb_.size())) {}

    RunResult execute() {
        Rank current = rng_.below(nb_.spaceSize());
        try {
            double fitness = evaluate(current, result_.initialEvaluations);
            climb(current, fitness);
            for (;;) {
                Rank candidate = perturb(current);
                double candidateFitness = evaluate(candidate, result_.perturbationEvaluations);
                climb(candidate, candidateFitness);
                if (landscape_.improves(candidateFitness, fitness)) {
                    current = candidate;
                    fitness = candidateFitness;
                }
            }
        } catch (const TargetReached&) {
            result_.success = true;
        } catch (const BudgetSpent&) {
        }
        return result_;
    }

  private:
    double evaluate(Rank r, std::uint64_t& phase) {
        if (result_.evaluationsUsed >= config_.feMax) {
            throw BudgetSpent{};
        }
        ++result_.evaluationsUsed;
        ++phase;
        const double f = table_ != nullptr ? table_->fitness[r] : landscape_.fitnessOfRank(r);
        if (result_.evaluationsUsed == 1 || landscape_.improves(f, result_.bestFitness)) {
            result_.bestFitness = f;
        }
        if (f == target_) {
            throw TargetReached{};
        }
        return f;
    }

    void climb(Rank& r, double& fitness) {
        for (;;) {
            nb_.neighborRanks(r, scratch_);
            Rank bestRank = r;
            double best = fitness;
            bool improved = false;
            for (const Rank n : scratch_) {
                const double f = evaluate(n, result_.localSearchEvaluations);
                if (landscape_.improves(f, best)) {
                    best = f;
                    bestRank = n;
                    improved = true;
                }
            }
            if (!improved) {
                return;
            }
            r = bestRank;
            fitness = best;
        }
    }

    Rank perturb(Rank r) {
        const int n = landscape_.length();
        const int k = config_.perturbationStrength;
        std::vector<int> positions(static_cast<std::size_t>(n));
        std::iota(positions.begin(), positions.end(), 0);
        const bool binary = nb_.neighborhood().kind == MoveKind::bitFlip;
        const int picks = binary ? k : 2 * k;
        for (int i = 0; i < picks; ++i) {
            const auto j = i + static_cast<int>(rng_.below(static_cast<std::uint64_t>(n - i)));
            std::swap(positions[static_cast<std::size_t>(i)], positions[static_cast<std::size_t>(j)]);
        }
        if (binary) {
            for (int i = 0; i < k; ++i) {
                r ^= Rank{1} << positions[static_cast<std::size_t>(i)];
            }
            return r;
        }
        std::vector<int> perm = unrank(r, Representation::permutation, n).values();
        for (int i = 0; i < k; ++i) {
            std::swap(perm[static_cast<std::size_t>(positions[2 * i])],
                      perm[static_cast<std::size_t>(positions[2 * i + 1])]);
        }
        return rank(Solution::permutation(std::move(perm)));
    }

    const Landscape& landscape_;
    const IlsConfig& config_;
    const FitnessTable* table_;
    RankNeighborhood nb_;
    Rng rng_;
    double target_;
    std::vector<Rank> scratch_;
    RunResult result_;
};

void validate(const Landscape& landscape, const IlsConfig& config, const FitnessTable* table) {
    if (!config.targetFitness) {
        throw std::invalid_argument("ILS needs the target fitness of the global optimum");
    }
    if (config.feMax < 1) {
        throw std::invalid_argument("feMax must be at least 1");
    }
    if (config.restarts < 1) {
        throw std::invalid_argument("restarts must be at least 1");
    }
    const int limit = landscape.neighborhood().kind == MoveKind::bitFlip
                          ? landscape.length()
                          : landscape.length() / 2;
    if (config.perturbationStrength < 1 || config.perturbationStrength > limit) {
        throw std::invalid_argument("perturbation strength must be in [1, " +
                                    std::to_string(limit) + "]");
    }
    if (table != nullptr && table->fitness.size() != landscape.searchSpaceSize()) {
        throw std::invalid_argument("fitness table does not match the landscape");
    }
}

} // namespace

std::uint64_t defaultBudget(std::uint64_t searchSpaceSize) {
    return (searchSpaceSize + 4) / 5;
}

RunResult runIls(const Landscape& landscape, const IlsConfig& config, std::uint64_t seed,
                 const FitnessTable* table) {
    validate(landscape, config, table);
    RunResult result = Run(landscape, config, table, seed).execute();
    result.seed = seed;
    return result;
}

std::vector<RunResult> runRestarts(const Landscape& landscape, const IlsConfig& config,
                                   std::uint64_t seed, const FitnessTable* table) {
    validate(landscape, config, table);
    std::vector<RunResult> results(config.restarts);
    parallelFor(results.size(), config.workers, 1, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            results[i] = runIls(landscape, config, deriveStreamSeed(seed, i), table);
            results[i].runIndex = i;
        }
    });
    return results;
}

ErtEstimate estimateErt(const std::vector<RunResult>& results, std::uint64_t feMax) {
    if (results.empty()) {
        throw std::invalid_argument("ERT needs at least one run");
    }
    ErtEstimate e;
    e.runCount = results.size();
    double successEvals = 0.0;
    for (const auto& r : results) {
        if (r.success) {
            ++e.successes;
            successEvals += static_cast<double>(r.evaluationsUsed);
        }
    }
    e.successRate = static_cast<double>(e.successes) / static_cast<double>(e.runCount);
    if (e.successes == 0) {
        e.ert = std::numeric_limits<double>::infinity();
        return e;
    }
    e.meanSuccessEvals = successEvals / static_cast<double>(e.successes);
    e.ert = *e.meanSuccessEvals +
            (1.0 - e.successRate) / e.successRate * static_cast<double>(feMax);
    return e;
}

std::string runsCsv(const std::vector<RunResult>& results) {
    std::string out = "run,seed,success,evaluations,best_fitness\n";
    for (const auto& r : results) {
        out += std::to_string(r.runIndex) + "," + std::to_string(r.seed) + "," +
               (r.success ? "1" : "0") + "," + std::to_string(r.evaluationsUsed) + "," +
               shortestDecimal(r.bestFitness) + "\n";
    }
    return out;
}

std::string ertText(const ErtEstimate& e, std::uint64_t feMax) {
    std::string out;
    out += "runs: " + std::to_string(e.runCount) + "\n";
    out += "successes: " + std::to_string(e.successes) + "\n";
    out += "success_rate: " + shortestDecimal(e.successRate) + "\n";
    out += "mean_success_evals: " +
           (e.meanSuccessEvals ? shortestDecimal(*e.meanSuccessEvals) : std::string("NA")) + "\n";
    out += "fe_max: " + std::to_string(feMax) + "\n";
    out += "ert: " + shortestDecimal(e.ert) + "\n";
    return out;
}

} // namespace lonet::ils
