/// @file landscape.hpp
/// @brief The fitness landscape (S, V, f) and the best-improvement climber.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <lonet/nk.hpp>
#include <lonet/qap.hpp>
#include <lonet/solution.hpp>

namespace lonet {

enum class Direction { maximize, minimize };

/// An evaluatable problem instance with its move operator.
///
/// NK landscapes are maximized under bit-flip; QAP landscapes minimize cost
/// under pairwise exchange. Internally every comparison runs on the
/// oriented score (fitness when maximizing, negated cost when minimizing),
/// which is exact for both.
class Landscape {
  public:
    explicit Landscape(nk::NkInstance inst);
    explicit Landscape(qap::QapInstance inst);

    const Neighborhood& neighborhood() const { return neighborhood_; }
    Direction direction() const { return direction_; }
    int length() const { return neighborhood_.length; }
    std::uint64_t searchSpaceSize() const { return neighborhood_.searchSpaceSize(); }

    bool isNk() const { return std::holds_alternative<nk::NkInstance>(problem_); }
    const nk::NkInstance& nkInstance() const { return std::get<nk::NkInstance>(problem_); }
    const qap::QapInstance& qapInstance() const { return std::get<qap::QapInstance>(problem_); }

    /// Raw objective: NK fitness, or QAP cost as a double (exact below 2^53).
    /// @throws std::invalid_argument if `s` does not belong to the space
    double fitness(const Solution& s) const;
    double fitnessOfRank(Rank r) const;

    double orient(double fitness) const {
        return direction_ == Direction::maximize ? fitness : -fitness;
    }
    /// True when `candidate` is strictly better than `incumbent`.
    bool improves(double candidate, double incumbent) const {
        return orient(candidate) > orient(incumbent);
    }

    /// Short provenance string, e.g. `nk N=18 K=2 seed=7`.
    std::string describe() const;
    std::uint64_t seed() const;

  private:
    std::variant<nk::NkInstance, qap::QapInstance> problem_;
    Neighborhood neighborhood_;
    Direction direction_;
};

struct ClimbResult {
    Solution optimum;
    double fitness = 0.0;
    std::uint64_t evaluations = 0; ///< neighbor evaluations; the start is not counted
    std::uint64_t steps = 0;
};

/// Best-improvement hill climbing to a local optimum.
///
/// Each step scans the full neighborhood in canonical order and moves to the
/// first neighbor attaining the best value, provided it strictly improves on
/// the current solution. Ties and plateaus stop the climb.
ClimbResult hillClimb(const Solution& start, const Landscape& landscape);

/// Raw fitness of every rank of the search space.
struct FitnessTable {
    std::vector<double> fitness;
    /// Oriented score per rank, larger is better.
    std::vector<double> score;
};

struct TabulateOptions {
    /// Largest search space that may be enumerated.
    std::uint64_t budget = std::uint64_t{1} << 26;
    unsigned workers = 1;
};

/// @throws lonet::BudgetExceeded if the space is larger than the budget
FitnessTable tabulate(const Landscape& landscape, const TabulateOptions& options = {});

class BudgetExceeded : public std::runtime_error {
  public:
    BudgetExceeded(std::uint64_t required, std::uint64_t budget);
    std::uint64_t required() const { return required_; }

  private:
    std::uint64_t required_;
};

} // namespace lonet
