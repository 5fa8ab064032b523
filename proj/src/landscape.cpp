#include <lonet/landscape.hpp>

#include <lonet/parallel.hpp>
#include <lonet/simd/kernels.hpp>

#include <algorithm>
#include <stdexcept>

namespace lonet {

Landscape::Landscape(nk::NkInstance inst)
    : problem_(std::move(inst)), direction_(Direction::maximize) {
    const auto& nk = std::get<nk::NkInstance>(problem_);
    nk::validate(nk);
    neighborhood_ = Neighborhood::bitFlip(nk.n);
}

Landscape::Landscape(qap::QapInstance inst)
    : problem_(std::move(inst)), direction_(Direction::minimize) {
    const auto& qap = std::get<qap::QapInstance>(problem_);
    if (qap.n < 2 || qap.n > kMaxPermutationLength) {
        throw std::invalid_argument("QAP landscape: n must lie in [2, 20]");
    }
    neighborhood_ = Neighborhood::pairwiseExchange(qap.n);
}

double Landscape::fitness(const Solution& s) const {
    if (isNk()) {
        return nk::nkFitness(nkInstance(), s);
    }
    return static_cast<double>(qap::qapCost(qapInstance(), s));
}

double Landscape::fitnessOfRank(Rank r) const {
    if (isNk()) {
        return nk::nkFitnessOfRank(nkInstance(), r);
    }
    const Solution p = unrank(r, Representation::permutation, length());
    return static_cast<double>(qap::qapCostOf(qapInstance(), p.values()));
}

std::string Landscape::describe() const {
    if (isNk()) {
        const auto& nk = nkInstance();
        return "nk N=" + std::to_string(nk.n) + " K=" + std::to_string(nk.k) +
               " seed=" + std::to_string(nk.seed);
    }
    const auto& qap = qapInstance();
    return "qap class=" + std::string(qap::toString(qap.instanceClass)) +
           " n=" + std::to_string(qap.n) + " seed=" + std::to_string(qap.seed);
}

std::uint64_t Landscape::seed() const { return isNk() ? nkInstance().seed : qapInstance().seed; }

ClimbResult hillClimb(const Solution& start, const Landscape& landscape) {
    ClimbResult result{start, landscape.fitness(start), 0, 0};
    for (;;) {
        const auto candidates = neighbors(result.optimum, landscape.neighborhood());
        std::size_t bestIndex = 0;
        double best = 0.0;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            const double f = landscape.fitness(candidates[i]);
            ++result.evaluations;
            if (i == 0 || landscape.improves(f, best)) {
                best = f;
                bestIndex = i;
            }
        }
        if (candidates.empty() || !landscape.improves(best, result.fitness)) {
            return result;
        }
        result.optimum = candidates[bestIndex];
        result.fitness = best;
        ++result.steps;
    }
}

BudgetExceeded::BudgetExceeded(std::uint64_t required, std::uint64_t budget)
    : std::runtime_error("search space of " + std::to_string(required) +
                         " solutions exceeds the enumeration budget of " +
                         std::to_string(budget) + "; raise the budget to at least " +
                         std::to_string(required)),
      required_(required) {}

namespace {

constexpr std::size_t kGrain = std::size_t{1} << 14;

void tabulateNk(const nk::NkInstance& inst, std::vector<double>& out, unsigned workers) {
    std::vector<std::int32_t> links;
    std::vector<double> tables;
    for (int i = 0; i < inst.n; ++i) {
        for (int l : inst.links[static_cast<std::size_t>(i)]) {
            links.push_back(l);
        }
        const auto& t = inst.tables[static_cast<std::size_t>(i)];
        tables.insert(tables.end(), t.begin(), t.end());
    }
    const simd::NkTablesView view{inst.n, inst.k, links, tables};
    parallelFor(out.size(), workers, kGrain, [&](std::size_t begin, std::size_t end) {
        simd::nkFitnessRange(view, begin, std::span<double>(out).subspan(begin, end - begin));
    });
}

void tabulateQap(const qap::QapInstance& inst, std::vector<double>& out, unsigned workers) {
    const int n = inst.n;
    const auto maxOf = [](const std::vector<std::int64_t>& m) {
        return *std::max_element(m.begin(), m.end());
    };
    const bool narrow = simd::fitsInt32(n, maxOf(inst.distances), maxOf(inst.flows));
    std::vector<std::int32_t> a(inst.distances.begin(), inst.distances.end());
    std::vector<std::int32_t> b(inst.flows.begin(), inst.flows.end());
    if (!narrow) {
        a.clear();
        b.clear();
    }
    const simd::QapMatricesView view{n, a, b};
    parallelFor(out.size(), workers, kGrain, [&](std::size_t begin, std::size_t end) {
        // Lexicographic successor order is rank order.
        std::vector<int> perm = unrank(begin, Representation::permutation, n).values();
        for (std::size_t r = begin; r < end; ++r) {
            const std::int64_t cost =
                narrow ? simd::qapCost(view, perm.data()) : qap::qapCostOf(inst, perm);
            out[r] = static_cast<double>(cost);
            std::next_permutation(perm.begin(), perm.end());
        }
    });
}

} // namespace

FitnessTable tabulate(const Landscape& landscape, const TabulateOptions& options) {
    const std::uint64_t size = landscape.searchSpaceSize();
    if (size > options.budget) {
        throw BudgetExceeded(size, options.budget);
    }
    FitnessTable table;
    table.fitness.resize(size);
    if (landscape.isNk()) {
        tabulateNk(landscape.nkInstance(), table.fitness, options.workers);
    } else {
        tabulateQap(landscape.qapInstance(), table.fitness, options.workers);
    }
    table.score.resize(size);
    std::transform(table.fitness.begin(), table.fitness.end(), table.score.begin(),
                   [&](double f) { return landscape.orient(f); });
    return table;
}

} // namespace lonet
