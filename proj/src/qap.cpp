#include <lonet/qap.hpp>

#include <algorithm>

#include <lonet/format.hpp>
#include <lonet/rng.hpp>

#include <cmath>
#include <stdexcept>

namespace lonet::qap {

std::string_view toString(InstanceClass c) {
    switch (c) {
    case InstanceClass::uniform:
        return "uniform";
    case InstanceClass::realLike:
        return "real-like";
    case InstanceClass::external:
        return "external";
    }
    return "external";
}

namespace {

void checkSize(int n) {
    if (n < 2 || n > kMaxPermutationLength) {
        throw std::invalid_argument("QAP: n must lie in [2, 20]");
    }
}

std::size_t cell(int n, int i, int j) { return static_cast<std::size_t>(i * n + j); }

} // namespace

QapInstance generateUniformQap(int n, std::uint64_t seed, const GeneratorConfig& config) {
    checkSize(n);
    if (config.uniformMin < 0 || config.uniformMax < config.uniformMin) {
        throw std::invalid_argument("QAP: invalid uniform range");
    }
    QapInstance inst;
    inst.n = n;
    inst.seed = seed;
    inst.config = config;
    inst.instanceClass = InstanceClass::uniform;
    inst.distances.assign(static_cast<std::size_t>(n * n), 0);
    inst.flows.assign(static_cast<std::size_t>(n * n), 0);
    const auto span = static_cast<std::uint64_t>(config.uniformMax - config.uniformMin + 1);
    Rng distanceRng(deriveStreamSeed(seed, 0));
    Rng flowRng(deriveStreamSeed(seed, 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            inst.distances[cell(n, i, j)] =
                config.uniformMin + static_cast<std::int64_t>(distanceRng.below(span));
            inst.flows[cell(n, i, j)] =
                config.uniformMin + static_cast<std::int64_t>(flowRng.below(span));
        }
    }
    return inst;
}

QapInstance generateRealLikeQap(int n, std::uint64_t seed, const GeneratorConfig& config) {
    checkSize(n);
    if (!(config.flowSparsity >= 0.0 && config.flowSparsity <= 1.0) ||
        !(config.flowExponentMax >= 0.0) || !(config.squareSide > 0.0)) {
        throw std::invalid_argument("QAP: invalid real-like generator parameters");
    }
    QapInstance inst;
    inst.n = n;
    inst.seed = seed;
    inst.config = config;
    inst.instanceClass = InstanceClass::realLike;
    inst.distances.assign(static_cast<std::size_t>(n * n), 0);
    inst.flows.assign(static_cast<std::size_t>(n * n), 0);

    Rng pointRng(deriveStreamSeed(seed, 0));
    std::vector<double> xs(static_cast<std::size_t>(n));
    std::vector<double> ys(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        xs[static_cast<std::size_t>(i)] = pointRng.uniform01() * config.squareSide;
        ys[static_cast<std::size_t>(i)] = pointRng.uniform01() * config.squareSide;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            const double dx = xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(j)];
            const double dy = ys[static_cast<std::size_t>(i)] - ys[static_cast<std::size_t>(j)];
            inst.distances[cell(n, i, j)] = std::llround(std::hypot(dx, dy));
        }
    }

    // Symmetric, sparse, heavy-tailed flows.
    Rng flowRng(deriveStreamSeed(seed, 1));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const bool zero = flowRng.uniform01() < config.flowSparsity;
            const double exponent = flowRng.uniform01() * config.flowExponentMax;
            const std::int64_t value = zero ? 0 : std::llround(std::pow(10.0, exponent));
            inst.flows[cell(n, i, j)] = value;
            inst.flows[cell(n, j, i)] = value;
        }
    }
    return inst;
}

std::int64_t qapCostOf(const QapInstance& inst, std::span<const int> perm) {
    const int n = inst.n;
    std::int64_t cost = 0;
    for (int i = 0; i < n; ++i) {
        const std::int64_t* arow = inst.distances.data() + static_cast<std::size_t>(i * n);
        const std::int64_t* brow =
            inst.flows.data() + static_cast<std::size_t>(perm[static_cast<std::size_t>(i)] * n);
        for (int j = 0; j < n; ++j) {
            cost += arow[j] * brow[perm[static_cast<std::size_t>(j)]];
        }
    }
    return cost;
}

std::int64_t qapCost(const QapInstance& inst, const Solution& perm) {
    if (perm.kind() != Representation::permutation || perm.size() != inst.n) {
        throw std::invalid_argument("QAP: expected a permutation of length " +
                                    std::to_string(inst.n));
    }
    return qapCostOf(inst, perm.values());
}

std::int64_t swapDelta(const QapInstance& inst, std::span<const int> p, int r, int s) {
    const auto a = [&](int i, int j) { return inst.distance(i, j); };
    const auto b = [&](int i, int j) { return inst.flow(i, j); };
    const auto at = [&](int i) { return p[static_cast<std::size_t>(i)]; };
    std::int64_t d = (a(r, r) - a(s, s)) * (b(at(s), at(s)) - b(at(r), at(r))) +
                     (a(r, s) - a(s, r)) * (b(at(s), at(r)) - b(at(r), at(s)));
    for (int k = 0; k < inst.n; ++k) {
        if (k == r || k == s) {
            continue;
        }
        d += (a(k, r) - a(k, s)) * (b(at(k), at(s)) - b(at(k), at(r))) +
             (a(r, k) - a(s, k)) * (b(at(s), at(k)) - b(at(r), at(k)));
    }
    return d;
}

QapInstance loadQaplib(std::string_view text) {
    TokenStream tokens(text, "#");
    if (tokens.done()) {
        throw ParseError("empty QAP instance", tokens.endLine(), 1);
    }
    const auto sizeToken = tokens.peek();
    const std::int64_t n = tokens.nextInt("instance size n");
    if (n < 2 || n > kMaxPermutationLength) {
        throw ParseError("instance size must lie in [2, 20], got " + std::to_string(n),
                         sizeToken.line, sizeToken.column);
    }
    QapInstance inst;
    inst.n = static_cast<int>(n);
    const auto readMatrix = [&](std::vector<std::int64_t>& m, std::string_view name) {
        m.resize(static_cast<std::size_t>(n * n));
        for (auto& v : m) {
            const auto where = tokens.done() ? TokenStream::Token{{}, tokens.endLine(), 1}
                                             : tokens.peek();
            v = tokens.nextInt(name);
            if (v < 0) {
                throw ParseError(std::string(name) + " entries must be non-negative", where.line,
                                 where.column);
            }
        }
    };
    readMatrix(inst.distances, "distance matrix entry");
    readMatrix(inst.flows, "flow matrix entry");
    if (!tokens.done()) {
        const auto& t = tokens.peek();
        throw ParseError("trailing data after flow matrix", t.line, t.column);
    }
    inst.instanceClass = InstanceClass::external;
    return inst;
}

std::string toQaplib(const QapInstance& inst) {
    std::string out;
    if (inst.instanceClass != InstanceClass::external) {
        const auto& c = inst.config;
        out += "# lonet-qap class=" + std::string(toString(inst.instanceClass)) +
               " n=" + std::to_string(inst.n) + " seed=" + std::to_string(inst.seed);
        if (inst.instanceClass == InstanceClass::uniform) {
            out += " range=" + std::to_string(c.uniformMin) + ".." + std::to_string(c.uniformMax);
        } else {
            out += " sparsity=" + shortestDecimal(c.flowSparsity) +
                   " exponent-max=" + shortestDecimal(c.flowExponentMax) +
                   " square=" + shortestDecimal(c.squareSide);
        }
        out += "\n";
    }
    out += std::to_string(inst.n) + "\n\n";
    const auto writeMatrix = [&](const std::vector<std::int64_t>& m) {
        for (int i = 0; i < inst.n; ++i) {
            for (int j = 0; j < inst.n; ++j) {
                out += (j ? " " : "") + std::to_string(m[cell(inst.n, i, j)]);
            }
            out += "\n";
        }
    };
    writeMatrix(inst.distances);
    out += "\n";
    writeMatrix(inst.flows);
    return out;
}

double flowVariation(const QapInstance& inst) {
    double sum = 0.0;
    double sumSq = 0.0;
    std::size_t count = 0;
    for (int i = 0; i < inst.n; ++i) {
        for (int j = 0; j < inst.n; ++j) {
            if (i == j) {
                continue;
            }
            const auto v = static_cast<double>(inst.flow(i, j));
            sum += v;
            sumSq += v * v;
            ++count;
        }
    }
    const double mean = sum / static_cast<double>(count);
    const double variance = std::max(0.0, sumSq / static_cast<double>(count) - mean * mean);
    return mean > 0.0 ? std::sqrt(variance) / mean : 0.0;
}

} // namespace lonet::qap
