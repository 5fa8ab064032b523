// Naive reference implementations used as test oracles. They share no code
// with the library beyond the instance structs.
#pragma once

#include <lonet/network.hpp>
#include <lonet/nk.hpp>
#include <lonet/qap.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using Vec = std::vector<int>;

inline double nkFitness(const lonet::nk::NkInstance& inst, const Vec& s) {
    double total = 0.0;
    for (int i = 0; i < inst.n; ++i) {
        std::size_t idx = static_cast<std::size_t>(s[i]);
        for (int j = 0; j < inst.k; ++j) {
            idx = idx * 2 + static_cast<std::size_t>(s[inst.links[i][j]]);
        }
        total += inst.tables[i][idx];
    }
    return total / inst.n;
}

inline std::int64_t qapCost(const lonet::qap::QapInstance& inst, const Vec& p) {
    std::int64_t c = 0;
    for (int i = 0; i < inst.n; ++i) {
        for (int j = 0; j < inst.n; ++j) {
            c += inst.distances[i * inst.n + j] * inst.flows[p[i] * inst.n + p[j]];
        }
    }
    return c;
}

inline Vec bitsOf(std::uint64_t r, int n) {
    Vec s(n);
    for (int i = 0; i < n; ++i) {
        s[i] = static_cast<int>((r >> i) & 1);
    }
    return s;
}

/// All permutations of 0..n-1 in lexicographic order.
inline std::vector<Vec> allPermutations(int n) {
    std::vector<Vec> out;
    Vec p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline std::vector<Vec> flipNeighbors(const Vec& s) {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        Vec t = s;
        t[i] = 1 - t[i];
        out.push_back(t);
    }
    return out;
}

inline std::vector<Vec> swapNeighbors(const Vec& s) {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            Vec t = s;
            std::swap(t[i], t[j]);
            out.push_back(t);
        }
    }
    return out;
}

/// A whole search space listed explicitly with oriented scores.
struct Space {
    std::vector<Vec> points;
    std::map<Vec, std::size_t> index;
    std::vector<double> fitness;
    std::vector<double> score;
    bool binary = true;

    std::vector<Vec> neighborsOf(const Vec& s) const {
        return binary ? flipNeighbors(s) : swapNeighbors(s);
    }
};

inline Space nkSpace(const lonet::nk::NkInstance& inst) {
    Space sp;
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << inst.n); ++r) {
        sp.points.push_back(bitsOf(r, inst.n));
    }
    for (std::size_t i = 0; i < sp.points.size(); ++i) {
        sp.index[sp.points[i]] = i;
        sp.fitness.push_back(nkFitness(inst, sp.points[i]));
        sp.score.push_back(sp.fitness.back());
    }
    return sp;
}

inline Space qapSpace(const lonet::qap::QapInstance& inst) {
    Space sp;
    sp.binary = false;
    sp.points = allPermutations(inst.n);
    for (std::size_t i = 0; i < sp.points.size(); ++i) {
        sp.index[sp.points[i]] = i;
        sp.fitness.push_back(static_cast<double>(qapCost(inst, sp.points[i])));
        sp.score.push_back(-sp.fitness.back());
    }
    return sp;
}

/// Climb without memoization: rescan the neighborhood at every step.
inline std::size_t climb(const Space& sp, std::size_t start) {
    std::size_t cur = start;
    for (;;) {
        std::size_t best = cur;
        for (const auto& v : sp.neighborsOf(sp.points[cur])) {
            const std::size_t j = sp.index.at(v);
            if (sp.score[j] > sp.score[best]) {
                best = j;
            }
        }
        if (best == cur) {
            return cur;
        }
        cur = best;
    }
}

struct Basins {
    std::vector<std::size_t> optimumOf;   // point index -> optimum point index
    std::vector<std::size_t> optima;      // sorted point indices of optima
    std::map<std::size_t, std::size_t> id; // optimum point index -> id
};

inline Basins basins(const Space& sp) {
    Basins b;
    for (std::size_t s = 0; s < sp.points.size(); ++s) {
        b.optimumOf.push_back(climb(sp, s));
    }
    b.optima = b.optimumOf;
    std::sort(b.optima.begin(), b.optima.end());
    b.optima.erase(std::unique(b.optima.begin(), b.optima.end()), b.optima.end());
    for (std::size_t i = 0; i < b.optima.size(); ++i) {
        b.id[b.optima[i]] = i;
    }
    return b;
}

using Dense = std::vector<std::vector<double>>;

inline Dense basinTransition(const Space& sp, const Basins& b) {
    const std::size_t n = b.optima.size();
    Dense w(n, std::vector<double>(n, 0.0));
    std::vector<double> size(n, 0.0);
    for (std::size_t s = 0; s < sp.points.size(); ++s) {
        const std::size_t i = b.id.at(b.optimumOf[s]);
        size[i] += 1.0;
        const auto nbrs = sp.neighborsOf(sp.points[s]);
        for (const auto& v : nbrs) {
            const std::size_t j = b.id.at(b.optimumOf[sp.index.at(v)]);
            w[i][j] += 1.0 / static_cast<double>(nbrs.size());
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (auto& x : w[i]) {
            x /= size[i];
        }
    }
    return w;
}

/// Minimal number of moves between two points.
inline int moveDistance(const Vec& a, const Vec& b, bool binary) {
    if (binary) {
        int d = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            d += a[i] != b[i];
        }
        return d;
    }
    // n minus the number of cycles of the relative permutation.
    const std::size_t n = a.size();
    Vec where(n);
    for (std::size_t i = 0; i < n; ++i) {
        where[b[i]] = static_cast<int>(i);
    }
    std::vector<bool> seen(n, false);
    int cycles = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) {
            continue;
        }
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(where[a[j]])) {
            seen[j] = true;
        }
    }
    return static_cast<int>(n) - cycles;
}

inline Dense escape(const Space& sp, const Basins& b, int D, bool normalize) {
    const std::size_t n = b.optima.size();
    Dense w(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        const Vec& lo = sp.points[b.optima[i]];
        double ball = 0.0;
        for (std::size_t s = 0; s < sp.points.size(); ++s) {
            if (moveDistance(lo, sp.points[s], sp.binary) <= D) {
                ball += 1.0;
                w[i][b.id.at(b.optimumOf[s])] += 1.0;
            }
        }
        if (normalize) {
            for (auto& x : w[i]) {
                x /= ball;
            }
        }
    }
    return w;
}

inline Dense dense(const lonet::LocalOptimaNetwork& net) {
    Dense w(net.nodeCount(), std::vector<double>(net.nodeCount(), 0.0));
    for (const auto& e : net.edges()) {
        w[e.source][e.target] = e.weight;
    }
    return w;
}

/// Triple enumeration of the directed weighted clustering formula.
inline double weightedClustering(const Dense& w, std::size_t i) {
    const std::size_t n = w.size();
    double s = 0.0;
    int k = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (j != i && w[i][j] > 0.0) {
            s += w[i][j];
            ++k;
        }
    }
    if (k < 2) {
        return 0.0;
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t h = 0; h < n; ++h) {
            if (j == i || h == i || h == j) {
                continue;
            }
            const bool closed = w[i][j] > 0.0 && w[j][h] > 0.0 && w[h][i] > 0.0;
            if (closed) {
                sum += (w[i][j] + w[i][h]) / 2.0;
            }
        }
    }
    return sum / (s * (k - 1));
}

/// Floyd-Warshall over d = 1/w, self-loops ignored.
inline Dense allPairs(const Dense& w) {
    const std::size_t n = w.size();
    const double inf = std::numeric_limits<double>::infinity();
    Dense d(n, std::vector<double>(n, inf));
    for (std::size_t i = 0; i < n; ++i) {
        d[i][i] = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && w[i][j] > 0.0) {
                d[i][j] = 1.0 / w[i][j];
            }
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (d[i][k] + d[k][j] < d[i][j]) {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    return d;
}

} // namespace oracle
