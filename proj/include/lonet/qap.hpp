/// @file qap.hpp
/// @brief Quadratic assignment instances: generators, QAPLIB text I/O, cost.
///
/// The cost of a permutation p is sum_i sum_j A[i][j] * B[p[i]][p[j]], with A
/// the distance matrix (indexed by location) and B the flow matrix (indexed
/// by facility).

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <lonet/solution.hpp>

namespace lonet::qap {

enum class InstanceClass { uniform, realLike, external };

std::string_view toString(InstanceClass c);

/// Generator constants. Exposed so experiments can vary them.
struct GeneratorConfig {
    int uniformMin = 1;
    int uniformMax = 99;
    /// Probability that a real-like flow entry is zero.
    double flowSparsity = 0.65;
    /// Non-zero real-like flows are round(10^U[0, flowExponentMax]).
    double flowExponentMax = 2.0;
    /// Side of the square in which real-like locations are placed.
    double squareSide = 100.0;

    friend bool operator==(const GeneratorConfig&, const GeneratorConfig&) = default;
};

struct QapInstance {
    int n = 0;
    std::vector<std::int64_t> distances; ///< row-major n x n (A)
    std::vector<std::int64_t> flows;     ///< row-major n x n (B)
    InstanceClass instanceClass = InstanceClass::external;
    std::uint64_t seed = 0;
    GeneratorConfig config;

    std::int64_t distance(int i, int j) const {
        return distances[static_cast<std::size_t>(i * n + j)];
    }
    std::int64_t flow(int i, int j) const { return flows[static_cast<std::size_t>(i * n + j)]; }

    friend bool operator==(const QapInstance&, const QapInstance&) = default;
};

/// @throws std::invalid_argument if n < 2 or n > 20
QapInstance generateUniformQap(int n, std::uint64_t seed, const GeneratorConfig& config = {});
/// @throws std::invalid_argument if n < 2 or n > 20
QapInstance generateRealLikeQap(int n, std::uint64_t seed, const GeneratorConfig& config = {});

/// @throws std::invalid_argument if `perm` is not a permutation of length n
std::int64_t qapCost(const QapInstance& inst, const Solution& perm);
/// Unchecked cost of a raw permutation array of length n.
std::int64_t qapCostOf(const QapInstance& inst, std::span<const int> perm);

/// Change of cost when positions r and s of `perm` are exchanged, O(n).
std::int64_t swapDelta(const QapInstance& inst, std::span<const int> perm, int r, int s);

/// Parses the QAPLIB layout: n, then A, then B, whitespace separated.
/// Lines starting with `#` are comments.
/// @throws lonet::ParseError with line/column diagnostics
QapInstance loadQaplib(std::string_view text);

/// Writes the QAPLIB layout. Generated instances get a leading `#` comment
/// carrying class, n, seed and generator parameters.
std::string toQaplib(const QapInstance& inst);

/// Coefficient of variation of the off-diagonal flow entries.
double flowVariation(const QapInstance& inst);

} // namespace lonet::qap
