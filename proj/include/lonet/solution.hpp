/// @file solution.hpp
/// @brief Solutions, dense solution ranks and the two move operators.
///
/// Binary strings rank as their base-2 value with locus 0 as the least
/// significant bit. Permutations rank by their Lehmer code, which coincides
/// with lexicographic order. Neighbors are always produced in canonical
/// order: ascending flipped locus for bit-flip, ascending (i, j) for
/// pairwise exchange.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace lonet {

/// Dense index of a solution in its search space.
using Rank = std::uint64_t;

enum class Representation { binary, permutation };

/// A point of the search space: a bit string or a permutation of 0..N-1.
class Solution {
  public:
    /// @throws std::invalid_argument if any element is not 0 or 1
    static Solution bits(std::vector<int> values);
    /// @throws std::invalid_argument if `values` is not a permutation of 0..N-1
    static Solution permutation(std::vector<int> values);

    Representation kind() const { return kind_; }
    int size() const { return static_cast<int>(values_.size()); }
    int operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& values() const { return values_; }

    friend bool operator==(const Solution&, const Solution&) = default;

  private:
    Solution(Representation kind, std::vector<int> values)
        : kind_(kind), values_(std::move(values)) {}

    Representation kind_;
    std::vector<int> values_;
};

enum class MoveKind { bitFlip, pairwiseExchange };

/// A move operator bound to a solution length.
struct Neighborhood {
    MoveKind kind = MoveKind::bitFlip;
    int length = 0;

    static Neighborhood bitFlip(int n) { return {MoveKind::bitFlip, n}; }
    static Neighborhood pairwiseExchange(int n) { return {MoveKind::pairwiseExchange, n}; }

    Representation representation() const {
        return kind == MoveKind::bitFlip ? Representation::binary : Representation::permutation;
    }
    /// N for bit-flip, N(N-1)/2 for pairwise exchange.
    int size() const;
    /// 2^N for bit-flip, N! for pairwise exchange.
    std::uint64_t searchSpaceSize() const;

    friend bool operator==(const Neighborhood&, const Neighborhood&) = default;
};

/// Largest lengths whose search space size fits a Rank.
inline constexpr int kMaxBinaryLength = 63;
inline constexpr int kMaxPermutationLength = 20;

std::uint64_t factorial(int n);

Rank rank(const Solution& s);
Solution unrank(Rank r, Representation kind, int length);

/// All neighbors of `s` in canonical order.
/// @throws std::invalid_argument on representation or length mismatch
std::vector<Solution> neighbors(const Solution& s, const Neighborhood& nb);

/// 1/|V(s)| when `to` is a neighbor of `from`, otherwise 0.
/// @throws std::invalid_argument on representation or length mismatch
double transitionProbability(const Solution& from, const Solution& to, const Neighborhood& nb);

/// Rank-space view of a neighborhood, used by every exhaustive pass.
///
/// `neighborRanks` writes the ranks of all neighbors of `r` in canonical order
/// into `out` (size at least nb.size()). For permutations the Lehmer digits
/// of each exchanged neighbor are updated incrementally, touching only the
/// positions between the two exchanged indices.
class RankNeighborhood {
  public:
    explicit RankNeighborhood(const Neighborhood& nb);

    const Neighborhood& neighborhood() const { return nb_; }
    std::uint64_t spaceSize() const { return spaceSize_; }
    int size() const { return nb_.size(); }

    void neighborRanks(Rank r, std::span<Rank> out) const;

  private:
    Neighborhood nb_;
    std::uint64_t spaceSize_;
    std::vector<std::uint64_t> weights_; // (n-1-k)! per position k
};

} // namespace lonet
