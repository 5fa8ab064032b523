/// @file kernels.hpp
/// @brief Data-parallel inner loops of exhaustive enumeration.
///
/// Each kernel has a scalar reference implementation and an AVX2 variant.
/// The AVX2 variants perform the same IEEE operations in the same order per
/// lane, so both backends produce bit-identical results; the test suite
/// checks this on every supported backend. The backend is picked once at
/// first use from the CPU features, and `LONET_SIMD=scalar` in the
/// environment forces the reference path.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace lonet::simd {

enum class Backend { scalar, avx2 };

std::string_view toString(Backend backend);
bool supported(Backend backend);
Backend activeBackend();
/// @throws std::invalid_argument if the backend is not supported on this CPU
void setBackend(Backend backend);

/// Flattened NK tables: `links` holds n rows of k loci, `tables` holds n rows
/// of 2^(k+1) contributions.
struct NkTablesView {
    int n = 0;
    int k = 0;
    std::span<const std::int32_t> links;
    std::span<const double> tables;
};

/// QAP matrices narrowed to 32 bits. Kernels may only be used when
/// n * n * max(A) * max(B) < 2^31, see `fitsInt32`.
struct QapMatricesView {
    int n = 0;
    std::span<const std::int32_t> distances;
    std::span<const std::int32_t> flows;
};

bool fitsInt32(int n, std::int64_t maxDistance, std::int64_t maxFlow);

/// out[i] = NK fitness of the bit string with value first + i.
void nkFitnessRange(const NkTablesView& nk, std::uint64_t first, std::span<double> out);

/// Best-improvement successor under bit-flip for ranks first .. first+out.size()-1.
///
/// `scores` holds one value per rank of the 2^n space, larger is better.
/// out[i] is the first neighbor (ascending flipped bit) attaining the
/// maximal neighbor score if that score strictly exceeds the score of the
/// rank itself, otherwise the rank itself.
void bestFlipSuccessors(std::span<const double> scores, int n, std::uint64_t first,
                        std::span<std::uint32_t> out);

/// sum_i sum_j A[i][j] * B[perm[i]][perm[j]]
std::int64_t qapCost(const QapMatricesView& qap, const std::int32_t* perm);

namespace detail {

void nkFitnessRangeScalar(const NkTablesView& nk, std::uint64_t first, std::span<double> out);
void bestFlipSuccessorsScalar(std::span<const double> scores, int n, std::uint64_t first,
                              std::span<std::uint32_t> out);
std::int64_t qapCostScalar(const QapMatricesView& qap, const std::int32_t* perm);

bool avx2Compiled();
void nkFitnessRangeAvx2(const NkTablesView& nk, std::uint64_t first, std::span<double> out);
void bestFlipSuccessorsAvx2(std::span<const double> scores, int n, std::uint64_t first,
                            std::span<std::uint32_t> out);
std::int64_t qapCostAvx2(const QapMatricesView& qap, const std::int32_t* perm);

} // namespace detail

} // namespace lonet::simd
