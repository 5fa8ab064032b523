#include <lonet/simd/kernels.hpp>

#include <limits>
#include <stdexcept>

#if defined(__x86_64__) || defined(_M_X64)
#define LONET_X86 1
#include <immintrin.h>
#else
#define LONET_X86 0
#endif

namespace lonet::simd::detail {

#if LONET_X86

bool avx2Compiled() { return true; }

__attribute__((target("avx,avx2"))) void nkFitnessRangeAvx2(const NkTablesView& nk,
                                                              std::uint64_t first,
                                                              std::span<double> out) {
    const std::size_t stride = std::size_t{1} << (nk.k + 1);
    const __m256i one = _mm256_set1_epi64x(1);
    const __m256d divisor = _mm256_set1_pd(static_cast<double>(nk.n));
    const std::size_t blocks = out.size() / 4;
    for (std::size_t b = 0; b < blocks; ++b) {
        const auto base = static_cast<long long>(first + 4 * b);
        const __m256i bits = _mm256_setr_epi64x(base, base + 1, base + 2, base + 3);
        __m256d sum = _mm256_setzero_pd();
        for (int i = 0; i < nk.n; ++i) {
            __m256i index = _mm256_and_si256(_mm256_srlv_epi64(bits, _mm256_set1_epi64x(i)), one);
            const std::int32_t* links = nk.links.data() + static_cast<std::size_t>(i * nk.k);
            for (int m = 0; m < nk.k; ++m) {
                const __m256i bit =
                    _mm256_and_si256(_mm256_srlv_epi64(bits, _mm256_set1_epi64x(links[m])), one);
                index = _mm256_or_si256(_mm256_slli_epi64(index, 1), bit);
            }
            const double* table = nk.tables.data() + static_cast<std::size_t>(i) * stride;
            sum = _mm256_add_pd(sum, _mm256_i64gather_pd(table, index, 8));
        }
        _mm256_storeu_pd(out.data() + 4 * b, _mm256_div_pd(sum, divisor));
    }
    const std::size_t done = blocks * 4;
    nkFitnessRangeScalar(nk, first + done, out.subspan(done));
}

__attribute__((target("avx,avx2"))) void bestFlipSuccessorsAvx2(std::span<const double> scores,
                                                                  int n, std::uint64_t first,
                                                                  std::span<std::uint32_t> out) {
    const std::size_t blocks = out.size() / 4;
    const double* base = scores.data();
    for (std::size_t b = 0; b < blocks; ++b) {
        const auto r0 = static_cast<long long>(first + 4 * b);
        const __m256i ranks = _mm256_setr_epi64x(r0, r0 + 1, r0 + 2, r0 + 3);
        const __m256d current = _mm256_i64gather_pd(base, ranks, 8);
        __m256d best = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
        __m256i bestNeighbor = ranks;
        for (int i = 0; i < n; ++i) {
            const __m256i v = _mm256_xor_si256(ranks, _mm256_set1_epi64x(1LL << i));
            const __m256d score = _mm256_i64gather_pd(base, v, 8);
            const __m256d better = _mm256_cmp_pd(score, best, _CMP_GT_OQ);
            best = _mm256_blendv_pd(best, score, better);
            bestNeighbor = _mm256_castpd_si256(_mm256_blendv_pd(
                _mm256_castsi256_pd(bestNeighbor), _mm256_castsi256_pd(v), better));
        }
        const __m256d improving = _mm256_cmp_pd(best, current, _CMP_GT_OQ);
        const __m256i successor = _mm256_castpd_si256(_mm256_blendv_pd(
            _mm256_castsi256_pd(ranks), _mm256_castsi256_pd(bestNeighbor), improving));
        alignas(32) long long lanes[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), successor);
        for (int l = 0; l < 4; ++l) {
            out[4 * b + static_cast<std::size_t>(l)] = static_cast<std::uint32_t>(lanes[l]);
        }
    }
    const std::size_t done = blocks * 4;
    bestFlipSuccessorsScalar(scores, n, first + done, out.subspan(done));
}

__attribute__((target("avx,avx2"))) std::int64_t qapCostAvx2(const QapMatricesView& qap,
                                                              const std::int32_t* perm) {
    const int n = qap.n;
    const std::int32_t* flows = qap.flows.data();
    __m256i acc = _mm256_setzero_si256();
    const __m256i lane = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
    for (int i = 0; i < n; ++i) {
        const std::int32_t* arow = qap.distances.data() + static_cast<std::size_t>(i * n);
        const __m256i rowBase = _mm256_set1_epi32(perm[i] * n);
        for (int j = 0; j < n; j += 8) {
            const __m256i mask = _mm256_cmpgt_epi32(_mm256_set1_epi32(n - j), lane);
            const __m256i cols = _mm256_maskload_epi32(perm + j, mask);
            const __m256i idx = _mm256_add_epi32(rowBase, cols);
            const __m256i b =
                _mm256_mask_i32gather_epi32(_mm256_setzero_si256(), flows, idx, mask, 4);
            const __m256i a = _mm256_maskload_epi32(arow + j, mask);
            acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(a, b));
        }
    }
    const __m128i folded =
        _mm_add_epi32(_mm256_castsi256_si128(acc), _mm256_extracti128_si256(acc, 1));
    const __m128i pairs = _mm_add_epi32(folded, _mm_shuffle_epi32(folded, 0x4E));
    const __m128i total = _mm_add_epi32(pairs, _mm_shuffle_epi32(pairs, 0xB1));
    return _mm_cvtsi128_si32(total);
}

#else

bool avx2Compiled() { return false; }

void nkFitnessRangeAvx2(const NkTablesView&, std::uint64_t, std::span<double>) {
    throw std::logic_error("AVX2 kernels are not available on this architecture");
}
void bestFlipSuccessorsAvx2(std::span<const double>, int, std::uint64_t,
                            std::span<std::uint32_t>) {
    throw std::logic_error("AVX2 kernels are not available on this architecture");
}
std::int64_t qapCostAvx2(const QapMatricesView&, const std::int32_t*) {
    throw std::logic_error("AVX2 kernels are not available on this architecture");
}

#endif

} // namespace lonet::simd::detail
