#include <doctest.h>

#include "oracles.hpp"

#include <lonet/basins.hpp>
#include <lonet/rng.hpp>
#include <lonet/simd/kernels.hpp>

#include <vector>

using namespace lonet;

namespace {

struct FlatNk {
    std::vector<std::int32_t> links;
    std::vector<double> tables;
    simd::NkTablesView view(const nk::NkInstance& inst) const {
        return {inst.n, inst.k, links, tables};
    }
};

FlatNk flatten(const nk::NkInstance& inst) {
    FlatNk f;
    for (const auto& row : inst.links) {
        f.links.insert(f.links.end(), row.begin(), row.end());
    }
    for (const auto& row : inst.tables) {
        f.tables.insert(f.tables.end(), row.begin(), row.end());
    }
    return f;
}

struct BackendGuard {
    simd::Backend saved = simd::activeBackend();
    ~BackendGuard() { simd::setBackend(saved); }
};

} // namespace

TEST_SUITE("simd") {

TEST_CASE("scalar backend is always available") {
    CHECK(simd::supported(simd::Backend::scalar));
    CHECK(simd::toString(simd::Backend::scalar) == "scalar");
}

TEST_CASE("NK fitness kernels agree bit-exactly") {
    if (!simd::supported(simd::Backend::avx2)) {
        MESSAGE("AVX2 unavailable; only the scalar kernel is checked");
    }
    for (const auto& [n, k] : std::vector<std::pair<int, int>>{{5, 0}, {10, 3}, {13, 12}, {18, 4}}) {
        const auto inst = nk::generateNk(n, k, static_cast<std::uint64_t>(n * 31 + k));
        const auto flat = flatten(inst);
        const std::size_t count = std::min<std::size_t>(std::size_t{1} << n, 5003);
        for (const std::uint64_t first : {std::uint64_t{0}, std::uint64_t{3}}) {
            const std::size_t len = std::min<std::size_t>(count, (std::size_t{1} << n) - first);
            std::vector<double> scalar(len);
            simd::detail::nkFitnessRangeScalar(flat.view(inst), first, scalar);
            for (std::size_t i = 0; i < len; i += 37) {
                CHECK(scalar[i] == nk::nkFitnessOfRank(inst, first + i));
                CHECK(scalar[i] == doctest::Approx(oracle::nkFitness(inst, oracle::bitsOf(first + i, n))).epsilon(1e-14));
            }
            if (simd::supported(simd::Backend::avx2)) {
                std::vector<double> vec(len);
                simd::detail::nkFitnessRangeAvx2(flat.view(inst), first, vec);
                CHECK(vec == scalar);
            }
        }
    }
}

TEST_CASE("best-flip successor kernels agree") {
    Rng rng(8);
    for (const int n : {1, 3, 7, 12}) {
        const std::size_t size = std::size_t{1} << n;
        std::vector<double> scores(size);
        for (auto& s : scores) {
            // Coarse values force ties between neighbors.
            s = static_cast<double>(rng.below(6));
        }
        std::vector<std::uint32_t> scalar(size - 1);
        simd::detail::bestFlipSuccessorsScalar(scores, n, 1, scalar);
        for (std::size_t i = 0; i < scalar.size(); ++i) {
            const std::size_t r = i + 1;
            std::size_t best = r;
            for (int b = 0; b < n; ++b) {
                const std::size_t v = r ^ (std::size_t{1} << b);
                if (scores[v] > scores[best]) {
                    best = v;
                }
            }
            CHECK(scalar[i] == best);
        }
        if (simd::supported(simd::Backend::avx2)) {
            std::vector<std::uint32_t> vec(size - 1);
            simd::detail::bestFlipSuccessorsAvx2(scores, n, 1, vec);
            CHECK(vec == scalar);
        }
    }
}

TEST_CASE("QAP cost kernels agree") {
    CHECK(simd::fitsInt32(10, 99, 99));
    CHECK_FALSE(simd::fitsInt32(20, 100000, 100000));
    CHECK_FALSE(simd::fitsInt32(4, -1, 1));
    for (const int n : {2, 5, 8, 9, 13}) {
        const auto inst = qap::generateUniformQap(n, static_cast<std::uint64_t>(n));
        std::vector<std::int32_t> a(inst.distances.begin(), inst.distances.end());
        std::vector<std::int32_t> b(inst.flows.begin(), inst.flows.end());
        const simd::QapMatricesView view{n, a, b};
        Rng rng(static_cast<std::uint64_t>(n));
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        for (int trial = 0; trial < 200; ++trial) {
            for (int i = n - 1; i > 0; --i) {
                std::swap(perm[static_cast<std::size_t>(i)], perm[rng.below(static_cast<std::uint64_t>(i + 1))]);
            }
            std::vector<std::int32_t> p32(perm.begin(), perm.end());
            const auto expected = oracle::qapCost(inst, perm);
            CHECK(simd::detail::qapCostScalar(view, p32.data()) == expected);
            if (simd::supported(simd::Backend::avx2)) {
                CHECK(simd::detail::qapCostAvx2(view, p32.data()) == expected);
            }
        }
    }
}

TEST_CASE("enumeration is identical under both backends") {
    BackendGuard guard;
    const Landscape nkL(nk::generateNk(14, 6, 3));
    const Landscape qapL(qap::generateUniformQap(7, 3));
    simd::setBackend(simd::Backend::scalar);
    const auto nkScalar = enumerateBasins(nkL);
    const auto qapScalar = enumerateBasins(qapL);
    const auto nkTable = tabulate(nkL);
    if (!simd::supported(simd::Backend::avx2)) {
        CHECK_THROWS_AS(simd::setBackend(simd::Backend::avx2), std::invalid_argument);
        return;
    }
    simd::setBackend(simd::Backend::avx2);
    CHECK((simd::activeBackend() == simd::Backend::avx2));
    CHECK(tabulate(nkL).fitness == nkTable.fitness);
    const auto nkVec = enumerateBasins(nkL);
    const auto qapVec = enumerateBasins(qapL);
    CHECK(nkVec.assignment == nkScalar.assignment);
    CHECK(qapVec.assignment == qapScalar.assignment);
    CHECK(basinTransitionLon(nkL, nkVec) == basinTransitionLon(nkL, nkScalar));
}

} // TEST_SUITE
