#include <doctest.h>

#include "oracles.hpp"

#include <lonet/format.hpp>
#include <lonet/landscape.hpp>
#include <lonet/rng.hpp>
#include <lonet/solution.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

using namespace lonet;

TEST_SUITE("core") {

TEST_CASE("stream seeds are deterministic and distinct") {
    CHECK(deriveStreamSeed(7, 0) == deriveStreamSeed(7, 0));
    std::set<std::uint64_t> seen;
    for (std::uint64_t s = 0; s < 100; ++s) {
        seen.insert(deriveStreamSeed(42, s));
    }
    CHECK(seen.size() == 100);
    CHECK(deriveStreamSeed(1, 0) != deriveStreamSeed(2, 0));
}

TEST_CASE("splitmix64 reference values") {
    std::uint64_t state = 0;
    CHECK(splitmix64(state) == 0xe220a8397b1dcdafULL);
    CHECK(splitmix64(state) == 0x6e789e6aa1b965f4ULL);
}

TEST_CASE("rng helpers stay in range") {
    Rng rng(3);
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        CHECK(rng.below(7) < 7);
    }
    CHECK(rng.below(1) == 0);
}

TEST_CASE("shortest decimal round-trips") {
    Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
        const double v = rng.uniform01() * std::pow(10.0, static_cast<int>(rng.below(20)) - 10);
        CHECK(std::stod(shortestDecimal(v)) == v);
    }
    CHECK(shortestDecimal(0.5) == "0.5");
    CHECK(shortestDecimal(3.0) == "3");
    CHECK(shortestDecimal(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(shortestDecimal(-std::numeric_limits<double>::infinity()) == "-inf");
}

TEST_CASE("token stream reports positions") {
    TokenStream ts("# comment\n  12 x\n3.5", "#");
    CHECK(ts.nextInt("a") == 12);
    try {
        ts.nextInt("b");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 6);
    }
    CHECK(ts.nextDouble("c") == 3.5);
    CHECK(ts.done());
    CHECK_THROWS_AS(ts.next("more"), ParseError);
}

TEST_CASE("fnv1a64 reference values") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("solution validation") {
    CHECK_NOTHROW(Solution::bits({0, 1, 1}));
    CHECK_THROWS_AS(Solution::bits({0, 2}), std::invalid_argument);
    CHECK_NOTHROW(Solution::permutation({2, 0, 1}));
    CHECK_THROWS_AS(Solution::permutation({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Solution::permutation({0, 3, 1}), std::invalid_argument);
}

TEST_CASE("binary rank is the base-2 value with bit 0 least significant") {
    CHECK(rank(Solution::bits({1, 0, 0})) == 1);
    CHECK(rank(Solution::bits({0, 0, 1})) == 4);
    for (int n = 1; n <= 12; ++n) {
        const std::uint64_t size = std::uint64_t{1} << n;
        for (std::uint64_t r = 0; r < size; r += (n > 8 ? 7 : 1)) {
            const Solution s = unrank(r, Representation::binary, n);
            CHECK(s.values() == oracle::bitsOf(r, n));
            CHECK(rank(s) == r);
        }
    }
}

TEST_CASE("permutation rank follows lexicographic order") {
    for (int n = 1; n <= 8; ++n) {
        const auto perms = oracle::allPermutations(n);
        REQUIRE(perms.size() == factorial(n));
        for (std::size_t r = 0; r < perms.size(); ++r) {
            CHECK(rank(Solution::permutation(perms[r])) == r);
            CHECK(unrank(r, Representation::permutation, n).values() == perms[r]);
        }
    }
}

TEST_CASE("neighbors in canonical order") {
    const auto flips = neighbors(Solution::bits({0, 0, 0}), Neighborhood::bitFlip(3));
    REQUIRE(flips.size() == 3);
    CHECK(flips[0].values() == std::vector<int>{1, 0, 0});
    CHECK(flips[1].values() == std::vector<int>{0, 1, 0});
    CHECK(flips[2].values() == std::vector<int>{0, 0, 1});

    const auto swaps = neighbors(Solution::permutation({0, 1, 2}), Neighborhood::pairwiseExchange(3));
    REQUIRE(swaps.size() == 3);
    CHECK(swaps[0].values() == std::vector<int>{1, 0, 2});
    CHECK(swaps[1].values() == std::vector<int>{2, 1, 0});
    CHECK(swaps[2].values() == std::vector<int>{0, 2, 1});

    CHECK(neighbors(unrank(12345, Representation::binary, 18), Neighborhood::bitFlip(18)).size() == 18);
    CHECK(Neighborhood::pairwiseExchange(9).size() == 36);
    CHECK_THROWS_AS(neighbors(Solution::bits({0, 1}), Neighborhood::bitFlip(3)), std::invalid_argument);
    CHECK_THROWS_AS(neighbors(Solution::bits({0, 1}), Neighborhood::pairwiseExchange(2)),
                    std::invalid_argument);
}

TEST_CASE("neighborhood symmetry") {
    const auto nb = Neighborhood::pairwiseExchange(5);
    for (const auto& p : oracle::allPermutations(5)) {
        const auto s = Solution::permutation(p);
        for (const auto& v : neighbors(s, nb)) {
            const auto back = neighbors(v, nb);
            CHECK(std::find(back.begin(), back.end(), s) != back.end());
        }
    }
}

TEST_CASE("rank neighborhood matches explicit neighbors") {
    for (int n = 2; n <= 7; ++n) {
        const auto nb = Neighborhood::pairwiseExchange(n);
        const RankNeighborhood rn(nb);
        std::vector<Rank> out(static_cast<std::size_t>(nb.size()));
        for (Rank r = 0; r < factorial(n); ++r) {
            rn.neighborRanks(r, out);
            const auto explicitNbrs = neighbors(unrank(r, Representation::permutation, n), nb);
            for (std::size_t i = 0; i < out.size(); ++i) {
                CHECK(out[i] == rank(explicitNbrs[i]));
            }
        }
    }
    const auto nb = Neighborhood::bitFlip(10);
    const RankNeighborhood rn(nb);
    std::vector<Rank> out(10);
    rn.neighborRanks(5, out);
    CHECK(out[0] == 4);
    CHECK(out[1] == 7);
    CHECK(out[9] == 5 + 512);
}

TEST_CASE("transition probabilities") {
    const auto nb18 = Neighborhood::bitFlip(18);
    const auto s = unrank(99, Representation::binary, 18);
    const auto t = unrank(99 ^ 8, Representation::binary, 18);
    CHECK(transitionProbability(s, t, nb18) == doctest::Approx(1.0 / 18).epsilon(1e-15));
    CHECK(transitionProbability(s, s, nb18) == 0.0);
    CHECK(transitionProbability(s, unrank(99 ^ 24, Representation::binary, 18), nb18) == 0.0);

    const auto nb9 = Neighborhood::pairwiseExchange(9);
    const auto p = Solution::permutation({0, 1, 2, 3, 4, 5, 6, 7, 8});
    const auto q = Solution::permutation({0, 1, 7, 3, 4, 5, 6, 2, 8});
    CHECK(transitionProbability(p, q, nb9) == doctest::Approx(1.0 / 36).epsilon(1e-15));
    CHECK(transitionProbability(p, Solution::permutation({1, 2, 0, 3, 4, 5, 6, 7, 8}), nb9) == 0.0);
    CHECK_THROWS_AS(transitionProbability(s, p, nb18), std::invalid_argument);
}

TEST_CASE("search space sizes") {
    CHECK(Neighborhood::bitFlip(18).searchSpaceSize() == 262144);
    CHECK(Neighborhood::pairwiseExchange(10).searchSpaceSize() == 3628800);
}

TEST_CASE("hill climb reaches a local optimum and is idempotent") {
    const Landscape L(nk::generateNk(10, 4, 5));
    const auto sp = oracle::nkSpace(L.nkInstance());
    for (Rank r = 0; r < 1024; ++r) {
        const auto start = unrank(r, Representation::binary, 10);
        const auto res = hillClimb(start, L);
        // Agrees with the naive rescanning climber.
        CHECK(rank(res.optimum) == oracle::climb(sp, r));
        const auto again = hillClimb(res.optimum, L);
        CHECK(again.optimum == res.optimum);
        CHECK(again.steps == 0);
        CHECK(again.evaluations == 10);
        for (const auto& v : neighbors(res.optimum, L.neighborhood())) {
            CHECK(L.fitness(v) <= res.fitness);
        }
    }
}

TEST_CASE("hill climb trajectory strictly improves") {
    const Landscape L(qap::generateUniformQap(6, 3));
    const auto nb = L.neighborhood();
    for (Rank r = 0; r < 720; r += 13) {
        Solution cur = unrank(r, Representation::permutation, 6);
        const auto res = hillClimb(cur, L);
        // Replay the steps with the oracle rule and check monotone costs.
        double f = L.fitness(cur);
        for (std::uint64_t step = 0; step < res.steps; ++step) {
            Solution best = cur;
            double bf = f;
            for (const auto& v : neighbors(cur, nb)) {
                if (L.fitness(v) < bf) {
                    bf = L.fitness(v);
                    best = v;
                }
            }
            CHECK(bf < f);
            cur = best;
            f = bf;
        }
        CHECK(cur == res.optimum);
    }
}

TEST_CASE("K=0 landscapes climb to the single maximum") {
    const Landscape L(nk::generateNk(12, 0, 9));
    const auto first = hillClimb(unrank(0, Representation::binary, 12), L).optimum;
    for (Rank r = 0; r < 4096; r += 17) {
        CHECK(hillClimb(unrank(r, Representation::binary, 12), L).optimum == first);
    }
}

TEST_CASE("tabulate refuses spaces above the budget") {
    const Landscape L(nk::generateNk(12, 2, 1));
    CHECK_THROWS_AS(tabulate(L, {.budget = 1000}), BudgetExceeded);
    const auto t = tabulate(L);
    REQUIRE(t.fitness.size() == 4096);
    for (Rank r = 0; r < 4096; ++r) {
        CHECK(t.fitness[r] == L.fitnessOfRank(r));
    }
}

} // TEST_SUITE
