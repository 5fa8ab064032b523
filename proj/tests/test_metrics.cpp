#include <doctest.h>

#include "oracles.hpp"

#include <lonet/communities.hpp>
#include <lonet/metrics.hpp>
#include <lonet/rng.hpp>

#include <cmath>
#include <limits>

using namespace lonet;
using namespace lonet::metrics;

namespace {

LocalOptimaNetwork makeNet(std::size_t n, std::vector<LonEdge> edges,
                           Direction direction = Direction::maximize) {
    std::vector<LonNode> nodes(n);
    for (std::size_t i = 0; i < n; ++i) {
        nodes[i].id = static_cast<std::uint32_t>(i);
        nodes[i].fitness = static_cast<double>(i);
    }
    return LocalOptimaNetwork(std::move(nodes), std::move(edges), EdgeModel{}, direction, "test");
}

LocalOptimaNetwork randomNet(std::size_t n, double p, std::uint64_t seed, bool selfLoops = true) {
    Rng rng(seed);
    std::vector<LonEdge> edges;
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
            if ((i != j || selfLoops) && rng.uniform01() < p) {
                edges.push_back({i, j, 0.01 + rng.uniform01()});
            }
        }
    }
    return makeNet(n, edges);
}

std::vector<LonEdge> undirected(std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs, double w = 1.0) {
    std::vector<LonEdge> edges;
    for (const auto& [a, b] : pairs) {
        edges.push_back({a, b, w});
        edges.push_back({b, a, w});
    }
    return edges;
}

} // namespace

TEST_SUITE("metrics") {

TEST_CASE("clustering of the three reference neighborhoods") {
    // Node 0 with neighbors 1..4.
    const auto spokes = undirected({{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    auto half = spokes;
    for (const auto& e : undirected({{1, 2}, {2, 3}, {3, 4}})) {
        half.push_back(e);
    }
    auto clique = spokes;
    for (const auto& e : undirected({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}})) {
        clique.push_back(e);
    }
    CHECK(clusteringCoefficient(makeNet(5, spokes), 0) == 0.0);
    CHECK(clusteringCoefficient(makeNet(5, half), 0) == doctest::Approx(0.5));
    CHECK(clusteringCoefficient(makeNet(5, clique), 0) == doctest::Approx(1.0));
    CHECK(clusteringCoefficient(makeNet(5, spokes), 1) == 0.0);
    CHECK_THROWS_AS(clusteringCoefficient(makeNet(5, spokes), 5), std::invalid_argument);
}

TEST_CASE("clustering uses the undirected projection and ignores self-loops") {
    const auto net = makeNet(3, {{0, 1, 0.2}, {2, 0, 0.3}, {1, 2, 0.1}, {0, 0, 0.5}});
    CHECK(clusteringCoefficient(net, 0) == 1.0);
    const auto tree = makeNet(4, undirected({{0, 1}, {1, 2}, {1, 3}}));
    for (auto c : clusteringCoefficients(tree)) {
        CHECK(c == 0.0);
    }
}

TEST_CASE("weighted clustering") {
    const auto triangle = makeNet(3, undirected({{0, 1}, {1, 2}, {0, 2}}, 0.4));
    for (std::uint32_t i = 0; i < 3; ++i) {
        CHECK(weightedClustering(triangle, i) == doctest::Approx(1.0).epsilon(1e-15));
    }
    const auto star = makeNet(4, undirected({{0, 1}, {0, 2}, {0, 3}}));
    CHECK(weightedClustering(star, 0) == 0.0);
    CHECK(weightedClustering(star, 1) == 0.0);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto net = randomNet(seed < 10 ? 5 : 30, 0.5, seed);
        const auto dense = oracle::dense(net);
        const auto all = weightedClusterings(net);
        for (std::uint32_t i = 0; i < net.nodeCount(); ++i) {
            CHECK(all[i] == doctest::Approx(oracle::weightedClustering(dense, i)).epsilon(1e-12));
            CHECK(weightedClustering(net, i) == all[i]);
        }
    }
}

TEST_CASE("weighted clustering of symmetric networks stays in [0,1]") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Rng rng(seed);
        std::vector<LonEdge> edges;
        for (std::uint32_t i = 0; i < 12; ++i) {
            for (std::uint32_t j = i + 1; j < 12; ++j) {
                if (rng.uniform01() < 0.6) {
                    const double w = 0.05 + rng.uniform01();
                    edges.push_back({i, j, w});
                    edges.push_back({j, i, w});
                }
            }
        }
        for (const double c : weightedClusterings(makeNet(12, edges))) {
            CHECK(c >= 0.0);
            CHECK(c <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("disparity") {
    const auto uniform = makeNet(5, {{0, 1, 0.2}, {0, 2, 0.2}, {0, 3, 0.2}, {0, 4, 0.2}, {0, 0, 0.2}});
    CHECK(*disparity(uniform, 0) == doctest::Approx(0.25).epsilon(1e-15));
    const auto single = makeNet(2, {{0, 1, 0.3}, {0, 0, 0.7}});
    CHECK(*disparity(single, 0) == 1.0);
    CHECK_FALSE(disparity(single, 1).has_value());
    const auto net = randomNet(20, 0.3, 5);
    for (std::uint32_t i = 0; i < 20; ++i) {
        const auto y = disparity(net, i);
        const auto k = outDegree(net, i);
        if (k == 0) {
            CHECK_FALSE(y.has_value());
            continue;
        }
        CHECK(*y >= 1.0 / static_cast<double>(k) - 1e-12);
        CHECK(*y <= 1.0 + 1e-12);
    }
    CHECK_THROWS_AS(disparity(net, 20), std::invalid_argument);
}

TEST_CASE("shortest paths") {
    const auto two = makeNet(2, {{0, 1, 0.5}});
    const auto d = shortestPaths(two);
    CHECK(d.at(0, 1) == 2.0);
    CHECK(std::isinf(d.at(1, 0)));
    const auto avgTwo = averagePathLength(d);
    CHECK(*avgTwo.mean == 2.0);
    CHECK(avgTwo.unreachablePairs == 1);

    const auto cycle = makeNet(3, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 0, 1.0}, {1, 0, 1.0}, {2, 1, 1.0}, {0, 2, 1.0}});
    CHECK(*averagePathLength(shortestPaths(cycle)).mean == 1.0);

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto net = randomNet(30, 0.12, 100 + seed);
        const auto fast = shortestPaths(net, 3);
        const auto slow = oracle::allPairs(oracle::dense(net));
        for (std::size_t i = 0; i < 30; ++i) {
            for (std::size_t j = 0; j < 30; ++j) {
                if (std::isinf(slow[i][j])) {
                    CHECK(std::isinf(fast.at(i, j)));
                } else {
                    CHECK(fast.at(i, j) == doctest::Approx(slow[i][j]).epsilon(1e-12));
                }
                for (std::size_t k = 0; k < 30; ++k) {
                    CHECK(fast.at(i, j) <= fast.at(i, k) + fast.at(k, j) + 1e-9);
                }
            }
        }
        const auto target = net.globalOptimum();
        const auto back = distancesTo(net, target);
        for (std::size_t i = 0; i < 30; ++i) {
            if (std::isinf(slow[i][target])) {
                CHECK(std::isinf(back[i]));
            } else {
                CHECK(back[i] == doctest::Approx(slow[i][target]).epsilon(1e-12));
            }
        }
        const auto viaTable = pathToGlobalOptimum(net, fast);
        const auto viaReverse = pathToGlobalOptimum(net);
        CHECK(viaTable.reachable == viaReverse.reachable);
        if (viaTable.mean) {
            CHECK(*viaTable.mean == doctest::Approx(*viaReverse.mean).epsilon(1e-12));
        }
    }
}

TEST_CASE("path to the global optimum conventions") {
    const auto single = makeNet(1, {{0, 0, 1.0}});
    const auto g = pathToGlobalOptimum(single);
    CHECK(g.singleNode);
    CHECK(*g.mean == 0.0);
    const auto cut = makeNet(3, {{2, 0, 1.0}});
    CHECK_FALSE(pathToGlobalOptimum(cut).mean.has_value());
    // Global optimum under minimization is the lowest fitness.
    const auto low = makeNet(3, {{1, 0, 0.5}, {2, 0, 0.25}}, Direction::minimize);
    CHECK(*pathToGlobalOptimum(low).mean == doctest::Approx(3.0));
}

TEST_CASE("distributions") {
    std::vector<LonEdge> ring;
    for (std::uint32_t i = 0; i < 8; ++i) {
        ring.push_back({i, (i + 1) % 8, 0.25});
        ring.push_back({i, (i + 3) % 8, 0.25});
        ring.push_back({i, i, 0.5});
    }
    const auto d = degreeAndWeightDistributions(makeNet(8, ring));
    REQUIRE(d.outDegree.size() == 1);
    CHECK(d.outDegree[0].degree == 2);
    CHECK(d.outDegree[0].probability == 1.0);
    REQUIRE(d.inDegree.size() == 1);
    CHECK(d.inDegree[0].degree == 2);

    const auto net = randomNet(40, 0.2, 9);
    const auto dist = degreeAndWeightDistributions(net, 5);
    for (const auto* bins : {&dist.inDegree, &dist.outDegree}) {
        double sum = 0.0;
        for (const auto& b : *bins) {
            sum += b.probability;
        }
        CHECK(std::abs(sum - 1.0) <= 1e-12);
        CHECK(bins->front().complementaryCumulative == doctest::Approx(1.0));
    }
    for (const auto* bins : {&dist.inWeight, &dist.outWeight}) {
        double sum = 0.0;
        for (const auto& b : *bins) {
            sum += b.probability;
            CHECK(b.upper == doctest::Approx(b.lower * std::pow(10.0, 0.2)));
        }
        CHECK(std::abs(sum - 1.0) <= 1e-12);
    }
    // Every weight lands in the bin whose edges enclose it.
    std::size_t counted = 0;
    for (const auto& e : net.edges()) {
        if (e.source == e.target) {
            continue;
        }
        ++counted;
        bool found = false;
        for (const auto& b : dist.outWeight) {
            found = found || (b.lower <= e.weight && e.weight < b.upper);
        }
        CHECK(found);
    }
    CHECK(counted > 0);
}

TEST_CASE("report") {
    const auto single = buildReport(makeNet(1, {{0, 0, 1.0}}));
    CHECK(single.nodeCount == 1);
    CHECK(single.edgeDensity == 1.0);
    CHECK(single.edgeDensityPercent == 100.0);
    CHECK_FALSE(single.meanPathLength.has_value());
    CHECK(single.selfLoopMeanWeight == 1.0);
    CHECK(single.selfLoopPolicy.size() >= 5);

    const auto net = randomNet(25, 0.3, 4);
    const auto r = buildReport(net);
    CHECK(r.edgeDensityPercent == doctest::Approx(100.0 * r.edgeDensity).epsilon(1e-15));
    CHECK(r.edgeDensity >= 0.0);
    CHECK(r.edgeDensity <= 1.0);
    for (const double c : clusteringCoefficients(net)) {
        CHECK(c >= 0.0);
        CHECK(c <= 1.0);
    }
    const auto skipped = buildReport(net, {.pathLengthNodeLimit = 10});
    CHECK(skipped.pathLengthSkipped);
    CHECK_FALSE(skipped.meanPathLength.has_value());
    CHECK(*skipped.pathToGlobal.mean == doctest::Approx(*r.pathToGlobal.mean).epsilon(1e-12));
    CHECK(reportCsvHeader().find("edge_density") != std::string::npos);
    CHECK(reportText(r).find("mean disparity") != std::string::npos);
}

} // TEST_SUITE

TEST_SUITE("communities") {

namespace {

LocalOptimaNetwork twoCliques() {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t a = 0; a < 5; ++a) {
        for (std::uint32_t b = a + 1; b < 5; ++b) {
            pairs.push_back({a, b});
            pairs.push_back({a + 5, b + 5});
        }
    }
    pairs.push_back({4, 5});
    return makeNet(10, undirected(pairs));
}

} // namespace

TEST_CASE("two cliques joined by a bridge") {
    const auto net = twoCliques();
    const auto part = detectCommunities(net);
    CHECK(part.communityCount == 2);
    for (std::uint32_t i = 0; i < 10; ++i) {
        CHECK(part.assignment[i] == (i < 5 ? 0u : 1u));
    }
    CHECK(part.modularity > 0.3);
    // Brute force over all 2-partitions: none beats the recovered one.
    double best = -1.0;
    for (std::uint32_t mask = 1; mask < (1u << 10) - 1; ++mask) {
        std::vector<std::uint32_t> a(10);
        for (std::uint32_t i = 0; i < 10; ++i) {
            a[i] = (mask >> i) & 1;
        }
        best = std::max(best, modularity(net, a));
    }
    CHECK(part.modularity == doctest::Approx(best).epsilon(1e-12));
}

TEST_CASE("uniform complete network has no structure") {
    std::vector<LonEdge> edges;
    for (std::uint32_t i = 0; i < 8; ++i) {
        for (std::uint32_t j = 0; j < 8; ++j) {
            if (i != j) {
                edges.push_back({i, j, 0.1});
            }
        }
    }
    const auto part = detectCommunities(makeNet(8, edges));
    CHECK(std::abs(part.modularity) < 1e-12);
}

TEST_CASE("single node and edgeless networks") {
    const auto one = detectCommunities(makeNet(1, {{0, 0, 1.0}}));
    CHECK(one.communityCount == 1);
    CHECK(one.modularity == 0.0);
    const auto none = detectCommunities(makeNet(3, {}));
    CHECK(none.assignment.size() == 3);
    CHECK(none.modularity == 0.0);
}

TEST_CASE("partition is invariant under weight scaling") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const auto net = randomNet(25, 0.15, 50 + seed, false);
        std::vector<LonEdge> scaled = net.edges();
        for (auto& e : scaled) {
            e.weight *= 7.25;
        }
        const auto a = detectCommunities(net);
        const auto b = detectCommunities(makeNet(25, scaled));
        CHECK(a.assignment == b.assignment);
        CHECK(a.modularity >= -0.5);
        CHECK(a.modularity <= 1.0);
    }
}

TEST_CASE("greedy result is at least as good as singletons") {
    const auto net = randomNet(30, 0.1, 3, false);
    const auto part = detectCommunities(net);
    std::vector<std::uint32_t> singletons(30);
    for (std::uint32_t i = 0; i < 30; ++i) {
        singletons[i] = i;
    }
    CHECK(part.modularity >= modularity(net, singletons) - 1e-12);
    CHECK(part.modularity == doctest::Approx(modularity(net, part.assignment)).epsilon(1e-12));
}

} // TEST_SUITE
