#include <doctest.h>

#include <lonet/basins.hpp>
#include <lonet/format.hpp>
#include <lonet/metrics.hpp>
#include <lonet/network_io.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace lonet;
namespace fs = std::filesystem;

namespace {

const io::Provenance kProv{"0.1.0", 0x1234, 7};

LocalOptimaNetwork sampleLon(unsigned workers = 1) {
    const Landscape L(nk::generateNk(12, 3, 8));
    const auto bm = enumerateBasins(L, {.workers = workers});
    return basinTransitionLon(L, bm, {workers});
}

std::size_t countOf(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
        ++n;
    }
    return n;
}

fs::path scratchDir(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("lonet-test-" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("one-node network in every format") {
    const LocalOptimaNetwork net({{0, 0.75, 16, 3}}, {{0, 0, 1.0}}, EdgeModel{}, Direction::maximize,
                                 "nk N=4 K=0 seed=1");
    const auto pajek = io::exportNetwork(net, io::NetworkFormat::pajek, kProv);
    CHECK(pajek.find("*Vertices 1\n1 \"0\"\n*Arcs\n1 1 1\n") != std::string::npos);
    const auto graphml = io::exportNetwork(net, io::NetworkFormat::graphml, kProv);
    CHECK(graphml.rfind("<?xml", 0) == 0);
    CHECK(countOf(graphml, "<node ") == 1);
    CHECK(countOf(graphml, "<edge ") == 1);
    CHECK(graphml.find("</graphml>") != std::string::npos);
    const auto dot = io::exportNetwork(net, io::NetworkFormat::dot, kProv);
    CHECK(dot.find("digraph lon {") != std::string::npos);
    CHECK(dot.find("n0 -> n0 [weight=1];") != std::string::npos);
    const auto csv = io::exportNetwork(net, io::NetworkFormat::edgeCsv, kProv);
    CHECK(csv == "# lonet 0.1.0 spec=0000000000001234 seed=7\nsrc,dst,weight\n0,0,1\n");
}

TEST_CASE("every export carries provenance") {
    const auto net = sampleLon();
    for (const auto f : {io::NetworkFormat::pajek, io::NetworkFormat::graphml, io::NetworkFormat::dot,
                         io::NetworkFormat::edgeCsv}) {
        const auto text = io::exportNetwork(net, f, kProv);
        CHECK(text.find("lonet 0.1.0 spec=0000000000001234 seed=7") != std::string::npos);
        CHECK((io::parseNetworkFormat(io::toString(f)) == f));
    }
    CHECK_THROWS_AS(io::parseNetworkFormat("gml"), std::invalid_argument);
}

TEST_CASE("edge CSV uses shortest round-trip weights") {
    const auto net = sampleLon();
    const auto csv = io::exportNetwork(net, io::NetworkFormat::edgeCsv, kProv);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    std::getline(in, line);
    CHECK(line == "src,dst,weight");
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        const auto a = line.find(',');
        const auto b = line.find(',', a + 1);
        const auto& e = net.edges()[rows];
        CHECK(std::stoul(line.substr(0, a)) == e.source);
        CHECK(std::stoul(line.substr(a + 1, b - a - 1)) == e.target);
        CHECK(line.substr(b + 1) == shortestDecimal(e.weight));
        CHECK(std::stod(line.substr(b + 1)) == e.weight);
        ++rows;
    }
    CHECK(rows == net.edgeCount());
}

TEST_CASE("DOT node count equals the optima count") {
    const Landscape L(nk::generateNk(18, 2, 7));
    const auto bm = enumerateBasins(L);
    const auto net = basinTransitionLon(L, bm);
    const auto dot = io::exportNetwork(net, io::NetworkFormat::dot, kProv);
    CHECK(countOf(dot, "[fitness=") == bm.optima.size());
    CHECK(countOf(dot, " -> ") == net.edgeCount());
}

TEST_CASE("Pajek round-trip keeps the network and its metrics") {
    for (const auto& net : {sampleLon(),
                            escapeLon(Landscape(qap::generateUniformQap(6, 2)),
                                      enumerateBasins(Landscape(qap::generateUniformQap(6, 2))), 2,
                                      false)}) {
        const auto text = io::exportNetwork(net, io::NetworkFormat::pajek, kProv);
        const auto back = io::importPajek(text);
        CHECK(back == net);
        CHECK(metrics::reportCsvRow(metrics::buildReport(back)) ==
              metrics::reportCsvRow(metrics::buildReport(net)));
        CHECK(io::exportNetwork(back, io::NetworkFormat::pajek, kProv) == text);
    }
}

TEST_CASE("plain Pajek files load") {
    const auto net = io::importPajek("*Vertices 3\n1 \"a\"\n2 \"b\"\n3 \"c\"\n*arcs\n1 2 0.5\n2 3\n");
    CHECK(net.nodeCount() == 3);
    CHECK(net.weight(0, 1) == 0.5);
    CHECK(net.weight(1, 2) == 1.0);
    CHECK_FALSE(net.nodes()[0].basinSize.has_value());
}

TEST_CASE("malformed Pajek input") {
    CHECK_THROWS_AS(io::importPajek(""), ParseError);
    CHECK_THROWS_AS(io::importPajek("*Arcs\n1 2 1\n"), ParseError);
    CHECK_THROWS_AS(io::importPajek("*Vertices 2\n*Arcs\n1 3 1\n"), ParseError);
    CHECK_THROWS_AS(io::importPajek("*Vertices 2\n*Arcs\n1 2 0\n"), ParseError);
    CHECK_THROWS_AS(io::importPajek("*Vertices 2\n*Edges\n1 2 1\n"), ParseError);
    CHECK_THROWS_AS(io::importPajek("% edge-model nope\n*Vertices 1\n"), ParseError);
    try {
        io::importPajek("*Vertices 2\n*Arcs\n1 2 1\n2 x 1\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
}

TEST_CASE("exports do not depend on the worker count") {
    const auto one = sampleLon(1);
    const auto many = sampleLon(4);
    for (const auto f : {io::NetworkFormat::pajek, io::NetworkFormat::graphml, io::NetworkFormat::dot,
                         io::NetworkFormat::edgeCsv}) {
        CHECK(io::exportNetwork(one, f, kProv) == io::exportNetwork(many, f, kProv));
    }
}

TEST_CASE("basin CSV") {
    const Landscape L(nk::generateNk(8, 2, 1));
    const auto bm = enumerateBasins(L);
    const auto csv = io::basinCsv(bm, kProv);
    CHECK(csv.find("optimum,representative,fitness,basin_size,interior_count\n") != std::string::npos);
    CHECK(countOf(csv, "\n") == bm.optima.size() + 2);
}

TEST_CASE("writing outputs") {
    const auto dir = scratchDir("write");
    io::writeOutputs({{dir / "a" / "x.txt", "hello"}, {dir / "y.txt", "world"}});
    CHECK(io::readFile(dir / "a" / "x.txt") == "hello");
    CHECK(io::readFile(dir / "y.txt") == "world");

    // A later failure removes what this call already wrote.
    std::ofstream(dir / "blocker") << "file";
    CHECK_THROWS_AS(io::writeOutputs({{dir / "first.txt", "1"}, {dir / "blocker" / "second.txt", "2"}}),
                    io::IoError);
    CHECK_FALSE(fs::exists(dir / "first.txt"));
    CHECK_THROWS_AS(io::readFile(dir / "missing.txt"), io::IoError);
    fs::remove_all(dir);
}

TEST_CASE("default output directory follows the environment") {
    ::setenv("LONET_OUT_DIR", "/tmp/somewhere", 1);
    CHECK(io::defaultOutputDirectory() == fs::path("/tmp/somewhere"));
    ::unsetenv("LONET_OUT_DIR");
    CHECK(io::defaultOutputDirectory() == fs::path("."));
}

} // TEST_SUITE
