#include <lonet/network_io.hpp>

#include <lonet/format.hpp>
#include <lonet/version.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace lonet::io {

namespace {

std::string hex(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string xmlEscape(std::string_view s) {
    std::string out;
    for (const char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string dotEscape(std::string_view s) {
    std::string out;
    for (const char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out;
}

std::string directionName(Direction d) {
    return d == Direction::maximize ? "maximize" : "minimize";
}

std::string basinText(const LonNode& n) {
    return n.basinSize ? std::to_string(*n.basinSize) : std::string("NA");
}

std::string pajek(const LocalOptimaNetwork& net, const Provenance& p) {
    std::string out = provenanceLine(p, "%");
    out += "% network " + net.provenance() + "\n";
    out += "% edge-model " + net.model().label() + "\n";
    out += "% direction " + directionName(net.direction()) + "\n";
    for (const auto& n : net.nodes()) {
        out += "% node " + std::to_string(n.id) + " rep=" + std::to_string(n.representative) +
               " fitness=" + shortestDecimal(n.fitness) + " basin=" + basinText(n) + "\n";
    }
    out += "*Vertices " + std::to_string(net.nodeCount()) + "\n";
    for (const auto& n : net.nodes()) {
        out += std::to_string(n.id + 1) + " \"" + std::to_string(n.id) + "\"\n";
    }
    out += "*Arcs\n";
    for (const auto& e : net.edges()) {
        out += std::to_string(e.source + 1) + " " + std::to_string(e.target + 1) + " " +
               shortestDecimal(e.weight) + "\n";
    }
    return out;
}

std::string graphml(const LocalOptimaNetwork& net, const Provenance& p) {
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<!-- " + provenanceLine(p, "").substr(1);
    out.pop_back();
    out += " -->\n";
    out += "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
    const char* keys[][4] = {
        {"g_model", "graph", "edge_model", "string"},
        {"g_distance", "graph", "escape_distance", "int"},
        {"g_normalized", "graph", "normalized", "boolean"},
        {"g_direction", "graph", "direction", "string"},
        {"g_network", "graph", "network", "string"},
        {"g_tool", "graph", "tool_version", "string"},
        {"g_spec", "graph", "spec_hash", "string"},
        {"g_seed", "graph", "seed", "long"},
        {"n_fitness", "node", "fitness", "double"},
        {"n_basin", "node", "basin_size", "long"},
        {"n_rep", "node", "representative", "long"},
        {"e_weight", "edge", "weight", "double"},
    };
    for (const auto& k : keys) {
        out += std::string("  <key id=\"") + k[0] + "\" for=\"" + k[1] + "\" attr.name=\"" + k[2] +
               "\" attr.type=\"" + k[3] + "\"/>\n";
    }
    out += "  <graph id=\"lon\" edgedefault=\"directed\">\n";
    const auto data = [&](const std::string& key, const std::string& value) {
        return "<data key=\"" + key + "\">" + xmlEscape(value) + "</data>";
    };
    out += "    " + data("g_model", net.model().label()) + "\n";
    out += "    " + data("g_distance", std::to_string(net.model().distance)) + "\n";
    out += "    " + data("g_normalized", net.model().normalized ? "true" : "false") + "\n";
    out += "    " + data("g_direction", directionName(net.direction())) + "\n";
    out += "    " + data("g_network", net.provenance()) + "\n";
    out += "    " + data("g_tool", p.toolVersion) + "\n";
    out += "    " + data("g_spec", hex(p.specHash)) + "\n";
    out += "    " + data("g_seed", std::to_string(p.seed)) + "\n";
    for (const auto& n : net.nodes()) {
        out += "    <node id=\"n" + std::to_string(n.id) + "\">" +
               data("n_fitness", shortestDecimal(n.fitness));
        if (n.basinSize) {
            out += data("n_basin", std::to_string(*n.basinSize));
        }
        out += data("n_rep", std::to_string(n.representative)) + "</node>\n";
    }
    for (const auto& e : net.edges()) {
        out += "    <edge source=\"n" + std::to_string(e.source) + "\" target=\"n" +
               std::to_string(e.target) + "\">" + data("e_weight", shortestDecimal(e.weight)) +
               "</edge>\n";
    }
    out += "  </graph>\n</graphml>\n";
    return out;
}

std::string dot(const LocalOptimaNetwork& net, const Provenance& p) {
    std::string out = provenanceLine(p, "//");
    out += "digraph lon {\n";
    out += "  graph [edge_model=\"" + net.model().label() + "\", direction=\"" +
           directionName(net.direction()) + "\", network=\"" + dotEscape(net.provenance()) +
           "\"];\n";
    for (const auto& n : net.nodes()) {
        out += "  n" + std::to_string(n.id) + " [fitness=" + shortestDecimal(n.fitness) +
               ", basin_size=\"" + basinText(n) + "\"];\n";
    }
    for (const auto& e : net.edges()) {
        out += "  n" + std::to_string(e.source) + " -> n" + std::to_string(e.target) +
               " [weight=" + shortestDecimal(e.weight) + "];\n";
    }
    out += "}\n";
    return out;
}

std::string edgeCsv(const LocalOptimaNetwork& net, const Provenance& p) {
    std::string out = provenanceLine(p, "#");
    out += "src,dst,weight\n";
    for (const auto& e : net.edges()) {
        out += std::to_string(e.source) + "," + std::to_string(e.target) + "," +
               shortestDecimal(e.weight) + "\n";
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

bool startsWith(std::string_view s, std::string_view prefix) {
    return s.substr(0, prefix.size()) == prefix;
}

struct NodeMeta {
    bool seen = false;
    Rank representative = 0;
    double fitness = 0.0;
    std::optional<std::uint64_t> basin;
};

} // namespace

std::string toString(NetworkFormat format) {
    switch (format) {
    case NetworkFormat::pajek: return "pajek";
    case NetworkFormat::graphml: return "graphml";
    case NetworkFormat::dot: return "dot";
    case NetworkFormat::edgeCsv: return "edge-csv";
    }
    return "?";
}

NetworkFormat parseNetworkFormat(std::string_view name) {
    for (const auto f : {NetworkFormat::pajek, NetworkFormat::graphml, NetworkFormat::dot,
                         NetworkFormat::edgeCsv}) {
        if (toString(f) == name) {
            return f;
        }
    }
    throw std::invalid_argument("unknown network format '" + std::string(name) + "'");
}

std::string extension(NetworkFormat format) {
    switch (format) {
    case NetworkFormat::pajek: return ".net";
    case NetworkFormat::graphml: return ".graphml";
    case NetworkFormat::dot: return ".dot";
    case NetworkFormat::edgeCsv: return ".edges.csv";
    }
    return "";
}

Provenance provenanceFor(std::string_view commandLine, std::uint64_t seed) {
    return {kToolVersion, fnv1a64(commandLine), seed};
}

std::string provenanceLine(const Provenance& p, std::string_view commentPrefix) {
    return std::string(commentPrefix) + " " + kToolName + " " + p.toolVersion +
           " spec=" + hex(p.specHash) + " seed=" + std::to_string(p.seed) + "\n";
}

std::string exportNetwork(const LocalOptimaNetwork& net, NetworkFormat format,
                          const Provenance& provenance) {
    switch (format) {
    case NetworkFormat::pajek: return pajek(net, provenance);
    case NetworkFormat::graphml: return graphml(net, provenance);
    case NetworkFormat::dot: return dot(net, provenance);
    case NetworkFormat::edgeCsv: return edgeCsv(net, provenance);
    }
    throw std::invalid_argument("unknown network format");
}

LocalOptimaNetwork importPajek(std::string_view text) {
    std::string provenance;
    EdgeModel model;
    Direction direction = Direction::maximize;
    std::vector<NodeMeta> meta;
    std::vector<LonEdge> edges;
    std::size_t vertexCount = 0;
    bool haveVertices = false;
    enum class Section { header, vertices, arcs } section = Section::header;

    std::size_t lineNo = 0;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t end = text.find('\n', begin);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ++lineNo;
        const std::string_view line = trim(text.substr(begin, end - begin));
        begin = end + 1;
        if (line.empty()) {
            continue;
        }
        const auto fail = [&](const std::string& what) { throw ParseError(what, lineNo, 1); };
        if (line.front() == '%') {
            const std::string_view body = trim(line.substr(1));
            if (startsWith(body, "network ")) {
                provenance = std::string(trim(body.substr(8)));
            } else if (startsWith(body, "edge-model ")) {
                try {
                    model = EdgeModel::parse(std::string(trim(body.substr(11))));
                } catch (const std::invalid_argument& e) {
                    fail(e.what());
                }
            } else if (startsWith(body, "direction ")) {
                const auto d = trim(body.substr(10));
                if (d == "maximize") {
                    direction = Direction::maximize;
                } else if (d == "minimize") {
                    direction = Direction::minimize;
                } else {
                    fail("unknown direction '" + std::string(d) + "'");
                }
            } else if (startsWith(body, "node ")) {
                TokenStream ts(body.substr(5));
                const auto id = ts.nextUnsigned("node id");
                NodeMeta m;
                m.seen = true;
                while (!ts.done()) {
                    const auto tok = ts.next("node attribute");
                    const auto eq = tok.text.find('=');
                    if (eq == std::string_view::npos) {
                        fail("malformed node attribute '" + std::string(tok.text) + "'");
                    }
                    const std::string key(tok.text.substr(0, eq));
                    const std::string value(tok.text.substr(eq + 1));
                    TokenStream vs(value);
                    try {
                        if (key == "rep") {
                            m.representative = vs.nextUnsigned("rep");
                        } else if (key == "fitness") {
                            m.fitness = vs.nextDouble("fitness");
                        } else if (key == "basin") {
                            if (value != "NA") {
                                m.basin = vs.nextUnsigned("basin");
                            }
                        }
                    } catch (const ParseError& e) {
                        fail(e.what());
                    }
                }
                if (meta.size() <= id) {
                    meta.resize(id + 1);
                }
                meta[id] = m;
            }
            continue;
        }
        if (line.front() == '*') {
            TokenStream ts(line);
            const auto head = ts.next("section");
            std::string lower(head.text);
            for (auto& c : lower) {
                c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            }
            if (lower == "*vertices") {
                try {
                    vertexCount = ts.nextUnsigned("vertex count");
                } catch (const ParseError& e) {
                    fail(e.what());
                }
                haveVertices = true;
                section = Section::vertices;
            } else if (lower == "*arcs") {
                if (!haveVertices) {
                    fail("*Arcs before *Vertices");
                }
                section = Section::arcs;
            } else {
                fail("unsupported Pajek section '" + std::string(head.text) + "'");
            }
            continue;
        }
        try {
            TokenStream ts(line);
            if (section == Section::vertices) {
                const auto v = ts.nextUnsigned("vertex number");
                if (v < 1 || v > vertexCount) {
                    fail("vertex number out of range");
                }
            } else if (section == Section::arcs) {
                const auto s = ts.nextUnsigned("arc source");
                const auto t = ts.nextUnsigned("arc target");
                const double w = ts.done() ? 1.0 : ts.nextDouble("arc weight");
                if (s < 1 || s > vertexCount || t < 1 || t > vertexCount) {
                    fail("arc endpoint out of range");
                }
                edges.push_back({static_cast<std::uint32_t>(s - 1),
                                 static_cast<std::uint32_t>(t - 1), w});
            } else {
                fail("content before *Vertices");
            }
        } catch (const ParseError& e) {
            if (e.line() == lineNo) {
                throw;
            }
            throw ParseError(e.what(), lineNo, e.column());
        }
    }
    if (!haveVertices) {
        throw ParseError("missing *Vertices section", lineNo, 1);
    }
    if (meta.size() > vertexCount) {
        throw ParseError("node metadata for a vertex beyond *Vertices", lineNo, 1);
    }
    std::vector<LonNode> nodes(vertexCount);
    for (std::size_t i = 0; i < vertexCount; ++i) {
        nodes[i].id = static_cast<std::uint32_t>(i);
        if (i < meta.size() && meta[i].seen) {
            nodes[i].fitness = meta[i].fitness;
            nodes[i].basinSize = meta[i].basin;
            nodes[i].representative = meta[i].representative;
        }
    }
    try {
        return LocalOptimaNetwork(std::move(nodes), std::move(edges), model, direction,
                                  provenance);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), lineNo, 1);
    }
}

std::string basinCsv(const BasinMap& basins, const Provenance& provenance) {
    std::string out = provenanceLine(provenance, "#");
    out += "optimum,representative,fitness,basin_size,interior_count\n";
    for (const auto& o : basins.optima) {
        out += std::to_string(o.id) + "," + std::to_string(o.representative) + "," +
               shortestDecimal(o.fitness) + "," + std::to_string(o.basinSize) + "," +
               std::to_string(o.interiorCount) + "\n";
    }
    return out;
}

std::string readFile(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw IoError("error while reading '" + path.string() + "'");
    }
    return buffer.str();
}

void writeOutputs(const std::vector<std::pair<std::filesystem::path, std::string>>& files) {
    std::vector<std::filesystem::path> written;
    try {
        for (const auto& [path, content] : files) {
            std::error_code ec;
            if (path.has_parent_path()) {
                std::filesystem::create_directories(path.parent_path(), ec);
                if (ec) {
                    throw IoError("cannot create directory '" + path.parent_path().string() +
                                  "': " + ec.message());
                }
            }
            std::ofstream out(path, std::ios::binary | std::ios::trunc);
            if (!out) {
                throw IoError("cannot write '" + path.string() + "'");
            }
            written.push_back(path);
            out << content;
            out.close();
            if (!out) {
                throw IoError("error while writing '" + path.string() + "'");
            }
        }
    } catch (...) {
        for (const auto& p : written) {
            std::error_code ignored;
            std::filesystem::remove(p, ignored);
        }
        throw;
    }
}

std::filesystem::path defaultOutputDirectory() {
    const char* env = std::getenv("LONET_OUT_DIR");
    return env != nullptr && *env != '\0' ? std::filesystem::path(env) : std::filesystem::path(".");
}

} // namespace lonet::io
