/// @file network_io.hpp
/// @brief Network exports, the Pajek importer and output file handling.

#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <lonet/basins.hpp>
#include <lonet/network.hpp>

namespace lonet::io {

enum class NetworkFormat { pajek, graphml, dot, edgeCsv };

/// `pajek`, `graphml`, `dot`, `edge-csv`.
std::string toString(NetworkFormat format);
/// @throws std::invalid_argument on an unknown name
NetworkFormat parseNetworkFormat(std::string_view name);
/// `.net`, `.graphml`, `.dot`, `.edges.csv`.
std::string extension(NetworkFormat format);

/// Run identity written into every output header.
struct Provenance {
    std::string toolVersion;
    std::uint64_t specHash = 0;
    std::uint64_t seed = 0;
};

/// Provenance for the given command line.
Provenance provenanceFor(std::string_view commandLine, std::uint64_t seed);

/// One-line `<prefix> lonet <version> spec=<hash> seed=<seed>` header.
std::string provenanceLine(const Provenance& p, std::string_view commentPrefix);

/// Deterministic text for `net`: nodes by id, edges by (source, target),
/// weights and fitness as shortest round-trip decimals.
///
/// Pajek carries node attributes and graph metadata in `%` comment lines,
/// which importPajek reads back.
std::string exportNetwork(const LocalOptimaNetwork& net, NetworkFormat format,
                          const Provenance& provenance);

/// Reads a Pajek file written by exportNetwork. Plain Pajek files without the
/// comment metadata load with zero fitness and no basin sizes.
/// @throws lonet::ParseError on malformed input
LocalOptimaNetwork importPajek(std::string_view text);

/// `optimum,representative,fitness,basin_size,interior_count` per local optimum.
std::string basinCsv(const BasinMap& basins, const Provenance& provenance);

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// @throws IoError when the file cannot be read
std::string readFile(const std::filesystem::path& path);

/// Writes every (path, content) pair, creating parent directories. If any
/// write fails, the files already written by this call are removed.
/// @throws IoError on failure
void writeOutputs(const std::vector<std::pair<std::filesystem::path, std::string>>& files);

/// Default output directory: $LONET_OUT_DIR when set, otherwise `.`.
std::filesystem::path defaultOutputDirectory();

} // namespace lonet::io
