// lonet: command-line front end for landscape enumeration, LON extraction,
// network metrics, ILS runs and the ensemble tables.

#include <lonet/communities.hpp>
#include <lonet/experiments.hpp>
#include <lonet/format.hpp>
#include <lonet/ils.hpp>
#include <lonet/metrics.hpp>
#include <lonet/network_io.hpp>
#include <lonet/parallel.hpp>
#include <lonet/simd/kernels.hpp>
#include <lonet/version.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>

namespace fs = std::filesystem;
using namespace lonet;

namespace {

using Outputs = std::vector<std::pair<fs::path, std::string>>;

struct InstanceArgs {
    std::string problem;
    int N = 18;
    int K = 2;
    int n = 9;
    std::uint64_t seed = 1;
    std::string file;
};

struct CommonArgs {
    std::string out;
    unsigned workers = 0;
};

std::string canonicalCommandLine(int argc, char** argv) {
    std::string line;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--workers") {
            ++i;
            continue;
        }
        if (a.rfind("--workers=", 0) == 0) {
            continue;
        }
        line += a;
        line += '\x1f';
    }
    return line;
}

std::string g_commandLine;

io::Provenance provenance(std::uint64_t seed) {
    return io::provenanceFor(g_commandLine, seed);
}

fs::path outputDir(const CommonArgs& common) {
    return common.out.empty() ? io::defaultOutputDirectory() : fs::path(common.out);
}

unsigned workerCount(const CommonArgs& common) {
    return common.workers == 0 ? defaultWorkers() : common.workers;
}

void addInstanceOptions(CLI::App* app, InstanceArgs& args, bool required) {
    auto* problem = app->add_option("--problem", args.problem,
                                    "nk | qap-uniform | qap-reallike | qap-file | nk-file")
                        ->check(CLI::IsMember(
                            {"nk", "qap-uniform", "qap-reallike", "qap-file", "nk-file"}));
    if (required) {
        problem->required();
    }
    app->add_option("--N", args.N, "NK string length")->check(CLI::Range(1, 40));
    app->add_option("--K", args.K, "NK epistasis")->check(CLI::Range(0, 39));
    app->add_option("--n", args.n, "QAP size")->check(CLI::Range(2, 20));
    app->add_option("--seed", args.seed, "instance seed");
    app->add_option("--instance", args.file, "instance file for qap-file / nk-file");
}

void addCommonOptions(CLI::App* app, CommonArgs& common) {
    app->add_option("--out", common.out, "output directory (default $LONET_OUT_DIR or .)");
    app->add_option("--workers", common.workers, "worker threads (default: all cores)");
}

struct LoadedInstance {
    Landscape landscape;
    std::string stem;
};

LoadedInstance loadInstance(const InstanceArgs& a) {
    if (a.problem == "nk") {
        if (a.K >= a.N) {
            throw std::invalid_argument("K must be smaller than N");
        }
        return {Landscape(nk::generateNk(a.N, a.K, a.seed)),
                "nk-N" + std::to_string(a.N) + "-K" + std::to_string(a.K) + "-s" +
                    std::to_string(a.seed)};
    }
    if (a.problem == "qap-uniform") {
        return {Landscape(qap::generateUniformQap(a.n, a.seed)),
                "qap-uniform-n" + std::to_string(a.n) + "-s" + std::to_string(a.seed)};
    }
    if (a.problem == "qap-reallike") {
        return {Landscape(qap::generateRealLikeQap(a.n, a.seed)),
                "qap-real-like-n" + std::to_string(a.n) + "-s" + std::to_string(a.seed)};
    }
    if (a.file.empty()) {
        throw std::invalid_argument("--problem " + a.problem + " needs --instance FILE");
    }
    const std::string text = io::readFile(a.file);
    const std::string stem = fs::path(a.file).stem().string();
    if (a.problem == "qap-file") {
        return {Landscape(qap::loadQaplib(text)), stem};
    }
    return {Landscape(nk::parseNk(text)), stem};
}

EdgeModel parseEdges(const std::string& edges, int distance, bool raw) {
    if (edges == "basin") {
        return EdgeModel::basinTransition();
    }
    if (distance < 1) {
        throw std::invalid_argument("--D must be at least 1");
    }
    return EdgeModel::escape(distance, !raw);
}

LocalOptimaNetwork buildLon(const Landscape& landscape, const BasinMap& basins,
                            const EdgeModel& model, unsigned workers) {
    const ExtractionOptions options{workers};
    if (model.kind == EdgeModel::Kind::basinTransition) {
        return basinTransitionLon(landscape, basins, options);
    }
    return escapeLon(landscape, basins, model.distance, model.normalized, options);
}

std::string modelSuffix(const EdgeModel& model) {
    return model.kind == EdgeModel::Kind::basinTransition ? "basin" : model.label();
}

// Either imports a Pajek LON or enumerates an instance and extracts one.
struct LonSource {
    std::string lonFile;
    std::string edges = "basin";
    int distance = 1;
    bool raw = false;
};

void addLonOptions(CLI::App* app, LonSource& src) {
    app->add_option("--lon", src.lonFile, "Pajek network written by extract");
    app->add_option("--edges", src.edges, "basin | escape")
        ->check(CLI::IsMember({"basin", "escape"}));
    app->add_option("--D", src.distance, "escape distance")->check(CLI::Range(1, 64));
    app->add_flag("--raw", src.raw, "escape weights as raw counts");
}

std::pair<LocalOptimaNetwork, std::string> obtainLon(const LonSource& src,
                                                     const InstanceArgs& inst, unsigned workers) {
    if (!src.lonFile.empty()) {
        if (!inst.problem.empty()) {
            throw std::invalid_argument("give either --lon or --problem, not both");
        }
        return {io::importPajek(io::readFile(src.lonFile)),
                fs::path(src.lonFile).stem().string()};
    }
    if (inst.problem.empty()) {
        throw std::invalid_argument("a network is required: run extract first and pass --lon, "
                                    "or describe an instance with --problem");
    }
    const auto loaded = loadInstance(inst);
    const auto model = parseEdges(src.edges, src.distance, src.raw);
    const auto basins = enumerateBasins(loaded.landscape, {.workers = workers});
    return {buildLon(loaded.landscape, basins, model, workers),
            loaded.stem + "." + modelSuffix(model)};
}

// CSV with `#` comment lines and a header row.
struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t column(const std::string& name, const std::string& file) const {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (header[i] == name) {
                return i;
            }
        }
        throw std::invalid_argument("column '" + name + "' missing in " + file);
    }
};

std::vector<std::string> splitCsvLine(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        cells.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        cells.emplace_back();
    }
    return cells;
}

Csv readCsv(const std::string& file) {
    std::istringstream in(io::readFile(file));
    Csv csv;
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }
        auto cells = splitCsvLine(line);
        if (csv.header.empty()) {
            csv.header = std::move(cells);
        } else if (cells == csv.header) {
            continue;
        } else if (cells.size() != csv.header.size()) {
            throw ParseError(file + ": expected " + std::to_string(csv.header.size()) + " cells",
                             lineNo, 1);
        } else {
            csv.rows.push_back(std::move(cells));
        }
    }
    if (csv.header.empty()) {
        throw ParseError(file + ": empty CSV", lineNo, 1);
    }
    return csv;
}

std::vector<int> parseIntList(const std::string& text) {
    std::vector<int> out;
    for (const auto& cell : splitCsvLine(text)) {
        out.push_back(std::stoi(cell));
    }
    return out;
}

// ---- subcommands ----

struct GenerateArgs {
    InstanceArgs inst;
    CommonArgs common;
    std::size_t instances = 1;
};

void runGenerate(const GenerateArgs& a) {
    if (a.inst.problem == "qap-file" || a.inst.problem == "nk-file") {
        throw std::invalid_argument("generate needs a generated problem class");
    }
    Outputs outputs;
    for (std::size_t i = 0; i < a.instances; ++i) {
        InstanceArgs inst = a.inst;
        inst.seed = a.inst.seed + i;
        const auto loaded = loadInstance(inst);
        const auto prov = provenance(inst.seed);
        if (loaded.landscape.isNk()) {
            outputs.emplace_back(outputDir(a.common) / (loaded.stem + ".nk"),
                                 io::provenanceLine(prov, "#") + nk::toText(loaded.landscape.nkInstance()));
        } else {
            outputs.emplace_back(outputDir(a.common) / (loaded.stem + ".dat"),
                                 io::provenanceLine(prov, "#") + qap::toQaplib(loaded.landscape.qapInstance()));
        }
    }
    io::writeOutputs(outputs);
    for (const auto& [path, content] : outputs) {
        std::cout << path.string() << "\n";
    }
}

struct ExtractArgs {
    InstanceArgs inst;
    CommonArgs common;
    std::string edges = "basin";
    int distance = 1;
    bool raw = false;
    std::string formats = "pajek,graphml,edge-csv";
};

void runExtract(const ExtractArgs& a) {
    const unsigned workers = workerCount(a.common);
    const auto loaded = loadInstance(a.inst);
    const auto model = parseEdges(a.edges, a.distance, a.raw);
    const auto basins = enumerateBasins(loaded.landscape, {.workers = workers});
    const auto lon = buildLon(loaded.landscape, basins, model, workers);
    const auto prov = provenance(a.inst.seed);
    const fs::path dir = outputDir(a.common);
    const std::string stem = loaded.stem + "." + modelSuffix(model);
    Outputs outputs;
    for (const auto& name : splitCsvLine(a.formats)) {
        const auto format = io::parseNetworkFormat(name);
        outputs.emplace_back(dir / (stem + io::extension(format)),
                             io::exportNetwork(lon, format, prov));
    }
    outputs.emplace_back(dir / (loaded.stem + ".basins.csv"), io::basinCsv(basins, prov));
    io::writeOutputs(outputs);
    std::cout << loaded.landscape.describe() << ": " << lon.nodeCount() << " optima, "
              << lon.edgeCount() << " edges (" << model.label() << ")\n";
    for (const auto& [path, content] : outputs) {
        std::cout << path.string() << "\n";
    }
}

struct MetricsArgs {
    InstanceArgs inst;
    CommonArgs common;
    LonSource lon;
    std::size_t pathLimit = 4000;
    int binsPerDecade = 10;
};

void runMetrics(const MetricsArgs& a) {
    const unsigned workers = workerCount(a.common);
    const auto [lon, stem] = obtainLon(a.lon, a.inst, workers);
    metrics::ReportOptions options;
    options.pathLengthNodeLimit = a.pathLimit;
    options.binsPerDecade = a.binsPerDecade;
    options.workers = workers;
    const auto report = metrics::buildReport(lon, options);
    const auto prov = provenance(a.inst.seed);
    const fs::path dir = outputDir(a.common);
    const auto& d = report.distributions;
    const std::string header = io::provenanceLine(prov, "#");
    Outputs outputs{
        {dir / (stem + ".metrics.csv"),
         header + metrics::reportCsvHeader() + metrics::reportCsvRow(report)},
        {dir / (stem + ".metrics.txt"), header + metrics::reportText(report)},
        {dir / (stem + ".in-degree.csv"), header + metrics::degreeHistogramCsv(d.inDegree)},
        {dir / (stem + ".out-degree.csv"), header + metrics::degreeHistogramCsv(d.outDegree)},
        {dir / (stem + ".in-weight.csv"), header + metrics::weightHistogramCsv(d.inWeight)},
        {dir / (stem + ".out-weight.csv"), header + metrics::weightHistogramCsv(d.outWeight)},
        {dir / (stem + ".in-degree.ccdf.csv"),
         header + metrics::degreeHistogramCsv(d.inDegree, true)},
        {dir / (stem + ".out-degree.ccdf.csv"),
         header + metrics::degreeHistogramCsv(d.outDegree, true)},
        {dir / (stem + ".in-weight.ccdf.csv"),
         header + metrics::weightHistogramCsv(d.inWeight, true)},
        {dir / (stem + ".out-weight.ccdf.csv"),
         header + metrics::weightHistogramCsv(d.outWeight, true)},
    };
    io::writeOutputs(outputs);
    std::cout << metrics::reportText(report);
}

struct CommunitiesArgs {
    InstanceArgs inst;
    CommonArgs common;
    LonSource lon;
};

void runCommunities(const CommunitiesArgs& a) {
    const auto [lon, stem] = obtainLon(a.lon, a.inst, workerCount(a.common));
    const auto partition = detectCommunities(lon);
    const std::string header = io::provenanceLine(provenance(a.inst.seed), "#");
    const fs::path dir = outputDir(a.common);
    const std::string summary = "modularity: " + shortestDecimal(partition.modularity) +
                                "\ncommunities: " + std::to_string(partition.communityCount) +
                                "\nnodes: " + std::to_string(lon.nodeCount()) + "\n";
    io::writeOutputs({{dir / (stem + ".communities.csv"), header + partitionCsv(partition)},
                      {dir / (stem + ".modularity.txt"), header + summary}});
    std::cout << summary;
}

struct IlsArgs {
    InstanceArgs inst;
    CommonArgs common;
    std::uint64_t restarts = 500;
    std::uint64_t feMax = 0;
    int strength = 2;
    std::uint64_t runSeed = 1;
};

std::string ertCsvHeader() {
    return "label,runs,successes,success_rate,mean_success_evals,fe_max,ert\n";
}

std::string ertCsvRow(const std::string& label, const ils::ErtEstimate& e, std::uint64_t feMax) {
    return label + "," + std::to_string(e.runCount) + "," + std::to_string(e.successes) + "," +
           shortestDecimal(e.successRate) + "," +
           (e.meanSuccessEvals ? shortestDecimal(*e.meanSuccessEvals) : std::string("NA")) + "," +
           std::to_string(feMax) + "," + shortestDecimal(e.ert) + "\n";
}

void runIlsCommand(const IlsArgs& a) {
    const unsigned workers = workerCount(a.common);
    const auto loaded = loadInstance(a.inst);
    const auto& landscape = loaded.landscape;
    const auto table = tabulate(landscape, {.workers = workers});
    const auto basins = enumerateBasins(landscape, table, {.workers = workers});
    const std::uint64_t feMax =
        a.feMax > 0 ? a.feMax : ils::defaultBudget(landscape.searchSpaceSize());
    const auto study = experiments::studyIls(landscape, table, basins, a.restarts, feMax,
                                             a.strength, a.runSeed, workers);
    const std::string header = io::provenanceLine(provenance(a.runSeed), "#");
    const fs::path dir = outputDir(a.common);
    std::string label = landscape.describe();
    io::writeOutputs(
        {{dir / (loaded.stem + ".ils.csv"), header + ils::runsCsv(study.runs)},
         {dir / (loaded.stem + ".ert.csv"), header + ertCsvHeader() + ertCsvRow(label, study.ert, feMax)},
         {dir / (loaded.stem + ".ert.txt"), header + ils::ertText(study.ert, feMax)}});
    std::cout << label << "\n" << ils::ertText(study.ert, feMax);
}

struct CorrelateArgs {
    CommonArgs common;
    std::vector<std::string> metricsFiles;
    std::vector<std::string> ertFiles;
};

void runCorrelate(const CorrelateArgs& a) {
    std::map<std::string, std::map<std::string, double>> metricRows;
    std::vector<std::string> metricNames = {"nodes", "edge_density", "mean_out_degree",
                                            "mean_clustering", "mean_weighted_clustering",
                                            "mean_disparity", "path_to_global"};
    const auto number = [](const std::string& s) {
        return s == "NA" ? std::nan("") : std::stod(s);
    };
    for (const auto& file : a.metricsFiles) {
        const auto csv = readCsv(file);
        const auto labelCol = csv.column("label", file);
        for (const auto& row : csv.rows) {
            auto& entry = metricRows[row[labelCol]];
            for (const auto& m : metricNames) {
                entry[m] = number(row[csv.column(m, file)]);
            }
        }
    }
    std::map<std::string, double> ert;
    for (const auto& file : a.ertFiles) {
        const auto csv = readCsv(file);
        const auto labelCol = csv.column("label", file);
        const auto ertCol = csv.column("ert", file);
        for (const auto& row : csv.rows) {
            ert[row[labelCol]] = number(row[ertCol]);
        }
    }
    std::vector<std::string> labels;
    std::size_t infinite = 0;
    for (const auto& [label, value] : ert) {
        if (!metricRows.count(label)) {
            continue;
        }
        if (!std::isfinite(value)) {
            ++infinite;
            continue;
        }
        labels.push_back(label);
    }
    if (labels.size() < 3) {
        throw std::invalid_argument("need at least 3 instances present in both metrics and ERT "
                                    "files with finite ERT, found " +
                                    std::to_string(labels.size()));
    }
    std::vector<double> logErt;
    for (const auto& l : labels) {
        logErt.push_back(std::log10(ert[l]));
    }
    std::string fits = stats::fitCsvHeader();
    for (const auto& m : metricNames) {
        std::vector<double> x;
        std::vector<double> y;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            const double v = metricRows[labels[i]][m];
            if (!std::isnan(v)) {
                x.push_back(v);
                y.push_back(logErt[i]);
            }
        }
        try {
            fits += stats::fitCsvRow(m, stats::pearsonAndFit(x, y));
        } catch (const std::invalid_argument&) {
            fits += m + "," + std::to_string(x.size()) + ",NA,NA,NA,NA,NA\n";
        }
    }
    const std::vector<std::string> predictors = {"mean_out_degree", "mean_disparity",
                                                 "path_to_global"};
    std::vector<std::vector<double>> columns(predictors.size());
    std::vector<double> response;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        bool complete = true;
        for (const auto& p : predictors) {
            complete = complete && !std::isnan(metricRows[labels[i]][p]);
        }
        if (!complete) {
            continue;
        }
        for (std::size_t p = 0; p < predictors.size(); ++p) {
            columns[p].push_back(metricRows[labels[i]][predictors[p]]);
        }
        response.push_back(logErt[i]);
    }
    std::string multi = "# reduced predictor set; log10(ERT) ~ mean_out_degree + "
                        "mean_disparity + path_to_global\nterm,coefficient\n";
    try {
        const auto fit = stats::multipleRegression(predictors, columns, response);
        multi += "intercept," + shortestDecimal(fit.intercept) + "\n";
        for (std::size_t p = 0; p < predictors.size(); ++p) {
            multi += predictors[p] + "," + shortestDecimal(fit.coefficients[p]) + "\n";
        }
        multi += "r2," + shortestDecimal(fit.r2) + "\nn," + std::to_string(fit.sampleCount) + "\n";
    } catch (const std::invalid_argument& e) {
        multi += "# not fitted: " + std::string(e.what()) + "\n";
    }
    const std::string header = io::provenanceLine(provenance(0), "#") +
                               "# response log10(ERT); instances " +
                               std::to_string(labels.size()) + ", excluded with infinite ERT " +
                               std::to_string(infinite) + "\n";
    const fs::path dir = outputDir(a.common);
    io::writeOutputs({{dir / "correlation.fits.csv", header + fits},
                      {dir / "correlation.multiple.csv", header + multi}});
    std::cout << header << fits << multi;
}

struct Table2Args {
    CommonArgs common;
    int N = 18;
    std::string ks = "2,4,6,8,10,12,14,16,17";
    std::size_t instances = 30;
    std::uint64_t seed = 1;
    std::size_t pathLimit = 4000;
};

void runTable2(const Table2Args& a) {
    experiments::Table2Config config;
    config.n = a.N;
    config.ks = parseIntList(a.ks);
    for (const int k : config.ks) {
        if (k < 0 || k >= a.N) {
            throw std::invalid_argument("every K must lie in [0, N)");
        }
    }
    config.instances = a.instances;
    config.baseSeed = a.seed;
    config.workers = workerCount(a.common);
    config.pathLengthNodeLimit = a.pathLimit;
    const auto rows = experiments::reproduceTable2(config);
    const std::string header = io::provenanceLine(provenance(a.seed), "#");
    std::string instancesCsv = "K,instance_seed," + metrics::reportCsvHeader();
    instancesCsv = "edges," + instancesCsv;
    for (const auto& r : rows) {
        for (const auto& s : r.studies) {
            const std::string prefix = std::to_string(r.k) + "," + std::to_string(s.seed) + ",";
            instancesCsv += "basin-transition," + prefix + metrics::reportCsvRow(*s.basinTransition);
            for (const auto& [d, report] : s.escape) {
                instancesCsv += report.edgeModel + "," + prefix + metrics::reportCsvRow(report);
            }
        }
    }
    const fs::path dir = outputDir(a.common);
    const std::string text = table2Text(rows, a.N);
    io::writeOutputs({{dir / "table2.txt", header + text},
                      {dir / "table2.csv", header + experiments::table2Csv(rows)},
                      {dir / "table2.instances.csv", header + instancesCsv}});
    std::cout << text;
}

struct Table3Args {
    CommonArgs common;
    std::string sizes = "5,6,7,8,9,10";
    std::size_t instances = 30;
    std::uint64_t seed = 1;
};

void runTable3(const Table3Args& a) {
    experiments::Table3Config config;
    config.sizes = parseIntList(a.sizes);
    for (const int s : config.sizes) {
        if (s < 2 || s > 12) {
            throw std::invalid_argument("sizes must lie in [2, 12]");
        }
    }
    config.instances = a.instances;
    config.baseSeed = a.seed;
    config.workers = workerCount(a.common);
    const auto cells = experiments::reproduceTable3(config);
    const std::string header = io::provenanceLine(provenance(a.seed), "#");
    const fs::path dir = outputDir(a.common);
    const std::string text = experiments::table3Text(cells);
    io::writeOutputs({{dir / "table3.txt", header + text},
                      {dir / "table3.csv", header + experiments::table3Csv(cells)}});
    std::cout << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local optima network toolkit"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.require_subcommand(1);
    std::string simd;
    app.add_option("--simd", simd, "force a kernel backend: scalar | avx2")
        ->check(CLI::IsMember({"scalar", "avx2"}));

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "write instance files");
    addInstanceOptions(generate, gen.inst, true);
    addCommonOptions(generate, gen.common);
    generate->add_option("--instances", gen.instances, "number of instances, seeds seed..seed+n-1")
        ->check(CLI::PositiveNumber);

    ExtractArgs ext;
    auto* extract = app.add_subcommand("extract", "enumerate basins and write the LON");
    addInstanceOptions(extract, ext.inst, true);
    addCommonOptions(extract, ext.common);
    extract->add_option("--edges", ext.edges, "basin | escape")
        ->check(CLI::IsMember({"basin", "escape"}));
    extract->add_option("--D", ext.distance, "escape distance")->check(CLI::Range(1, 64));
    extract->add_flag("--raw", ext.raw, "escape weights as raw counts");
    extract->add_option("--formats", ext.formats, "comma list of pajek,graphml,dot,edge-csv");

    MetricsArgs met;
    auto* metricsCmd = app.add_subcommand("metrics", "network statistics and histograms");
    addInstanceOptions(metricsCmd, met.inst, false);
    addCommonOptions(metricsCmd, met.common);
    addLonOptions(metricsCmd, met.lon);
    metricsCmd->add_option("--path-limit", met.pathLimit, "skip all-pairs paths above this size");
    metricsCmd->add_option("--bins-per-decade", met.binsPerDecade, "weight histogram resolution")
        ->check(CLI::PositiveNumber);

    CommunitiesArgs com;
    auto* communities = app.add_subcommand("communities", "greedy modularity communities");
    addInstanceOptions(communities, com.inst, false);
    addCommonOptions(communities, com.common);
    addLonOptions(communities, com.lon);

    IlsArgs il;
    auto* ilsCmd = app.add_subcommand("ils", "iterated local search restarts and ERT");
    addInstanceOptions(ilsCmd, il.inst, true);
    addCommonOptions(ilsCmd, il.common);
    ilsCmd->add_option("--restarts", il.restarts, "independent runs")->check(CLI::PositiveNumber);
    ilsCmd->add_option("--fe-max", il.feMax, "evaluation budget (default |S|/5)");
    ilsCmd->add_option("--strength", il.strength, "perturbation moves")->check(CLI::PositiveNumber);
    ilsCmd->add_option("--run-seed", il.runSeed, "seed of the restart streams");

    CorrelateArgs cor;
    auto* correlate = app.add_subcommand("correlate", "fit log ERT against LON metrics");
    addCommonOptions(correlate, cor.common);
    correlate->add_option("--metrics", cor.metricsFiles, "metrics CSV files")
        ->required()
        ->check(CLI::ExistingFile);
    correlate->add_option("--ert", cor.ertFiles, "ERT CSV files")
        ->required()
        ->check(CLI::ExistingFile);

    Table2Args t2;
    auto* table2 = app.add_subcommand("reproduce-table2", "NK ensemble network features");
    addCommonOptions(table2, t2.common);
    table2->add_option("--N", t2.N, "string length")->check(CLI::Range(2, 24));
    table2->add_option("--K", t2.ks, "comma list of K values");
    table2->add_option("--instances", t2.instances, "instances per K")->check(CLI::PositiveNumber);
    table2->add_option("--seed", t2.seed, "seed of instance 0");
    table2->add_option("--path-limit", t2.pathLimit, "skip all-pairs paths above this size");

    Table3Args t3;
    auto* table3 = app.add_subcommand("reproduce-table3", "QAP ensemble network features");
    addCommonOptions(table3, t3.common);
    table3->add_option("--sizes", t3.sizes, "comma list of sizes");
    table3->add_option("--instances", t3.instances, "instances per class and size")
        ->check(CLI::PositiveNumber);
    table3->add_option("--seed", t3.seed, "seed of instance 0");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    g_commandLine = canonicalCommandLine(argc, argv);

    try {
        if (simd == "scalar") {
            simd::setBackend(simd::Backend::scalar);
        } else if (simd == "avx2") {
            if (!simd::supported(simd::Backend::avx2)) {
                throw std::invalid_argument("AVX2 is not available on this machine");
            }
            simd::setBackend(simd::Backend::avx2);
        }
        if (generate->parsed()) {
            runGenerate(gen);
        } else if (extract->parsed()) {
            runExtract(ext);
        } else if (metricsCmd->parsed()) {
            runMetrics(met);
        } else if (communities->parsed()) {
            runCommunities(com);
        } else if (ilsCmd->parsed()) {
            runIlsCommand(il);
        } else if (correlate->parsed()) {
            runCorrelate(cor);
        } else if (table2->parsed()) {
            runTable2(t2);
        } else if (table3->parsed()) {
            runTable3(t3);
        }
    } catch (const ParseError& e) {
        std::cerr << "lonet: parse error at " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "lonet: error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
