#include <lonet/experiments.hpp>

#include <lonet/format.hpp>
#include <lonet/parallel.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace lonet::experiments {

namespace {

stats::EnsembleSummary summarizeField(const std::string& key,
                                      const std::vector<InstanceStudy>& studies,
                                      double (*field)(const InstanceStudy&)) {
    std::vector<double> values;
    for (const auto& s : studies) {
        const double v = field(s);
        if (!std::isnan(v)) {
            values.push_back(v);
        }
    }
    if (values.empty()) {
        stats::EnsembleSummary empty;
        empty.groupKey = key;
        empty.mean = std::nan("");
        return empty;
    }
    return stats::summarize(key, values);
}

double nan() { return std::nan(""); }

double optionalOrNan(const std::optional<double>& v) { return v ? *v : nan(); }

std::string cell(const stats::EnsembleSummary& s, int digits) {
    if (s.sampleCount == 0) {
        return "NA";
    }
    char buf[64];
    if (s.standardDeviation) {
        std::snprintf(buf, sizeof buf, "%.*f (%.*f)", digits, s.mean, digits, *s.standardDeviation);
    } else {
        std::snprintf(buf, sizeof buf, "%.*f", digits, s.mean);
    }
    return buf;
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) {
        s.insert(0, width - s.size(), ' ');
    }
    return s;
}

std::string csvSummary(const stats::EnsembleSummary& s) {
    if (s.sampleCount == 0) {
        return "NA,NA,0";
    }
    return shortestDecimal(s.mean) + "," +
           (s.standardDeviation ? shortestDecimal(*s.standardDeviation) : std::string("NA")) +
           "," + std::to_string(s.sampleCount);
}

} // namespace

InstanceStudy studyLandscape(const Landscape& landscape, const StudyOptions& options) {
    InstanceStudy study;
    study.label = landscape.describe();
    study.seed = landscape.seed();
    const FitnessTable table = tabulate(landscape, {.workers = options.workers});
    const BasinMap basins = enumerateBasins(landscape, table, {.workers = options.workers});
    study.optimaCount = basins.optima.size();
    const auto& global = basins.optima[basins.globalOptimum(landscape.direction())];
    study.globalOptimumFitness = global.fitness;
    study.globalBasinFraction =
        static_cast<double>(global.basinSize) / static_cast<double>(basins.spaceSize());
    std::vector<double> quality;
    std::vector<double> sizes;
    for (const auto& o : basins.optima) {
        quality.push_back(landscape.orient(o.fitness));
        sizes.push_back(static_cast<double>(o.basinSize));
    }
    if (quality.size() >= 2) {
        study.fitnessBasinSpearman = stats::spearman(quality, sizes);
    }
    study.interiorFraction = basinInteriorFraction(basins).average;

    auto report = options.report;
    report.workers = options.workers;
    const ExtractionOptions extraction{options.workers};
    if (options.basinTransition || options.communities) {
        const auto lon = basinTransitionLon(landscape, basins, extraction);
        if (options.basinTransition) {
            study.basinTransition = metrics::buildReport(lon, report);
        }
        if (options.communities) {
            study.communities = detectCommunities(lon);
        }
    }
    for (const int d : options.escapeDistances) {
        const auto lon = escapeLon(landscape, basins, d, options.escapeNormalized, extraction);
        study.escape.emplace(d, metrics::buildReport(lon, report));
    }
    return study;
}

std::vector<Table2Row> reproduceTable2(const Table2Config& config) {
    std::vector<Table2Row> rows;
    StudyOptions options;
    options.escapeDistances = {1, 2};
    options.report.pathLengthNodeLimit = config.pathLengthNodeLimit;
    for (const int k : config.ks) {
        Table2Row row;
        row.k = k;
        row.studies.resize(config.instances);
        parallelFor(config.instances, config.workers, 1, [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
                const Landscape landscape(nk::generateNk(config.n, k, config.baseSeed + i));
                row.studies[i] = studyLandscape(landscape, options);
            }
        });
        const std::string key = "K=" + std::to_string(k);
        row.optima = summarizeField(key, row.studies, [](const InstanceStudy& s) {
            return static_cast<double>(s.optimaCount);
        });
        row.densityBasin = summarizeField(key, row.studies, [](const InstanceStudy& s) {
            return s.basinTransition->edgeDensityPercent;
        });
        row.densityEscape1 = summarizeField(key, row.studies, [](const InstanceStudy& s) {
            return s.escape.at(1).edgeDensityPercent;
        });
        row.densityEscape2 = summarizeField(key, row.studies, [](const InstanceStudy& s) {
            return s.escape.at(2).edgeDensityPercent;
        });
        row.pathBasin = summarizeField(key, row.studies, [](const InstanceStudy& s) {
            return optionalOrNan(s.basinTransition->pathToGlobal.mean);
        });
        row.pathEscape1 = summarizeField(key, row.studies, [](const InstanceStudy& s) {
            return optionalOrNan(s.escape.at(1).pathToGlobal.mean);
        });
        row.pathEscape2 = summarizeField(key, row.studies, [](const InstanceStudy& s) {
            return optionalOrNan(s.escape.at(2).pathToGlobal.mean);
        });
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string table2Text(const std::vector<Table2Row>& rows, int n) {
    std::string out = "NK landscapes, N=" + std::to_string(n) +
                      "; mean (standard deviation) over instances\n";
    out += pad("K", 3) + pad("N_v", 20) + pad("D_edge% basin", 18) + pad("D_edge% esc D1", 18) +
           pad("D_edge% esc D2", 18) + pad("L_opt basin", 16) + pad("L_opt esc D1", 16) +
           pad("L_opt esc D2", 16) + "\n";
    for (const auto& r : rows) {
        out += pad(std::to_string(r.k), 3) + pad(cell(r.optima, 1), 20) +
               pad(cell(r.densityBasin, 3), 18) + pad(cell(r.densityEscape1, 3), 18) +
               pad(cell(r.densityEscape2, 3), 18) + pad(cell(r.pathBasin, 1), 16) +
               pad(cell(r.pathEscape1, 1), 16) + pad(cell(r.pathEscape2, 1), 16) + "\n";
    }
    return out;
}

std::string table2Csv(const std::vector<Table2Row>& rows) {
    std::string out =
        "K,nv_mean,nv_sd,nv_n,dedge_basin_mean,dedge_basin_sd,dedge_basin_n,"
        "dedge_esc1_mean,dedge_esc1_sd,dedge_esc1_n,dedge_esc2_mean,dedge_esc2_sd,dedge_esc2_n,"
        "lopt_basin_mean,lopt_basin_sd,lopt_basin_n,lopt_esc1_mean,lopt_esc1_sd,lopt_esc1_n,"
        "lopt_esc2_mean,lopt_esc2_sd,lopt_esc2_n\n";
    for (const auto& r : rows) {
        out += std::to_string(r.k) + "," + csvSummary(r.optima) + "," +
               csvSummary(r.densityBasin) + "," + csvSummary(r.densityEscape1) + "," +
               csvSummary(r.densityEscape2) + "," + csvSummary(r.pathBasin) + "," +
               csvSummary(r.pathEscape1) + "," + csvSummary(r.pathEscape2) + "\n";
    }
    return out;
}

std::vector<Table3Cell> reproduceTable3(const Table3Config& config) {
    std::vector<Table3Cell> cells;
    StudyOptions options;
    for (const auto cls : {qap::InstanceClass::realLike, qap::InstanceClass::uniform}) {
        for (const int size : config.sizes) {
            Table3Cell c;
            c.instanceClass = cls;
            c.size = size;
            c.studies.resize(config.instances);
            parallelFor(config.instances, config.workers, 1,
                        [&](std::size_t begin, std::size_t end) {
                            for (std::size_t i = begin; i < end; ++i) {
                                const auto seed = config.baseSeed + i;
                                const Landscape landscape(
                                    cls == qap::InstanceClass::uniform
                                        ? qap::generateUniformQap(size, seed)
                                        : qap::generateRealLikeQap(size, seed));
                                c.studies[i] = studyLandscape(landscape, options);
                            }
                        });
            const std::string key =
                std::string(qap::toString(cls)) + " n=" + std::to_string(size);
            c.optima = summarizeField(key, c.studies, [](const InstanceStudy& s) {
                return static_cast<double>(s.optimaCount);
            });
            c.density = summarizeField(key, c.studies, [](const InstanceStudy& s) {
                return s.basinTransition->edgeDensity;
            });
            c.weightedClustering = summarizeField(key, c.studies, [](const InstanceStudy& s) {
                return s.basinTransition->meanWeightedClustering;
            });
            c.disparity = summarizeField(key, c.studies, [](const InstanceStudy& s) {
                return optionalOrNan(s.basinTransition->meanDisparity);
            });
            cells.push_back(std::move(c));
        }
    }
    return cells;
}

std::string table3Text(const std::vector<Table3Cell>& cells) {
    std::vector<int> sizes;
    for (const auto& c : cells) {
        if (std::find(sizes.begin(), sizes.end(), c.size) == sizes.end()) {
            sizes.push_back(c.size);
        }
    }
    std::string out = "QAP, basin-transition networks; mean (standard deviation) over instances\n";
    out += pad("", 8) + pad("class", 10);
    for (const int s : sizes) {
        out += pad(std::to_string(s), 20);
    }
    out += "\n";
    const auto block = [&](const std::string& name, auto field, int digits) {
        for (const auto cls : {qap::InstanceClass::realLike, qap::InstanceClass::uniform}) {
            out += pad(name, 8) + pad(std::string(qap::toString(cls)), 10);
            for (const int s : sizes) {
                std::string text = "-";
                for (const auto& c : cells) {
                    if (c.instanceClass == cls && c.size == s) {
                        text = cell(field(c), digits);
                    }
                }
                out += pad(text, 20);
            }
            out += "\n";
        }
    };
    block("N_v", [](const Table3Cell& c) { return c.optima; }, 3);
    block("D_edge", [](const Table3Cell& c) { return c.density; }, 3);
    block("C^w", [](const Table3Cell& c) { return c.weightedClustering; }, 3);
    block("Y_2", [](const Table3Cell& c) { return c.disparity; }, 3);
    return out;
}

std::string table3Csv(const std::vector<Table3Cell>& cells) {
    std::string out = "class,size,nv_mean,nv_sd,nv_n,dedge_mean,dedge_sd,dedge_n,cw_mean,cw_sd,"
                      "cw_n,y2_mean,y2_sd,y2_n\n";
    for (const auto& c : cells) {
        out += std::string(qap::toString(c.instanceClass)) + "," + std::to_string(c.size) + "," +
               csvSummary(c.optima) + "," + csvSummary(c.density) + "," +
               csvSummary(c.weightedClustering) + "," + csvSummary(c.disparity) + "\n";
    }
    return out;
}

IlsStudy studyIls(const Landscape& landscape, const FitnessTable& table, const BasinMap& basins,
                  std::uint64_t restarts, std::uint64_t feMax, int perturbationStrength,
                  std::uint64_t seed, unsigned workers) {
    ils::IlsConfig config;
    config.feMax = feMax;
    config.restarts = restarts;
    config.perturbationStrength = perturbationStrength;
    config.targetFitness = basins.optima[basins.globalOptimum(landscape.direction())].fitness;
    config.workers = workers;
    IlsStudy study;
    study.feMax = feMax;
    study.runs = ils::runRestarts(landscape, config, seed, &table);
    study.ert = ils::estimateErt(study.runs, feMax);
    return study;
}

} // namespace lonet::experiments
