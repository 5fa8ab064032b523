/// @file stats.hpp
/// @brief Correlations, regressions and ensemble summaries.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lonet::stats {

/// Fractional ranks starting at 1; tied values share the mean of their ranks.
std::vector<double> averageRanks(std::span<const double> values);

/// Pearson correlation; absent when either input is constant.
/// @throws std::invalid_argument on unequal lengths or fewer than 2 points
std::optional<double> pearson(std::span<const double> x, std::span<const double> y);

/// Pearson correlation of average ranks; absent when either input is constant.
/// @throws std::invalid_argument on unequal lengths or fewer than 2 points
std::optional<double> spearman(std::span<const double> x, std::span<const double> y);

struct RegressionFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r = 0.0;
    double r2 = 0.0;
    std::size_t sampleCount = 0;
    /// Two-sided p-value of the t-test of r = 0 with n - 2 degrees of freedom.
    double pValue = 1.0;
};

class NoFit : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Least-squares line y = slope x + intercept with Pearson r. r is 0 when y
/// is constant.
/// @throws NoFit when x is constant
/// @throws std::invalid_argument on unequal lengths or fewer than 3 points
RegressionFit pearsonAndFit(std::span<const double> x, std::span<const double> y);

struct EnsembleSummary {
    std::string groupKey;
    std::size_t sampleCount = 0;
    double mean = 0.0;
    /// Sample deviation (n - 1); absent below two samples.
    std::optional<double> standardDeviation;
    /// Half-width of the 0.95 Student t interval; absent below two samples.
    std::optional<double> confidenceHalfWidth;
};

/// @throws std::invalid_argument on an empty sample
EnsembleSummary summarize(std::string key, std::span<const double> values);
/// One summary per key, in key order.
/// @throws std::invalid_argument if any group is empty
std::vector<EnsembleSummary> summarize(const std::map<std::string, std::vector<double>>& groups);

/// Ordinary least squares with an intercept over several predictors.
struct MultipleFit {
    std::vector<std::string> predictors;
    double intercept = 0.0;
    std::vector<double> coefficients;
    double r2 = 0.0;
    std::size_t sampleCount = 0;
};

/// `columns[p][i]` is predictor p at sample i.
/// @throws std::invalid_argument on mismatched sizes, too few samples, or a
///         rank-deficient design
MultipleFit multipleRegression(const std::vector<std::string>& names,
                               const std::vector<std::vector<double>>& columns,
                               std::span<const double> y);

std::string summaryCsvHeader();
std::string summaryCsvRow(const EnsembleSummary& s);
std::string fitCsvHeader();
std::string fitCsvRow(const std::string& key, const RegressionFit& fit);

} // namespace lonet::stats
