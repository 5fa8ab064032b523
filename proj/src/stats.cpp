#include <lonet/stats.hpp>

#include <lonet/format.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>
#include <boost/math/distributions/students_t.hpp>

namespace lonet::stats {

namespace {

void checkPaired(std::span<const double> x, std::span<const double> y, std::size_t minimum) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("samples differ in length");
    }
    if (x.size() < minimum) {
        throw std::invalid_argument("need at least " + std::to_string(minimum) + " points");
    }
}

double mean(std::span<const double> v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

struct Moments {
    double sxx = 0.0;
    double syy = 0.0;
    double sxy = 0.0;
    double mx = 0.0;
    double my = 0.0;
};

Moments moments(std::span<const double> x, std::span<const double> y) {
    Moments m;
    m.mx = mean(x);
    m.my = mean(y);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - m.mx;
        const double dy = y[i] - m.my;
        m.sxx += dx * dx;
        m.syy += dy * dy;
        m.sxy += dx * dy;
    }
    return m;
}

double correlation(const Moments& m) {
    return std::clamp(m.sxy / std::sqrt(m.sxx * m.syy), -1.0, 1.0);
}

bool constant(std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [&](double a) { return a == v.front(); });
}

} // namespace

std::vector<double> averageRanks(std::span<const double> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(values.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) {
            ++j;
        }
        const double shared = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t t = i; t <= j; ++t) {
            ranks[order[t]] = shared;
        }
        i = j + 1;
    }
    return ranks;
}

std::optional<double> pearson(std::span<const double> x, std::span<const double> y) {
    checkPaired(x, y, 2);
    if (constant(x) || constant(y)) {
        return std::nullopt;
    }
    return correlation(moments(x, y));
}

std::optional<double> spearman(std::span<const double> x, std::span<const double> y) {
    checkPaired(x, y, 2);
    const auto rx = averageRanks(x);
    const auto ry = averageRanks(y);
    return pearson(rx, ry);
}

RegressionFit pearsonAndFit(std::span<const double> x, std::span<const double> y) {
    checkPaired(x, y, 3);
    if (constant(x)) {
        throw NoFit("x is constant, no regression line");
    }
    const Moments m = moments(x, y);
    RegressionFit fit;
    fit.sampleCount = x.size();
    fit.slope = m.sxy / m.sxx;
    fit.intercept = m.my - fit.slope * m.mx;
    fit.r = constant(y) ? 0.0 : correlation(m);
    fit.r2 = fit.r * fit.r;
    const double df = static_cast<double>(x.size() - 2);
    if (std::abs(fit.r) >= 1.0) {
        fit.pValue = 0.0;
    } else {
        const double t = fit.r * std::sqrt(df / (1.0 - fit.r2));
        const boost::math::students_t dist(df);
        fit.pValue = 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
    }
    return fit;
}

EnsembleSummary summarize(std::string key, std::span<const double> values) {
    if (values.empty()) {
        throw std::invalid_argument("cannot summarize an empty group '" + key + "'");
    }
    EnsembleSummary s;
    s.groupKey = std::move(key);
    s.sampleCount = values.size();
    s.mean = mean(values);
    if (values.size() >= 2) {
        double ss = 0.0;
        for (const double v : values) {
            ss += (v - s.mean) * (v - s.mean);
        }
        const double n = static_cast<double>(values.size());
        s.standardDeviation = std::sqrt(ss / (n - 1.0));
        const boost::math::students_t dist(n - 1.0);
        const double t = boost::math::quantile(dist, 0.975);
        s.confidenceHalfWidth = t * *s.standardDeviation / std::sqrt(n);
    }
    return s;
}

std::vector<EnsembleSummary> summarize(const std::map<std::string, std::vector<double>>& groups) {
    std::vector<EnsembleSummary> out;
    for (const auto& [key, values] : groups) {
        out.push_back(summarize(key, values));
    }
    return out;
}

MultipleFit multipleRegression(const std::vector<std::string>& names,
                               const std::vector<std::vector<double>>& columns,
                               std::span<const double> y) {
    if (names.size() != columns.size()) {
        throw std::invalid_argument("predictor names and columns differ in count");
    }
    const std::size_t n = y.size();
    const std::size_t p = columns.size();
    for (const auto& c : columns) {
        if (c.size() != n) {
            throw std::invalid_argument("predictor column length differs from the response");
        }
    }
    if (n < p + 2) {
        throw std::invalid_argument("too few samples for " + std::to_string(p) + " predictors");
    }
    Eigen::MatrixXd design(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(p + 1));
    Eigen::VectorXd response(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = static_cast<Eigen::Index>(i);
        design(row, 0) = 1.0;
        for (std::size_t c = 0; c < p; ++c) {
            design(row, static_cast<Eigen::Index>(c + 1)) = columns[c][i];
        }
        response(row) = y[i];
    }
    const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    if (qr.rank() < static_cast<Eigen::Index>(p + 1)) {
        throw std::invalid_argument("design matrix is rank deficient");
    }
    const Eigen::VectorXd beta = qr.solve(response);
    const Eigen::VectorXd residual = response - design * beta;
    const double my = mean(y);
    double total = 0.0;
    for (const double v : y) {
        total += (v - my) * (v - my);
    }
    MultipleFit fit;
    fit.predictors = names;
    fit.sampleCount = n;
    fit.intercept = beta(0);
    for (std::size_t c = 0; c < p; ++c) {
        fit.coefficients.push_back(beta(static_cast<Eigen::Index>(c + 1)));
    }
    fit.r2 = total > 0.0 ? 1.0 - residual.squaredNorm() / total : 0.0;
    return fit;
}

std::string summaryCsvHeader() {
    return "group,count,mean,sd,ci95_half_width\n";
}

std::string summaryCsvRow(const EnsembleSummary& s) {
    const auto opt = [](const std::optional<double>& v) {
        return v ? shortestDecimal(*v) : std::string("NA");
    };
    return s.groupKey + "," + std::to_string(s.sampleCount) + "," + shortestDecimal(s.mean) + "," +
           opt(s.standardDeviation) + "," + opt(s.confidenceHalfWidth) + "\n";
}

std::string fitCsvHeader() {
    return "metric,n,slope,intercept,r,r2,p_value\n";
}

std::string fitCsvRow(const std::string& key, const RegressionFit& fit) {
    return key + "," + std::to_string(fit.sampleCount) + "," + shortestDecimal(fit.slope) + "," +
           shortestDecimal(fit.intercept) + "," + shortestDecimal(fit.r) + "," +
           shortestDecimal(fit.r2) + "," + shortestDecimal(fit.pValue) + "\n";
}

} // namespace lonet::stats
