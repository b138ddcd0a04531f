#include "ratespread/covariance.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>

#include "ratespread/errors.hpp"

namespace ratespread {

std::vector<double> ewma_weights(double half_life, std::size_t n) {
    if (n == 0) throw InvalidInput("weight vector length must be positive");
    if (!(half_life > 0.0)) {
        throw InvalidInput("half-life must be positive, got " + std::to_string(half_life));
    }
    std::vector<double> w(n);
    double sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        w[k] = std::exp2(-static_cast<double>(k) / half_life);
        sum += w[k];
    }
    for (auto& x : w) x /= sum;
    return w;
}

std::vector<double> scheme_weights(const WeightScheme& scheme, std::size_t n) {
    if (n == 0) throw InvalidInput("weight vector length must be positive");
    if (!scheme.is_exponential()) {
        return std::vector<double>(n, 1.0 / static_cast<double>(n));
    }
    auto by_age = ewma_weights(scheme.half_life, n);
    std::reverse(by_age.begin(), by_age.end());  // index n-1 = most recent
    return by_age;
}

WeightedMoments weighted_moments(std::span<const double> x,
                                 std::span<const double> y,
                                 std::span<const double> w) {
    if (x.size() != y.size() || x.size() != w.size()) {
        throw InvalidInput("weighted_moments: series of length " + std::to_string(x.size()) +
                           ", " + std::to_string(y.size()) + " and weights of length " +
                           std::to_string(w.size()) + " do not match");
    }
    if (x.empty()) return {};

    // Center on the first element before averaging: moments are shift
    // invariant, and this keeps constant series at exactly zero variance.
    const double x0 = x[0];
    const double y0 = y[0];
    double mx = 0.0, my = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        mx += w[k] * (x[k] - x0);
        my += w[k] * (y[k] - y0);
    }
    WeightedMoments m;
    m.mean_x = x0 + mx;
    m.mean_y = y0 + my;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double dx = (x[k] - x0) - mx;
        const double dy = (y[k] - y0) - my;
        m.cov_xy += w[k] * dx * dy;
        m.var_x += w[k] * dx * dx;
        m.var_y += w[k] * dy * dy;
    }
    return m;
}

namespace {

double corr_from_moments(const WeightedMoments& m, const std::string& x_name,
                         const std::string& y_name) {
    if (m.var_x <= 0.0) {
        throw DegenerateSeries("series \"" + x_name + "\" has zero weighted variance");
    }
    if (m.var_y <= 0.0) {
        throw DegenerateSeries("series \"" + y_name + "\" has zero weighted variance");
    }
    const double rho = m.cov_xy / (std::sqrt(m.var_x) * std::sqrt(m.var_y));
    if (!std::isfinite(rho)) {
        throw DegenerateSeries("correlation of \"" + x_name + "\" and \"" + y_name +
                               "\" is not finite");
    }
    // Guard against floating-point overshoot only; |rho| <= 1 holds exactly
    // in exact arithmetic.
    return std::clamp(rho, -1.0, 1.0);
}

} // namespace

double weighted_corr(std::span<const double> x, std::span<const double> y,
                     const WeightScheme& scheme) {
    if (x.size() != y.size()) {
        throw InvalidInput("weighted_corr: series lengths " + std::to_string(x.size()) +
                           " and " + std::to_string(y.size()) + " do not match");
    }
    if (x.size() < 2) {
        throw InsufficientData("correlation needs at least two periods, got " +
                               std::to_string(x.size()));
    }
    const auto w = scheme_weights(scheme, x.size());
    return corr_from_moments(weighted_moments(x, y, w), "x", "y");
}

std::vector<double> AlignedSeries::column(std::size_t series_index) const {
    std::vector<double> out(values.size());
    for (std::size_t t = 0; t < values.size(); ++t) out[t] = values[t][series_index];
    return out;
}

AlignedSeries align_series(const std::vector<LabeledSeries>& series) {
    if (series.empty()) throw InvalidInput("align_series: no series given");

    std::size_t total_periods = 0;
    for (const auto& s : series) {
        if (s.timestamps.size() != s.values.size()) {
            throw InvalidInput("series \"" + s.label + "\" has " +
                               std::to_string(s.timestamps.size()) + " timestamps but " +
                               std::to_string(s.values.size()) + " values");
        }
        for (std::size_t t = 1; t < s.timestamps.size(); ++t) {
            if (s.timestamps[t] <= s.timestamps[t - 1]) {
                throw InvalidInput("series \"" + s.label +
                                   "\" timestamps not strictly increasing at \"" +
                                   s.timestamps[t] + "\"");
            }
        }
        total_periods += s.timestamps.size();
    }

    // Count label occurrences per timestamp; shared timestamps appear once
    // per series.
    std::map<std::string, std::size_t> hits;
    for (const auto& s : series)
        for (const auto& ts : s.timestamps) ++hits[ts];

    AlignedSeries out;
    for (const auto& s : series) out.labels.push_back(s.label);
    for (const auto& [ts, n] : hits) {
        if (n == series.size()) out.timestamps.push_back(ts);
    }

    std::vector<std::map<std::string, double>> lookup(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
        for (std::size_t t = 0; t < series[i].timestamps.size(); ++t) {
            lookup[i][series[i].timestamps[t]] = series[i].values[t];
        }
    }
    out.values.reserve(out.timestamps.size());
    for (const auto& ts : out.timestamps) {
        std::vector<double> row(series.size());
        for (std::size_t i = 0; i < series.size(); ++i) row[i] = lookup[i].at(ts);
        out.values.push_back(std::move(row));
    }
    out.dropped_periods = total_periods - out.timestamps.size() * series.size();
    return out;
}

std::size_t CorrelationMatrix::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == label) return i;
    }
    throw InvalidInput("no series labeled \"" + label + "\" in the correlation matrix");
}

double CorrelationMatrix::rho_of(const std::string& a, const std::string& b) const {
    return rho[index_of(a)][index_of(b)];
}

double CorrelationMatrix::sigma_of(const std::string& label) const {
    return sigma[index_of(label)];
}

CorrelationMatrix corr_matrix(const AlignedSeries& series, const WeightScheme& scheme) {
    const std::size_t k = series.n_series();
    const std::size_t n = series.n_periods();
    if (k == 0) throw InvalidInput("corr_matrix: no series given");
    if (n < 2) {
        throw InsufficientData("correlation matrix needs at least two aligned periods, got " +
                               std::to_string(n));
    }

    const auto w = scheme_weights(scheme, n);

    std::vector<std::vector<double>> cols(k);
    for (std::size_t i = 0; i < k; ++i) cols[i] = series.column(i);

    // Center each column on its first element (shift invariant, keeps
    // constant series at exactly zero variance), then demean in place.
    std::vector<double> vars(k, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
        const double c0 = cols[i][0];
        double mean = 0.0;
        for (std::size_t t = 0; t < n; ++t) mean += w[t] * (cols[i][t] - c0);
        for (std::size_t t = 0; t < n; ++t) {
            cols[i][t] = (cols[i][t] - c0) - mean;
            vars[i] += w[t] * cols[i][t] * cols[i][t];
        }
        if (vars[i] <= 0.0) {
            throw DegenerateSeries("series \"" + series.labels[i] +
                                   "\" has zero weighted variance");
        }
    }

    CorrelationMatrix out;
    out.labels = series.labels;
    out.n_periods = n;
    out.low_sample = scheme.is_exponential() &&
                     static_cast<double>(n) < 2.0 * scheme.half_life;
    out.sigma.resize(k);
    for (std::size_t i = 0; i < k; ++i) out.sigma[i] = std::sqrt(vars[i]);

    out.rho.assign(k, std::vector<double>(k, 0.0));
    for (std::size_t i = 0; i < k; ++i) {
        out.rho[i][i] = 1.0;
        for (std::size_t j = i + 1; j < k; ++j) {
            double cov = 0.0;
            for (std::size_t t = 0; t < n; ++t) {
                cov += w[t] * cols[i][t] * cols[j][t];
            }
            const double rho = std::clamp(cov / (out.sigma[i] * out.sigma[j]), -1.0, 1.0);
            out.rho[i][j] = rho;
            out.rho[j][i] = rho;  // symmetric by construction
        }
    }

    // Validate positive semidefiniteness; flag, never repair.
    Eigen::MatrixXd m(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = out.rho[i][j];
    const Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
    out.min_eigenvalue = solver.eigenvalues().minCoeff();
    out.psd_ok = out.min_eigenvalue >= -1e-8;
    return out;
}

} // namespace ratespread
