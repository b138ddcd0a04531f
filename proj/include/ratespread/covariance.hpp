#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace ratespread {

/// Observation weighting used by the estimators: the long-term calibration
/// weights all periods equally, the short-term one decays weights with a
/// half-life measured in periods (12 months in the standard setup).
struct WeightScheme {
    enum class Kind { EqualWeight, ExponentialHalfLife };

    Kind kind{Kind::EqualWeight};
    double half_life{12.0};  // periods; meaningful only when exponential

    static WeightScheme equal_weight() { return {Kind::EqualWeight, 0.0}; }
    static WeightScheme exponential(double half_life = 12.0) {
        return {Kind::ExponentialHalfLife, half_life};
    }
    bool is_exponential() const { return kind == Kind::ExponentialHalfLife; }
};

/// Age-ordered exponential weights: w[k] is the weight of the observation
/// k periods old (k = 0 most recent), w[k] proportional to 2^(-k/half_life),
/// normalized to sum to 1. Strictly decreasing in k.
std::vector<double> ewma_weights(double half_life, std::size_t n);

/// Weights aligned with a chronological series (index 0 oldest, index n-1
/// most recent), normalized to sum to 1.
std::vector<double> scheme_weights(const WeightScheme& scheme, std::size_t n);

/// Weighted sample moments, population convention: no degrees-of-freedom
/// correction, means are weighted with the same weights.
struct WeightedMoments {
    double mean_x{};
    double mean_y{};
    double cov_xy{};
    double var_x{};
    double var_y{};
};

/// Computes weighted means, covariance and variances of two equally long
/// series. Weights must be parallel to the series and sum to 1.
WeightedMoments weighted_moments(std::span<const double> x,
                                 std::span<const double> y,
                                 std::span<const double> w);

/// Weighted correlation of two chronological series under the given scheme.
/// Throws InsufficientData for fewer than two periods and DegenerateSeries
/// when either series has zero weighted variance; never returns NaN.
double weighted_corr(std::span<const double> x, std::span<const double> y,
                     const WeightScheme& scheme);

/// One named time series prior to alignment.
struct LabeledSeries {
    std::string label;
    std::vector<std::string> timestamps;  // strictly increasing
    std::vector<double> values;           // bp
};

/// Several series restricted to their common timestamps.
struct AlignedSeries {
    std::vector<std::string> labels;
    std::vector<std::string> timestamps;      // shared, strictly increasing
    std::vector<std::vector<double>> values;  // [period][series]
    std::size_t dropped_periods{0};           // periods discarded by alignment

    std::size_t n_periods() const { return timestamps.size(); }
    std::size_t n_series() const { return labels.size(); }
    std::vector<double> column(std::size_t series_index) const;
};

/// Intersects the series on their timestamps, dropping any period missing
/// from at least one input and counting the drops.
AlignedSeries align_series(const std::vector<LabeledSeries>& series);

/// Weighted correlation matrix with companion volatilities.
struct CorrelationMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<double>> rho;  // symmetric, unit diagonal
    std::vector<double> sigma;             // bp/period
    std::size_t n_periods{0};
    bool low_sample{false};     // exponential scheme with < 2 half-lives of data
    bool psd_ok{true};          // smallest eigenvalue >= -1e-8 after symmetrization
    double min_eigenvalue{0.0};

    std::size_t index_of(const std::string& label) const;  // InvalidInput if absent
    double rho_of(const std::string& a, const std::string& b) const;
    double sigma_of(const std::string& label) const;
};

/// Estimates the full correlation matrix and volatility vector of aligned
/// series under one weight scheme. Any degenerate series raises
/// DegenerateSeries naming it. Positive semidefiniteness is validated and
/// flagged, never repaired.
CorrelationMatrix corr_matrix(const AlignedSeries& series, const WeightScheme& scheme);

} // namespace ratespread
