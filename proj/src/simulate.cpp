#include "ratespread/simulate.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>

#include "ratespread/errors.hpp"
#include "ratespread/rng.hpp"

namespace ratespread {

namespace {

// Seed offset separating the idiosyncratic stream from the factor stream,
// so the factor path depends on the seed alone.
constexpr std::uint64_t kIdioStreamSalt = 0x9E3779B97F4A7C15ULL;

bool is_factor_label(const std::string& label) {
    return label == "shift" || label == "twist";
}

void validate(const SynthConfig& cfg) {
    const std::size_t k = cfg.labels.size();
    if (k == 0) throw InvalidConfig("generator config has no series labels");
    if (cfg.n_periods == 0) throw InvalidConfig("n_periods must be positive");
    if (cfg.n_bonds == 0) throw InvalidConfig("n_bonds must be positive");
    if (cfg.idio_vol < 0.0) throw InvalidConfig("idio_vol must be non-negative");
    if (cfg.vols.size() != k) {
        throw InvalidConfig("expected " + std::to_string(k) + " volatilities, got " +
                            std::to_string(cfg.vols.size()));
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (!(cfg.vols[i] >= 0.0) || !std::isfinite(cfg.vols[i])) {
            throw InvalidConfig("volatility of \"" + cfg.labels[i] +
                                "\" must be a non-negative finite number");
        }
    }
    if (cfg.target_corr.size() != k) {
        throw InvalidConfig("target correlation must be " + std::to_string(k) + "x" +
                            std::to_string(k));
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (cfg.target_corr[i].size() != k) {
            throw InvalidConfig("target correlation row " + std::to_string(i) +
                                " has wrong length");
        }
        if (std::abs(cfg.target_corr[i][i] - 1.0) > 1e-12) {
            throw InvalidConfig("target correlation diagonal must be 1");
        }
        for (std::size_t j = 0; j < k; ++j) {
            const double r = cfg.target_corr[i][j];
            if (!std::isfinite(r) || std::abs(r) > 1.0 + 1e-12) {
                throw InvalidConfig("target correlation entries must lie in [-1, 1]");
            }
            if (std::abs(r - cfg.target_corr[j][i]) > 1e-12) {
                throw InvalidConfig("target correlation must be symmetric");
            }
        }
    }
}

} // namespace

std::vector<std::string> sector_labels(const SynthConfig& cfg) {
    std::vector<std::string> out;
    for (const auto& label : cfg.labels) {
        if (!is_factor_label(label)) out.push_back(label);
    }
    return out;
}

AlignedSeries generate_market(const SynthConfig& cfg) {
    validate(cfg);
    const std::size_t k = cfg.labels.size();

    Eigen::MatrixXd corr(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) corr(i, j) = cfg.target_corr[i][j];

    // Spectral factorization: tolerates semidefinite targets (e.g. rho = 1).
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(corr);
    const double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < -1e-8) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6e", min_eig);
        throw InvalidConfig(std::string("target correlation is not PSD: eigenvalue ") + buf);
    }
    Eigen::VectorXd sqrt_eig = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    Eigen::MatrixXd loadings = solver.eigenvectors() * sqrt_eig.asDiagonal();
    for (std::size_t i = 0; i < k; ++i) loadings.row(i) *= cfg.vols[i];

    GaussianRng factor_rng(cfg.seed);
    GaussianRng idio_rng(cfg.seed ^ kIdioStreamSalt);

    AlignedSeries out;
    out.labels = cfg.labels;
    out.timestamps.reserve(cfg.n_periods);
    out.values.reserve(cfg.n_periods);

    Eigen::VectorXd z(k);
    for (std::size_t t = 0; t < cfg.n_periods; ++t) {
        char buf[16];
        std::snprintf(buf, sizeof buf, "%06zu", t + 1);
        out.timestamps.emplace_back(buf);

        for (std::size_t i = 0; i < k; ++i) z(static_cast<Eigen::Index>(i)) = factor_rng.next();
        const Eigen::VectorXd common = loadings * z;

        std::vector<double> row(k);
        for (std::size_t i = 0; i < k; ++i) {
            row[i] = common(static_cast<Eigen::Index>(i));
            if (!is_factor_label(cfg.labels[i]) && cfg.idio_vol > 0.0) {
                double idio_sum = 0.0;
                for (std::size_t b = 0; b < cfg.n_bonds; ++b) idio_sum += idio_rng.next();
                row[i] += cfg.idio_vol * idio_sum / static_cast<double>(cfg.n_bonds);
            }
        }
        out.values.push_back(std::move(row));
    }
    return out;
}

} // namespace ratespread
