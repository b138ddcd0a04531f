#include "ratespread/scenario.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "ratespread/curve_factors.hpp"
#include "ratespread/errors.hpp"

namespace ratespread {

namespace {

const SectorStats& stats_for(const BondPosition& position, const SectorStatsTable& stats) {
    const auto it = stats.find(*position.sector);
    if (it == stats.end()) {
        throw InvalidInput("no sector statistics for " + sector_label(*position.sector) +
                           " (position \"" + position.id + "\")");
    }
    return it->second;
}

void require_valid_position(const BondPosition& p) {
    if (p.d_mod < 0.0 || p.d_spread < 0.0) {
        throw InvalidInput("position \"" + p.id + "\" has a negative duration");
    }
    if (!std::isfinite(p.weight)) {
        throw InvalidInput("position \"" + p.id + "\" has a non-finite weight");
    }
}

/// Twist basis value at the key-rate tenor nearest to t (ties to the
/// shorter tenor).
double twist_value_at(double tenor_years) {
    std::size_t best = 0;
    double best_dist = std::abs(tenor_years - kKeyRateTenors[0]);
    for (std::size_t k = 1; k < kKeyRateTenors.size(); ++k) {
        const double dist = std::abs(tenor_years - kKeyRateTenors[k]);
        if (dist < best_dist) {
            best = k;
            best_dist = dist;
        }
    }
    return kTwistBasis[best];
}

double round_to_tenth(double bp) { return std::round(bp * 10.0) / 10.0; }

} // namespace

double portfolio_effective_duration(std::span<const BondPosition> positions,
                                    const SectorStatsTable& stats,
                                    const FactorStats& factors) {
    if (positions.empty()) throw InvalidInput("portfolio is empty");

    double weight_sum = 0.0;
    for (const auto& p : positions) weight_sum += p.weight;
    if (std::abs(weight_sum - 1.0) > 1e-9) {
        throw InvalidInput("portfolio weights must sum to 1 for a duration average, got " +
                           std::to_string(weight_sum));
    }

    double total = 0.0;
    for (const auto& p : positions) {
        require_valid_position(p);
        if (!p.sector) {
            total += p.weight * p.d_mod;
            continue;
        }
        const auto& s = stats_for(p, stats);
        total += p.weight * effective_duration(p.d_mod, p.d_spread, s.rho_shift,
                                               s.sigma_spread, factors.sigma_shift);
    }
    return total;
}

ScenarioResult scenario_pnl(std::span<const BondPosition> positions,
                            const ScenarioShock& shock,
                            const SectorStatsTable& stats,
                            const FactorStats& factors,
                            bool round_spread_to_tenth_bp) {
    if (positions.empty()) throw InvalidInput("portfolio is empty");
    if (!std::isfinite(shock.delta_shift_bp) || !std::isfinite(shock.delta_twist_bp)) {
        throw InvalidInput("scenario shock must be finite");
    }

    ScenarioResult result;
    result.shock = shock;
    result.positions.reserve(positions.size());

    for (const auto& p : positions) {
        require_valid_position(p);
        PositionPnl pnl;
        pnl.id = p.id;

        pnl.delta_y_bp = shock.delta_shift_bp;
        if (shock.delta_twist_bp != 0.0) {
            if (p.tenor_years) {
                pnl.delta_y_bp += twist_value_at(*p.tenor_years) * shock.delta_twist_bp;
            } else {
                pnl.twist_yield_omitted = true;
            }
        }

        if (p.sector) {
            const auto& s = stats_for(p, stats);
            double delta_s = expected_spread_change(s.rho_shift, s.sigma_spread,
                                                    factors.sigma_shift,
                                                    shock.delta_shift_bp);
            if (shock.delta_twist_bp != 0.0) {
                delta_s += expected_spread_change(s.rho_twist, s.sigma_spread,
                                                  factors.sigma_twist,
                                                  shock.delta_twist_bp);
            }
            pnl.delta_s_bp = round_spread_to_tenth_bp ? round_to_tenth(delta_s) : delta_s;
        }

        pnl.price_change = price_impact(p.d_mod, pnl.delta_y_bp, p.d_spread, pnl.delta_s_bp);
        pnl.weighted_change = p.weight * pnl.price_change;
        result.total += pnl.weighted_change;
        result.positions.push_back(std::move(pnl));
    }
    return result;
}

double portfolio_volatility(const ExposureVector& exposure,
                            const CorrelationMatrix& corr) {
    const std::size_t k = exposure.values.size();
    if (exposure.labels.size() != k) {
        throw InvalidInput("exposure has " + std::to_string(exposure.labels.size()) +
                           " labels for " + std::to_string(k) + " values");
    }
    if (corr.labels.size() != k || corr.sigma.size() != k) {
        throw InvalidInput("exposure dimension " + std::to_string(k) +
                           " does not match a " + std::to_string(corr.labels.size()) +
                           "-factor covariance");
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (exposure.labels[i] != corr.labels[i]) {
            throw InvalidInput("exposure label \"" + exposure.labels[i] +
                               "\" does not match factor \"" + corr.labels[i] + "\"");
        }
        if (!std::isfinite(exposure.values[i])) {
            throw InvalidInput("exposure to \"" + exposure.labels[i] + "\" is not finite");
        }
    }
    if (!corr.psd_ok) {
        throw InvalidConfig("covariance is not PSD within tolerance (min eigenvalue " +
                            std::to_string(corr.min_eigenvalue) + ")");
    }

    // Sigma_ij = rho_ij * sigma_i * sigma_j
    double q = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            q += exposure.values[i] * corr.rho[i][j] * corr.sigma[i] * corr.sigma[j] *
                 exposure.values[j];
        }
    }
    // Quadratic forms of PSD matrices are non-negative; clamp rounding noise.
    return std::sqrt(std::max(q, 0.0));
}

} // namespace ratespread
