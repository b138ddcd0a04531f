#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ratespread/covariance.hpp"
#include "ratespread/duration.hpp"
#include "ratespread/sector.hpp"

namespace ratespread {

/// One position of a credit or Treasury portfolio. A position without a
/// sector is a Treasury: it has no spread response and contributes its
/// modified duration as-is.
///
/// Weights are signed fractions of portfolio market value; shorts are
/// negative. tenor_years, when present, maps a twist shock onto the
/// position's yield via the twist basis value at the nearest key-rate
/// tenor (ties resolve to the shorter tenor). Without it the direct yield
/// effect of a twist is omitted, which the scenario result flags.
struct BondPosition {
    std::string id;
    std::optional<SectorId> sector;
    double d_mod{};     // years
    double d_spread{};  // years
    double weight{};
    double price{100.0};  // per 100 notional
    std::optional<double> tenor_years;
};

/// Joint shock to the Treasury factors, in bp (twist in twist-basis units).
struct ScenarioShock {
    double delta_shift_bp{};
    double delta_twist_bp{};
};

using SectorStatsTable = std::map<SectorId, SectorStats>;

/// Weighted average of per-position effective durations. Requires weights
/// summing to 1 (within 1e-9) since the result is an average; every credit
/// position's sector must be present in the stats table.
double portfolio_effective_duration(std::span<const BondPosition> positions,
                                    const SectorStatsTable& stats,
                                    const FactorStats& factors);

/// Scenario result for one position.
struct PositionPnl {
    std::string id;
    double delta_y_bp{};          // yield move applied to the position
    double delta_s_bp{};          // expected spread move
    double price_change{};        // per 100 notional
    double weighted_change{};     // weight * price_change
    bool twist_yield_omitted{false};  // twist shocked but no tenor on file
};

struct ScenarioResult {
    ScenarioShock shock{};
    std::vector<PositionPnl> positions;
    double total{};  // sum of weighted changes, position order
};

/// First-order P&L of a book under a joint shift/twist shock. Spread moves
/// follow the correlation model per sector; Treasuries only see the yield
/// move. Weights may be signed and need not sum to 1 (hedged books).
///
/// round_spread_to_tenth_bp reproduces hand calculations that carry the
/// reported one-decimal spread move through the price step instead of the
/// full-precision value.
ScenarioResult scenario_pnl(std::span<const BondPosition> positions,
                            const ScenarioShock& shock,
                            const SectorStatsTable& stats,
                            const FactorStats& factors,
                            bool round_spread_to_tenth_bp = false);

/// Price sensitivities per bp of each factor, parallel to a correlation
/// matrix's labels.
struct ExposureVector {
    std::vector<std::string> labels;
    std::vector<double> values;
};

/// Factor-model portfolio volatility sqrt(x' Sigma x) per period, with
/// Sigma assembled from the correlation matrix and its volatilities.
/// Throws InvalidInput on label/dimension mismatch and InvalidConfig when
/// the matrix is non-PSD beyond tolerance.
double portfolio_volatility(const ExposureVector& exposure,
                            const CorrelationMatrix& corr);

} // namespace ratespread
