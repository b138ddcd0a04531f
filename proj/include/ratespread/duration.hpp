#pragma once

#include "ratespread/sector.hpp"

namespace ratespread {

/// Per-sector spread volatility and correlations with the Treasury factors.
struct SectorStats {
    SectorId sector{};
    double sigma_spread{};  // bp/period
    double rho_shift{};     // correlation with the shift factor, in [-1,1]
    double rho_twist{};     // correlation with the twist factor, in [-1,1]
};

/// Treasury factor volatilities, bp/period.
struct FactorStats {
    double sigma_shift{};
    double sigma_twist{};
};

/// Durations of one bond together with the correlation-adjusted results.
struct DurationReport {
    double d_mod{};     // years
    double d_spread{};  // years
    double d_eff{};     // years
    double m_eff{};     // dimensionless fraction of d_mod
};

/// Expected spread change for a given factor move:
/// delta_s = rho * sigma_spread * delta_factor / sigma_factor.
/// Both volatilities must be in the same units (bp/period here).
/// Throws DegenerateSeries when sigma_factor is not positive and
/// InvalidInput when |rho| > 1 or sigma_spread < 0.
double expected_spread_change(double rho, double sigma_spread,
                              double sigma_factor, double delta_factor_bp);

/// First-order price change per 100 notional for simultaneous yield and
/// spread moves given in bp: -(d_mod*delta_y + d_spread*delta_s)/100.
double price_impact(double d_mod_years, double delta_y_bp,
                    double d_spread_years, double delta_s_bp);

/// Price sensitivity to the Treasury shift factor, accounting for the
/// correlated spread response:
/// d_eff = d_mod + rho * (sigma_spread / sigma_shift) * d_spread.
double effective_duration(double d_mod, double d_spread, double rho,
                          double sigma_spread, double sigma_shift);

/// m_eff = 1 + rho * sigma_spread / sigma_shift, so that
/// d_eff = m_eff * d_mod whenever d_mod == d_spread.
double effective_duration_multiplier(double rho, double sigma_spread,
                                     double sigma_shift);

/// Bundles the above into one report.
DurationReport duration_report(double d_mod, double d_spread, double rho,
                               double sigma_spread, double sigma_shift);

} // namespace ratespread
