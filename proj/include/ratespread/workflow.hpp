#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ratespread/covariance.hpp"
#include "ratespread/curve_factors.hpp"
#include "ratespread/report.hpp"
#include "ratespread/sector.hpp"

namespace ratespread {

/// Estimated co-movement statistics of one sector with the Treasury factors.
struct SectorEstimate {
    SectorId sector{};
    std::size_t n_periods{0};
    double rho_shift{};
    double rho_twist{};
    double sigma_spread{};  // bp/period
    double m_eff{};         // 1 + rho_shift * sigma_spread / sigma_shift
};

/// Output of the rates-spreads estimation pipeline over real or synthetic
/// data: factor volatilities plus one row per sector with data.
struct EstimateReport {
    WeightScheme scheme{};
    double sigma_shift{};  // bp/period
    double sigma_twist{};  // bp/period
    std::size_t n_periods{0};
    std::size_t dropped_periods{0};
    bool low_sample{false};
    std::vector<SectorEstimate> rows;  // canonical sector order
};

/// Full pipeline: difference the curve history into shift/twist factor
/// series, difference each sector's OAS levels into spread changes, align
/// everything on common dates, and estimate weighted correlations and
/// volatilities under the given scheme.
///
/// min_periods guards against estimates from too little data (the CLI
/// passes 24 for the exponential scheme); 0 disables the guard beyond the
/// intrinsic two-period minimum.
EstimateReport estimate_comovement(const std::vector<CurveObservation>& yields,
                                   const std::vector<LabeledSeries>& spread_levels,
                                   const WeightScheme& scheme,
                                   std::size_t min_periods = 0);

std::string render_report(const EstimateReport& report, ReportFormat format);

} // namespace ratespread
