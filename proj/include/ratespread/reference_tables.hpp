#pragma once

#include <array>
#include <string_view>

#include "ratespread/sector.hpp"

namespace ratespread {

/// Estimation date of the bundled reference statistics.
enum class Vintage { Y2003, Y2013 };

/// Long-term = equal weights, short-term = 12-month half-life.
enum class Calibration { LongTerm, ShortTerm };

Vintage parse_vintage(std::string_view token);          // "2003" | "2013"
Calibration parse_calibration(std::string_view token);  // "long" | "short"
std::string_view vintage_code(Vintage vintage);
std::string_view calibration_code(Calibration calibration);

/// Rows of the 2x2 extra-factor correlation block.
enum class ExtraFactor { SpreadTwist, SpreadDispersion };
/// Columns of the extra-factor block.
enum class TreasuryFactor { Shift, Twist };

/// Published reference statistics for one vintage/calibration pair:
/// sector spread correlations with the Treasury shift and twist factors,
/// the spread-twist/dispersion correlation block, and the effective
/// duration multipliers. All values are fractions (e.g. -0.33), grids are
/// indexed [industry][rating] in canonical order.
struct ReferenceTables {
    Vintage vintage{};
    Calibration calibration{};
    std::array<std::array<double, 3>, 9> shift_corr{};
    std::array<std::array<double, 3>, 9> twist_corr{};
    std::array<std::array<double, 2>, 2> extra_corr{};  // [extra][treasury]
    std::array<std::array<double, 3>, 9> multipliers{};

    double shift_corr_of(const SectorId& s) const;
    double twist_corr_of(const SectorId& s) const;
    double multiplier_of(const SectorId& s) const;
    double extra_corr_of(ExtraFactor row, TreasuryFactor col) const;
};

/// Bundled constants for the four vintage/calibration combinations.
const ReferenceTables& reference_table(Vintage vintage, Calibration calibration);

std::size_t industry_index(Industry industry);  // position in kIndustries
std::size_t rating_index(Rating rating);        // position in kRatings

std::string_view extra_factor_code(ExtraFactor f);   // "CREDIT_SPREAD_TWIST" ...
std::string_view extra_factor_name(ExtraFactor f);   // "Credit Spread Twist (Steepening)" ...
std::string_view treasury_factor_code(TreasuryFactor f);
std::string_view treasury_factor_name(TreasuryFactor f);

} // namespace ratespread
