#include "ratespread/reference_tables.hpp"

#include "ratespread/errors.hpp"

namespace ratespread {

namespace {

// Published reference grids, transcribed as whole percents. Row order is
// the canonical industry order, columns AAA/AA, A, BBB.
struct RawTables {
    int shift[9][3];
    int twist[9][3];
    int extra[2][2];  // {spread twist, spread dispersion} x {shift, twist}
    int mult[9][3];
};

constexpr RawTables kLong2013{
    {{-32, -33, -31},
     {-26, -33, -38},
     {-32, -35, -35},
     {-38, -34, -30},
     {-35, -32, -30},
     {-31, -34, -36},
     {-37, -37, -38},
     {-24, -35, -34},
     {-32, -34, -36}},
    {{13, 13, 13},
     {11, 13, 12},
     {11, 12, 13},
     {13, 13, 14},
     {12, 12, 12},
     {9, 13, 14},
     {12, 13, 14},
     {10, 12, 13},
     {8, 13, 14}},
    {{5, -1}, {-42, 17}},
    {{79, 81, 65},
     {83, 69, 46},
     {87, 79, 67},
     {84, 75, 63},
     {84, 82, 77},
     {88, 74, 59},
     {82, 79, 70},
     {87, 79, 69},
     {91, 82, 66}},
};

constexpr RawTables kShort2013{
    {{-39, -34, -38},
     {-21, -34, -42},
     {-25, -26, -36},
     {-29, -27, -32},
     {-25, -23, -26},
     {-19, -29, -37},
     {-21, -31, -36},
     {-34, -29, -30},
     {-23, -36, -15}},
    {{-26, -24, -26},
     {-16, -23, -28},
     {-18, -18, -24},
     {-20, -19, -22},
     {-18, -17, -19},
     {-14, -20, -25},
     {-15, -22, -25},
     {-23, -20, -21},
     {-14, -25, -12}},
    {{-21, -13}, {-50, -33}},
    {{68, 70, 48},
     {83, 65, 32},
     {88, 84, 62},
     {85, 79, 63},
     {88, 86, 78},
     {92, 75, 55},
     {88, 80, 66},
     {79, 83, 73},
     {93, 75, 82}},
};

constexpr RawTables kLong2003{
    {{-31, -31, -22},
     {-38, -31, -29},
     {-31, -43, -36},
     {-41, -41, -22},
     {-40, -35, -33},
     {-31, -38, -31},
     {-41, -43, -40},
     {-21, -36, -29},
     {-31, -35, -41}},
    {{17, 19, 15},
     {20, 18, 16},
     {15, 21, 20},
     {19, 21, 15},
     {19, 17, 18},
     {16, 20, 18},
     {18, 21, 21},
     {11, 18, 16},
     {15, 18, 21}},
    {{10, -13}, {-56, 48}},
    {{89, 87, 81},
     {88, 87, 84},
     {92, 87, 84},
     {89, 83, 79},
     {89, 89, 87},
     {89, 84, 78},
     {87, 86, 82},
     {93, 87, 81},
     {93, 88, 71}},
};

constexpr RawTables kShort2003{
    {{-56, -52, -46},
     {-52, -43, -45},
     {-61, -62, -56},
     {-58, -56, -49},
     {-57, -53, -55},
     {-44, -51, -45},
     {-57, -60, -60},
     {-56, -54, -40},
     {-60, -53, -55}},
    {{33, 31, 30},
     {35, 33, 23},
     {23, 28, 31},
     {22, 32, 40},
     {25, 23, 25},
     {26, 32, 36},
     {26, 29, 30},
     {27, 31, 33},
     {21, 26, 36}},
    {{9, -12}, {-46, 44}},
    {{84, 83, 79},
     {85, 79, 75},
     {83, 79, 75},
     {85, 75, 64},
     {83, 83, 79},
     {80, 76, 58},
     {80, 80, 77},
     {77, 77, 62},
     {89, 86, 61}},
};

ReferenceTables expand(Vintage vintage, Calibration calibration, const RawTables& raw) {
    ReferenceTables t;
    t.vintage = vintage;
    t.calibration = calibration;
    for (int i = 0; i < 9; ++i) {
        for (int r = 0; r < 3; ++r) {
            t.shift_corr[i][r] = raw.shift[i][r] / 100.0;
            t.twist_corr[i][r] = raw.twist[i][r] / 100.0;
            t.multipliers[i][r] = raw.mult[i][r] / 100.0;
        }
    }
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) t.extra_corr[i][j] = raw.extra[i][j] / 100.0;
    return t;
}

} // namespace

std::size_t industry_index(Industry industry) {
    for (std::size_t i = 0; i < kIndustries.size(); ++i) {
        if (kIndustries[i] == industry) return i;
    }
    throw InvalidInput("unknown industry value");
}

std::size_t rating_index(Rating rating) {
    for (std::size_t i = 0; i < kRatings.size(); ++i) {
        if (kRatings[i] == rating) return i;
    }
    throw InvalidInput("unknown rating value");
}

double ReferenceTables::shift_corr_of(const SectorId& s) const {
    return shift_corr[industry_index(s.industry)][rating_index(s.rating)];
}

double ReferenceTables::twist_corr_of(const SectorId& s) const {
    return twist_corr[industry_index(s.industry)][rating_index(s.rating)];
}

double ReferenceTables::multiplier_of(const SectorId& s) const {
    return multipliers[industry_index(s.industry)][rating_index(s.rating)];
}

double ReferenceTables::extra_corr_of(ExtraFactor row, TreasuryFactor col) const {
    return extra_corr[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
}

const ReferenceTables& reference_table(Vintage vintage, Calibration calibration) {
    static const ReferenceTables long_2013 = expand(Vintage::Y2013, Calibration::LongTerm, kLong2013);
    static const ReferenceTables short_2013 =
        expand(Vintage::Y2013, Calibration::ShortTerm, kShort2013);
    static const ReferenceTables long_2003 = expand(Vintage::Y2003, Calibration::LongTerm, kLong2003);
    static const ReferenceTables short_2003 =
        expand(Vintage::Y2003, Calibration::ShortTerm, kShort2003);

    if (vintage == Vintage::Y2013) {
        return calibration == Calibration::LongTerm ? long_2013 : short_2013;
    }
    return calibration == Calibration::LongTerm ? long_2003 : short_2003;
}

Vintage parse_vintage(std::string_view token) {
    if (token == "2003") return Vintage::Y2003;
    if (token == "2013") return Vintage::Y2013;
    throw InvalidInput("unknown vintage \"" + std::string(token) + "\" (expected 2003 or 2013)");
}

Calibration parse_calibration(std::string_view token) {
    if (token == "long" || token == "long-term" || token == "LongTerm") {
        return Calibration::LongTerm;
    }
    if (token == "short" || token == "short-term" || token == "ShortTerm") {
        return Calibration::ShortTerm;
    }
    throw InvalidInput("unknown calibration \"" + std::string(token) +
                       "\" (expected long or short)");
}

std::string_view vintage_code(Vintage vintage) {
    return vintage == Vintage::Y2003 ? "2003" : "2013";
}

std::string_view calibration_code(Calibration calibration) {
    return calibration == Calibration::LongTerm ? "long" : "short";
}

std::string_view extra_factor_code(ExtraFactor f) {
    return f == ExtraFactor::SpreadTwist ? "CREDIT_SPREAD_TWIST" : "CREDIT_SPREAD_DISPERSION";
}

std::string_view extra_factor_name(ExtraFactor f) {
    return f == ExtraFactor::SpreadTwist ? "Credit Spread Twist (Steepening)"
                                         : "Credit Spread Dispersion";
}

std::string_view treasury_factor_code(TreasuryFactor f) {
    return f == TreasuryFactor::Shift ? "TREASURY_SHIFT" : "TREASURY_TWIST";
}

std::string_view treasury_factor_name(TreasuryFactor f) {
    return f == TreasuryFactor::Shift ? "Treasury Shift" : "Treasury Twist";
}

} // namespace ratespread
