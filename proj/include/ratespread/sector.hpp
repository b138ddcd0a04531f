#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ratespread {

/// The nine credit industries of the sector decomposition.
enum class Industry {
    BankingBrokerage,
    FinancialInsuranceReits,
    BasicCapitalGoods,
    ConsumerCyclical,
    ConsumerNonCyclical,
    CommunicationTechnology,
    EnergyTransportation,
    Utilities,
    NonCorporate,
};

/// The three rating buckets.
enum class Rating { AaaAa, A, Bbb };

inline constexpr std::array<Industry, 9> kIndustries{
    Industry::BankingBrokerage,      Industry::FinancialInsuranceReits,
    Industry::BasicCapitalGoods,     Industry::ConsumerCyclical,
    Industry::ConsumerNonCyclical,   Industry::CommunicationTechnology,
    Industry::EnergyTransportation,  Industry::Utilities,
    Industry::NonCorporate,
};

inline constexpr std::array<Rating, 3> kRatings{Rating::AaaAa, Rating::A, Rating::Bbb};

/// One of the 27 industry x rating buckets.
struct SectorId {
    Industry industry{};
    Rating rating{};

    friend bool operator==(const SectorId&, const SectorId&) = default;
    friend auto operator<=>(const SectorId&, const SectorId&) = default;
};

/// Stable machine-readable code, e.g. "BANKING", "CONSUMER_CYCLICAL".
std::string_view industry_code(Industry industry);
/// Display name, e.g. "Banking and Brokerage".
std::string_view industry_name(Industry industry);
/// Stable code: "AAA_AA", "A" or "BBB".
std::string_view rating_code(Rating rating);
/// Display name: "AAA/AA", "A" or "BBB".
std::string_view rating_name(Rating rating);

/// Case-insensitive parse of an industry/rating code (display names are
/// accepted too). Throws InvalidInput for unknown tokens.
Industry parse_industry(std::string_view token);
Rating parse_rating(std::string_view token);

/// Canonical series label of a sector, "<INDUSTRY_CODE>.<RATING_CODE>".
std::string sector_label(const SectorId& sector);

/// Inverse of sector_label. Throws InvalidInput for anything else.
SectorId parse_sector_label(std::string_view label);

/// All 27 sectors in canonical order (industries outer, ratings inner).
const std::vector<SectorId>& all_sectors();

/// Hypothetical equally weighted basket matching a sector's average
/// maturity and OAS. Such a basket loads on the sector spread factor with
/// coefficient one and carries no spread-twist or dispersion exposure.
struct SectorPortfolio {
    SectorId sector{};
    std::size_t n_bonds{20};
    std::vector<double> bond_spreads;  // per-bond OAS, bp
    double avg_maturity{};             // years
    double avg_oas{};                  // bp

    /// All bonds start at the sector average OAS, so mean(bond_spreads)
    /// equals avg_oas at construction.
    static SectorPortfolio build(SectorId sector, std::size_t n_bonds,
                                 double avg_maturity, double avg_oas);
};

/// OAS change of the equally weighted basket: the common factor change
/// plus the average of the per-bond idiosyncratic changes. idio_changes
/// must have exactly portfolio.n_bonds entries.
double portfolio_spread_change(const SectorPortfolio& portfolio,
                               double factor_change_bp,
                               std::span<const double> idio_changes_bp);

} // namespace ratespread
