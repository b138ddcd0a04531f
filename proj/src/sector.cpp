#include "ratespread/sector.hpp"

#include <algorithm>
#include <cctype>

#include "ratespread/errors.hpp"

namespace ratespread {

namespace {

struct IndustryNames {
    Industry industry;
    std::string_view code;
    std::string_view name;
};

constexpr std::array<IndustryNames, 9> kIndustryNames{{
    {Industry::BankingBrokerage, "BANKING", "Banking and Brokerage"},
    {Industry::FinancialInsuranceReits, "FINANCIAL",
     "Financial Companies, Insurance and REITS"},
    {Industry::BasicCapitalGoods, "BASIC", "Basic Industries and Capital Goods"},
    {Industry::ConsumerCyclical, "CONSUMER_CYCLICAL", "Consumer Cyclical"},
    {Industry::ConsumerNonCyclical, "CONSUMER_NON_CYCLICAL", "Consumer Non-Cyclical"},
    {Industry::CommunicationTechnology, "COMM_TECH", "Communication and Technology"},
    {Industry::EnergyTransportation, "ENERGY_TRANS", "Energy and Transportation"},
    {Industry::Utilities, "UTILITIES", "Utilities"},
    {Industry::NonCorporate, "NON_CORPORATE", "Non-Corporate"},
}};

std::string upper(std::string_view token) {
    std::string out(token);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

} // namespace

std::string_view industry_code(Industry industry) {
    return kIndustryNames[static_cast<std::size_t>(industry)].code;
}

std::string_view industry_name(Industry industry) {
    return kIndustryNames[static_cast<std::size_t>(industry)].name;
}

std::string_view rating_code(Rating rating) {
    switch (rating) {
        case Rating::AaaAa: return "AAA_AA";
        case Rating::A: return "A";
        case Rating::Bbb: return "BBB";
    }
    throw InvalidInput("unknown rating value");
}

std::string_view rating_name(Rating rating) {
    switch (rating) {
        case Rating::AaaAa: return "AAA/AA";
        case Rating::A: return "A";
        case Rating::Bbb: return "BBB";
    }
    throw InvalidInput("unknown rating value");
}

Industry parse_industry(std::string_view token) {
    const std::string t = upper(token);
    for (const auto& entry : kIndustryNames) {
        if (t == entry.code || t == upper(entry.name)) return entry.industry;
    }
    throw InvalidInput("unknown industry \"" + std::string(token) + "\"");
}

Rating parse_rating(std::string_view token) {
    const std::string t = upper(token);
    if (t == "AAA_AA" || t == "AAA/AA") return Rating::AaaAa;
    if (t == "A") return Rating::A;
    if (t == "BBB") return Rating::Bbb;
    throw InvalidInput("unknown rating \"" + std::string(token) + "\"");
}

std::string sector_label(const SectorId& sector) {
    return std::string(industry_code(sector.industry)) + "." +
           std::string(rating_code(sector.rating));
}

SectorId parse_sector_label(std::string_view label) {
    const auto dot = label.find('.');
    if (dot == std::string_view::npos) {
        throw InvalidInput("\"" + std::string(label) +
                           "\" is not a sector label (expected INDUSTRY.RATING)");
    }
    return {parse_industry(label.substr(0, dot)), parse_rating(label.substr(dot + 1))};
}

const std::vector<SectorId>& all_sectors() {
    static const std::vector<SectorId> sectors = [] {
        std::vector<SectorId> out;
        out.reserve(kIndustries.size() * kRatings.size());
        for (Industry industry : kIndustries)
            for (Rating rating : kRatings) out.push_back({industry, rating});
        return out;
    }();
    return sectors;
}

SectorPortfolio SectorPortfolio::build(SectorId sector, std::size_t n_bonds,
                                       double avg_maturity, double avg_oas) {
    if (n_bonds == 0) throw InvalidInput("sector portfolio needs at least one bond");
    if (avg_oas < 0.0 || avg_maturity < 0.0) {
        throw InvalidInput("sector portfolio needs non-negative average maturity and OAS");
    }
    SectorPortfolio p;
    p.sector = sector;
    p.n_bonds = n_bonds;
    p.bond_spreads.assign(n_bonds, avg_oas);
    p.avg_maturity = avg_maturity;
    p.avg_oas = avg_oas;
    return p;
}

double portfolio_spread_change(const SectorPortfolio& portfolio,
                               double factor_change_bp,
                               std::span<const double> idio_changes_bp) {
    if (idio_changes_bp.size() != portfolio.n_bonds) {
        throw InvalidInput("expected " + std::to_string(portfolio.n_bonds) +
                           " idiosyncratic changes, got " +
                           std::to_string(idio_changes_bp.size()));
    }
    double sum = 0.0;
    for (double x : idio_changes_bp) sum += x;
    return factor_change_bp + sum / static_cast<double>(portfolio.n_bonds);
}

} // namespace ratespread
