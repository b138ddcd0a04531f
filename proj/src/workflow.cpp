#include "ratespread/workflow.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "ratespread/duration.hpp"
#include "ratespread/errors.hpp"
#include "ratespread/reference_tables.hpp"

namespace ratespread {

namespace {

std::string fmt_full(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string fmt_fixed(double v, int decimals) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

std::string fmt_pct(double fraction) {
    return std::to_string(std::llround(fraction * 100.0));
}

} // namespace

EstimateReport estimate_comovement(const std::vector<CurveObservation>& yields,
                                   const std::vector<LabeledSeries>& spread_levels,
                                   const WeightScheme& scheme,
                                   std::size_t min_periods) {
    const auto factors = factor_series(yields);

    std::vector<LabeledSeries> inputs;
    inputs.push_back({"shift", factors.timestamps, factors.shift_series});
    inputs.push_back({"twist", factors.timestamps, factors.twist_series});

    for (const auto& levels : spread_levels) {
        if (levels.values.size() < 2) {
            throw InsufficientData("sector " + levels.label + " has " +
                                   std::to_string(levels.values.size()) +
                                   " observations; need at least 2 to difference");
        }
        LabeledSeries changes;
        changes.label = levels.label;
        changes.timestamps.assign(levels.timestamps.begin() + 1, levels.timestamps.end());
        changes.values.resize(levels.values.size() - 1);
        for (std::size_t t = 1; t < levels.values.size(); ++t) {
            changes.values[t - 1] = levels.values[t] - levels.values[t - 1];
        }
        inputs.push_back(std::move(changes));
    }

    const auto aligned = align_series(inputs);
    if (aligned.n_periods() < std::max<std::size_t>(min_periods, 2)) {
        throw InsufficientData("estimation needs at least " +
                               std::to_string(std::max<std::size_t>(min_periods, 2)) +
                               " aligned periods, got " + std::to_string(aligned.n_periods()));
    }

    const auto matrix = corr_matrix(aligned, scheme);

    EstimateReport report;
    report.scheme = scheme;
    report.sigma_shift = matrix.sigma_of("shift");
    report.sigma_twist = matrix.sigma_of("twist");
    report.n_periods = matrix.n_periods;
    report.dropped_periods = aligned.dropped_periods;
    report.low_sample = matrix.low_sample;

    for (const auto& label : matrix.labels) {
        if (label == "shift" || label == "twist") continue;
        SectorEstimate row;
        row.sector = parse_sector_label(label);
        row.n_periods = matrix.n_periods;
        row.rho_shift = matrix.rho_of(label, "shift");
        row.rho_twist = matrix.rho_of(label, "twist");
        row.sigma_spread = matrix.sigma_of(label);
        row.m_eff =
            effective_duration_multiplier(row.rho_shift, row.sigma_spread, report.sigma_shift);
        report.rows.push_back(row);
    }
    std::sort(report.rows.begin(), report.rows.end(),
              [](const SectorEstimate& a, const SectorEstimate& b) {
                  const auto ka = std::pair(industry_index(a.sector.industry),
                                            rating_index(a.sector.rating));
                  const auto kb = std::pair(industry_index(b.sector.industry),
                                            rating_index(b.sector.rating));
                  return ka < kb;
              });
    return report;
}

std::string render_report(const EstimateReport& report, ReportFormat format) {
    const std::string scheme_tag =
        report.scheme.is_exponential()
            ? "ewma half_life=" + fmt_full(report.scheme.half_life)
            : "equal";

    if (format == ReportFormat::Delimited) {
        std::ostringstream out;
        out << "# format_version=1\n";
        out << "# scheme=" << scheme_tag << "\n";
        out << "# sigma_shift_bp=" << fmt_full(report.sigma_shift)
            << " sigma_twist_bp=" << fmt_full(report.sigma_twist) << "\n";
        out << "# n_periods=" << report.n_periods
            << " dropped_periods=" << report.dropped_periods
            << " low_sample=" << (report.low_sample ? 1 : 0) << "\n";
        out << "industry,rating,n_periods,rho_shift_pct,rho_twist_pct,sigma_spread_bp,m_eff_pct\n";
        for (const auto& row : report.rows) {
            out << industry_code(row.sector.industry) << ',' << rating_code(row.sector.rating)
                << ',' << row.n_periods << ',' << fmt_pct(row.rho_shift) << ','
                << fmt_pct(row.rho_twist) << ',' << fmt_full(row.sigma_spread) << ','
                << fmt_pct(row.m_eff) << '\n';
        }
        return out.str();
    }

    std::ostringstream out;
    out << "Rates-spreads co-movement estimates (" << scheme_tag << ")\n";
    out << "sigma_shift " << fmt_fixed(report.sigma_shift, 2) << " bp/period, sigma_twist "
        << fmt_fixed(report.sigma_twist, 2) << " bp/period, n_periods " << report.n_periods
        << ", dropped " << report.dropped_periods << (report.low_sample ? ", LOW SAMPLE" : "")
        << "\n\n";
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"industry", "rating", "rho_shift", "rho_twist", "sigma_spread", "m_eff"});
    for (const auto& row : report.rows) {
        rows.push_back({std::string(industry_name(row.sector.industry)),
                        std::string(rating_name(row.sector.rating)),
                        fmt_pct(row.rho_shift) + "%", fmt_pct(row.rho_twist) + "%",
                        fmt_fixed(row.sigma_spread, 2), fmt_pct(row.m_eff) + "%"});
    }
    out << render_aligned_grid(rows);
    return out.str();
}

} // namespace ratespread
