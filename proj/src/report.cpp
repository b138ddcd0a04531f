#include "ratespread/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace ratespread {

namespace {

int g_min_column_width = 0;

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

/// Signed whole percent, e.g. -0.325 -> "-33".
std::string fmt_pct(double fraction) {
    return std::to_string(std::llround(fraction * 100.0));
}

std::string fmt_pct_sign(double fraction) { return fmt_pct(fraction) + "%"; }

std::string version_stamp() {
    return "# format_version=1\n";
}

std::string sector_grid_text(const std::string& title,
                             const std::array<std::array<double, 3>, 9>& grid) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"", "AAA/AA", "A", "BBB"});
    for (std::size_t i = 0; i < kIndustries.size(); ++i) {
        std::vector<std::string> row{std::string(industry_name(kIndustries[i]))};
        for (int r = 0; r < 3; ++r) row.push_back(fmt_pct_sign(grid[i][r]));
        rows.push_back(std::move(row));
    }
    return title + "\n\n" + render_aligned_grid(rows);
}

} // namespace

void set_min_column_width(int width) { g_min_column_width = std::max(width, 0); }
int min_column_width() { return g_min_column_width; }

std::string render_aligned_grid(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    for (std::size_t c = 1; c < width.size(); ++c) {
        width[c] = std::max(width[c], static_cast<std::size_t>(g_min_column_width));
    }
    std::ostringstream out;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c == 0) {
                out << row[c];
                if (row.size() > 1) out << std::string(width[0] - row[c].size(), ' ');
            } else {
                out << "  " << std::string(width[c] - row[c].size(), ' ') << row[c];
            }
        }
        out << '\n';
    }
    return out.str();
}

std::string render_report(const ReferenceTables& tables, ReportFormat format) {
    const std::string vintage(vintage_code(tables.vintage));
    const std::string calib(calibration_code(tables.calibration));

    if (format == ReportFormat::Delimited) {
        std::ostringstream out;
        out << version_stamp();
        out << "# vintage=" << vintage << " calibration=" << calib << "\n";
        out << "table,row,col,value_pct\n";
        auto emit_grid = [&](const char* name,
                             const std::array<std::array<double, 3>, 9>& grid) {
            for (std::size_t i = 0; i < kIndustries.size(); ++i) {
                for (std::size_t r = 0; r < kRatings.size(); ++r) {
                    out << name << ',' << industry_code(kIndustries[i]) << ','
                        << rating_code(kRatings[r]) << ',' << fmt_pct(grid[i][r]) << '\n';
                }
            }
        };
        emit_grid("shift_corr", tables.shift_corr);
        emit_grid("twist_corr", tables.twist_corr);
        for (ExtraFactor f : {ExtraFactor::SpreadTwist, ExtraFactor::SpreadDispersion}) {
            for (TreasuryFactor g : {TreasuryFactor::Shift, TreasuryFactor::Twist}) {
                out << "extra_corr," << extra_factor_code(f) << ',' << treasury_factor_code(g)
                    << ',' << fmt_pct(tables.extra_corr_of(f, g)) << '\n';
            }
        }
        emit_grid("multiplier", tables.multipliers);
        return out.str();
    }

    const std::string tag = "(" + calib + "-term model, " + vintage + ")";
    std::ostringstream out;
    out << sector_grid_text("Sector spread correlations with Treasury curve shifts " + tag,
                            tables.shift_corr);
    out << "\n";
    out << sector_grid_text("Sector spread correlations with Treasury curve twists " + tag,
                            tables.twist_corr);
    out << "\n";
    out << "Additional spread factor correlations with Treasury curve changes " + tag + "\n\n";
    {
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"", "Treasury Shift", "Treasury Twist"});
        for (ExtraFactor f : {ExtraFactor::SpreadTwist, ExtraFactor::SpreadDispersion}) {
            rows.push_back({std::string(extra_factor_name(f)),
                            fmt_pct_sign(tables.extra_corr_of(f, TreasuryFactor::Shift)),
                            fmt_pct_sign(tables.extra_corr_of(f, TreasuryFactor::Twist))});
        }
        out << render_aligned_grid(rows);
    }
    out << "\n";
    out << sector_grid_text("Effective duration multipliers " + tag, tables.multipliers);
    return out.str();
}

std::string render_report(const FactorSeries& series, ReportFormat format) {
    if (format == ReportFormat::Delimited) {
        std::ostringstream out;
        out << version_stamp();
        out << "timestamp,shift_bp,twist_bp,residual_norm_bp\n";
        for (std::size_t t = 0; t < series.timestamps.size(); ++t) {
            out << series.timestamps[t] << ',' << fmt_full(series.shift_series[t]) << ','
                << fmt_full(series.twist_series[t]) << ','
                << fmt_full(series.residual_norms[t]) << '\n';
        }
        return out.str();
    }
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"timestamp", "shift (bp)", "twist (bp)", "residual norm (bp)"});
    for (std::size_t t = 0; t < series.timestamps.size(); ++t) {
        rows.push_back({series.timestamps[t], fmt_fixed(series.shift_series[t], 4),
                        fmt_fixed(series.twist_series[t], 4),
                        fmt_fixed(series.residual_norms[t], 4)});
    }
    return render_aligned_grid(rows);
}

CumulativeFactorSeries cumulative_factors(const std::string& start_timestamp,
                                          const FactorSeries& series) {
    CumulativeFactorSeries out;
    out.timestamps.reserve(series.timestamps.size() + 1);
    out.shift_cum_bp.reserve(series.timestamps.size() + 1);
    out.twist_cum_bp.reserve(series.timestamps.size() + 1);
    // Normalized to start from zero at the first observation.
    out.timestamps.push_back(start_timestamp);
    out.shift_cum_bp.push_back(0.0);
    out.twist_cum_bp.push_back(0.0);
    double shift = 0.0, twist = 0.0;
    for (std::size_t t = 0; t < series.timestamps.size(); ++t) {
        shift += series.shift_series[t];
        twist += series.twist_series[t];
        out.timestamps.push_back(series.timestamps[t]);
        out.shift_cum_bp.push_back(shift);
        out.twist_cum_bp.push_back(twist);
    }
    return out;
}

std::string render_report(const CumulativeFactorSeries& series, ReportFormat format) {
    if (format == ReportFormat::Delimited) {
        std::ostringstream out;
        out << version_stamp();
        out << "timestamp,shift_cum_bp,twist_cum_bp\n";
        for (std::size_t t = 0; t < series.timestamps.size(); ++t) {
            out << series.timestamps[t] << ',' << fmt_full(series.shift_cum_bp[t]) << ','
                << fmt_full(series.twist_cum_bp[t]) << '\n';
        }
        return out.str();
    }
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"timestamp", "cumulative shift (bp)", "cumulative twist (bp)"});
    for (std::size_t t = 0; t < series.timestamps.size(); ++t) {
        rows.push_back({series.timestamps[t], fmt_fixed(series.shift_cum_bp[t], 4),
                        fmt_fixed(series.twist_cum_bp[t], 4)});
    }
    return render_aligned_grid(rows);
}

std::string render_report(const AlignedSeries& series, ReportFormat format) {
    if (format == ReportFormat::Delimited) {
        std::ostringstream out;
        out << version_stamp();
        out << "timestamp";
        for (const auto& label : series.labels) out << ',' << label;
        out << '\n';
        for (std::size_t t = 0; t < series.n_periods(); ++t) {
            out << series.timestamps[t];
            for (double v : series.values[t]) out << ',' << fmt_full(v);
            out << '\n';
        }
        return out.str();
    }
    std::vector<std::vector<std::string>> rows;
    {
        std::vector<std::string> head{"timestamp"};
        head.insert(head.end(), series.labels.begin(), series.labels.end());
        rows.push_back(std::move(head));
    }
    for (std::size_t t = 0; t < series.n_periods(); ++t) {
        std::vector<std::string> row{series.timestamps[t]};
        for (double v : series.values[t]) row.push_back(fmt_fixed(v, 4));
        rows.push_back(std::move(row));
    }
    return render_aligned_grid(rows);
}

std::string render_report(const CorrelationMatrix& matrix, ReportFormat format) {
    if (format == ReportFormat::Delimited) {
        std::ostringstream out;
        out << version_stamp();
        out << "# n_periods=" << matrix.n_periods << " low_sample=" << (matrix.low_sample ? 1 : 0)
            << " psd_ok=" << (matrix.psd_ok ? 1 : 0)
            << " min_eigenvalue=" << fmt_full(matrix.min_eigenvalue) << "\n";
        out << "kind,a,b,value\n";
        for (std::size_t i = 0; i < matrix.labels.size(); ++i) {
            for (std::size_t j = 0; j < matrix.labels.size(); ++j) {
                out << "corr," << matrix.labels[i] << ',' << matrix.labels[j] << ','
                    << fmt_pct(matrix.rho[i][j]) << '\n';
            }
        }
        for (std::size_t i = 0; i < matrix.labels.size(); ++i) {
            out << "sigma," << matrix.labels[i] << ",," << fmt_full(matrix.sigma[i]) << '\n';
        }
        return out.str();
    }

    std::ostringstream out;
    out << "Correlations (n_periods=" << matrix.n_periods << ")";
    if (matrix.low_sample) out << "  [low sample]";
    if (!matrix.psd_ok) out << "  [NOT PSD: min eigenvalue " << fmt_full(matrix.min_eigenvalue) << "]";
    out << "\n\n";
    std::vector<std::vector<std::string>> rows;
    {
        std::vector<std::string> head{""};
        head.insert(head.end(), matrix.labels.begin(), matrix.labels.end());
        rows.push_back(std::move(head));
    }
    for (std::size_t i = 0; i < matrix.labels.size(); ++i) {
        std::vector<std::string> row{matrix.labels[i]};
        for (std::size_t j = 0; j < matrix.labels.size(); ++j) {
            row.push_back(fmt_pct_sign(matrix.rho[i][j]));
        }
        rows.push_back(std::move(row));
    }
    out << render_aligned_grid(rows);
    out << "\nVolatilities (bp/period)\n\n";
    std::vector<std::vector<std::string>> vol_rows;
    for (std::size_t i = 0; i < matrix.labels.size(); ++i) {
        vol_rows.push_back({matrix.labels[i], fmt_fixed(matrix.sigma[i], 2)});
    }
    out << render_aligned_grid(vol_rows);
    return out.str();
}

std::string render_report(const ScenarioResult& result, ReportFormat format) {
    if (format == ReportFormat::Delimited) {
        std::ostringstream out;
        out << version_stamp();
        out << "# shift_bp=" << fmt_full(result.shock.delta_shift_bp)
            << " twist_bp=" << fmt_full(result.shock.delta_twist_bp) << "\n";
        out << "id,delta_y_bp,delta_s_bp,price_change,weighted_change,twist_yield_omitted\n";
        for (const auto& p : result.positions) {
            out << p.id << ',' << fmt_full(p.delta_y_bp) << ',' << fmt_full(p.delta_s_bp) << ','
                << fmt_full(p.price_change) << ',' << fmt_full(p.weighted_change) << ','
                << (p.twist_yield_omitted ? 1 : 0) << '\n';
        }
        out << "TOTAL,,,," << fmt_full(result.total) << ",\n";
        return out.str();
    }

    std::ostringstream out;
    out << "Scenario: shift " << fmt_fixed(result.shock.delta_shift_bp, 1) << " bp, twist "
        << fmt_fixed(result.shock.delta_twist_bp, 1) << " bp\n\n";
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"id", "dY (bp)", "dS (bp)", "price chg (per 100)", "weighted"});
    bool omitted = false;
    for (const auto& p : result.positions) {
        rows.push_back({p.id, fmt_fixed(p.delta_y_bp, 1), fmt_fixed(p.delta_s_bp, 1),
                        fmt_fixed(p.price_change, 4), fmt_fixed(p.weighted_change, 4)});
        omitted = omitted || p.twist_yield_omitted;
    }
    rows.push_back({"TOTAL", "", "", "", fmt_fixed(result.total, 4)});
    out << render_aligned_grid(rows);
    if (omitted) {
        out << "\nnote: twist shock applied to spreads only for positions without a tenor\n";
    }
    return out.str();
}

} // namespace ratespread
