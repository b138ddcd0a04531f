// ratespread: Treasury curve factor decomposition, rates-spreads
// co-movement estimation, and effective-duration analytics for credit
// portfolios.
#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "ratespread/duration.hpp"
#include "ratespread/errors.hpp"
#include "ratespread/io.hpp"
#include "ratespread/reference_tables.hpp"
#include "ratespread/report.hpp"
#include "ratespread/scenario.hpp"
#include "ratespread/simulate.hpp"
#include "ratespread/workflow.hpp"

namespace rs = ratespread;

namespace {

struct FormatOption {
    std::string value{"delimited"};

    void attach(CLI::App* cmd, const std::string& default_value) {
        value = default_value;
        cmd->add_option("--format", value, "output format")
            ->check(CLI::IsMember({"delimited", "text"}))
            ->capture_default_str();
    }
    rs::ReportFormat format() const {
        return value == "text" ? rs::ReportFormat::AlignedText : rs::ReportFormat::Delimited;
    }
};

std::string fmt_fixed(double v, int decimals) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

std::string fmt_full(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

long pct(double fraction) { return std::lround(fraction * 100.0); }

void apply_output_width_override() {
    if (const char* raw = std::getenv("RATESPREAD_OUTPUT_WIDTH")) {
        char* end = nullptr;
        const long width = std::strtol(raw, &end, 10);
        if (end && *end == '\0' && width >= 0 && width <= 64) {
            rs::set_min_column_width(static_cast<int>(width));
        } else {
            std::cerr << "warning: ignoring RATESPREAD_OUTPUT_WIDTH=\"" << raw
                      << "\" (expected an integer in [0, 64])\n";
        }
    }
}

std::string synthetic_date(std::size_t month_index) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%04u-%02u-28",
                  static_cast<unsigned>(1990 + month_index / 12),
                  static_cast<unsigned>(month_index % 12 + 1));
    return buf;
}

// Integrates generated factor/sector changes into level files that the
// estimate pipeline can consume. Base levels are arbitrary: estimation
// first-differences them away.
void write_market_levels(const rs::AlignedSeries& market, const std::string& yields_path,
                         const std::string& spreads_path) {
    const std::size_t n = market.n_periods();
    if (n + 1 > (9999 - 1990 + 1) * 12ul) {
        throw rs::InvalidInput("too many periods to lay out on a monthly calendar");
    }

    if (!yields_path.empty()) {
        std::size_t shift_idx = market.labels.size(), twist_idx = market.labels.size();
        for (std::size_t i = 0; i < market.labels.size(); ++i) {
            if (market.labels[i] == "shift") shift_idx = i;
            if (market.labels[i] == "twist") twist_idx = i;
        }
        if (shift_idx == market.labels.size() || twist_idx == market.labels.size()) {
            throw rs::InvalidInput(
                "--write-yields needs both \"shift\" and \"twist\" series in the config");
        }
        std::vector<rs::CurveObservation> obs;
        std::array<double, 5> level{300.0, 400.0, 500.0, 550.0, 575.0};
        obs.push_back({synthetic_date(0), level});
        for (std::size_t t = 0; t < n; ++t) {
            const auto dy = rs::reconstruct(
                {market.values[t][shift_idx], market.values[t][twist_idx], {}});
            const auto d = dy.to_array();
            for (int k = 0; k < 5; ++k) level[k] += d[k];
            obs.push_back({synthetic_date(t + 1), level});
        }
        rs::io::write_yields(yields_path, obs);
    }

    if (!spreads_path.empty()) {
        std::vector<rs::LabeledSeries> series;
        for (std::size_t i = 0; i < market.labels.size(); ++i) {
            if (market.labels[i] == "shift" || market.labels[i] == "twist") continue;
            rs::LabeledSeries s;
            s.label = market.labels[i];
            double oas = 150.0;
            s.timestamps.push_back(synthetic_date(0));
            s.values.push_back(oas);
            for (std::size_t t = 0; t < n; ++t) {
                oas += market.values[t][i];
                s.timestamps.push_back(synthetic_date(t + 1));
                s.values.push_back(oas);
            }
            series.push_back(std::move(s));
        }
        if (series.empty()) {
            throw rs::InvalidInput("--write-spreads needs at least one sector series");
        }
        rs::io::write_spreads(spreads_path, series);
    }
}

rs::SectorStatsTable stats_from_tables(rs::Vintage vintage, rs::Calibration calibration,
                                       double sigma_spread) {
    const auto& tables = rs::reference_table(vintage, calibration);
    rs::SectorStatsTable out;
    for (const auto& sector : rs::all_sectors()) {
        out[sector] = {sector, sigma_spread, tables.shift_corr_of(sector),
                       tables.twist_corr_of(sector)};
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    apply_output_width_override();

    CLI::App app{"Treasury curve shift/twist factors, rates-spreads co-movement "
                 "estimation, and effective-duration analytics"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "print help for all subcommands");

    // ---- decompose ------------------------------------------------------
    auto* decompose_cmd = app.add_subcommand(
        "decompose", "decompose a yield-curve history into shift/twist factor series");
    std::string decompose_yields;
    bool cumulative = false;
    FormatOption decompose_fmt;
    decompose_cmd->add_option("--yields", decompose_yields, "yield file (percent, CSV)")
        ->required()
        ->check(CLI::ExistingFile);
    decompose_cmd->add_flag("--cumulative", cumulative,
                            "emit cumulative factor levels normalized to start from zero");
    decompose_fmt.attach(decompose_cmd, "delimited");

    // ---- estimate -------------------------------------------------------
    auto* estimate_cmd = app.add_subcommand(
        "estimate", "estimate sector spread correlations with the Treasury factors");
    std::string estimate_yields, estimate_spreads, scheme_name = "equal";
    double half_life = 12.0;
    FormatOption estimate_fmt;
    estimate_cmd->add_option("--yields", estimate_yields, "yield file (percent, CSV)")
        ->required()
        ->check(CLI::ExistingFile);
    estimate_cmd->add_option("--spreads", estimate_spreads, "sector OAS file (bp, CSV)")
        ->required()
        ->check(CLI::ExistingFile);
    estimate_cmd->add_option("--scheme", scheme_name, "weighting scheme")
        ->check(CLI::IsMember({"equal", "ewma"}))
        ->capture_default_str();
    estimate_cmd->add_option("--half-life", half_life, "half-life in periods for --scheme ewma")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    estimate_fmt.attach(estimate_cmd, "delimited");

    // ---- effdur ---------------------------------------------------------
    auto* effdur_cmd = app.add_subcommand(
        "effdur", "effective duration and multiplier for one bond");
    double ed_dmod = 0, ed_rho = 0, ed_sigma_spread = 0, ed_sigma_shift = 0;
    std::optional<double> ed_dspread, ed_shift;
    FormatOption effdur_fmt;
    effdur_cmd->add_option("--dmod", ed_dmod, "modified duration, years")->required();
    effdur_cmd->add_option("--dspread", ed_dspread,
                           "spread duration, years (defaults to --dmod)");
    effdur_cmd->add_option("--rho", ed_rho, "spread/shift correlation in [-1,1]")->required();
    effdur_cmd->add_option("--sigma-spread", ed_sigma_spread, "spread volatility, bp/period")
        ->required();
    effdur_cmd->add_option("--sigma-shift", ed_sigma_shift, "shift volatility, bp/period")
        ->required();
    effdur_cmd->add_option("--shift", ed_shift,
                           "also price a shift of this size, bp");
    effdur_fmt.attach(effdur_cmd, "text");

    // ---- scenario -------------------------------------------------------
    auto* scenario_cmd = app.add_subcommand(
        "scenario", "first-order P&L of a portfolio under a shift/twist shock");
    std::string scenario_portfolio, scenario_stats, scenario_vintage, scenario_calibration;
    double sc_sigma_spread = -1, sc_sigma_shift = 0, sc_sigma_twist = 0;
    double sc_shift = 0, sc_twist = 0;
    bool round_spread = false;
    FormatOption scenario_fmt;
    scenario_cmd->add_option("--portfolio", scenario_portfolio, "portfolio file (CSV)")
        ->required()
        ->check(CLI::ExistingFile);
    auto* stats_opt =
        scenario_cmd->add_option("--stats", scenario_stats, "sector stats file (CSV)")
            ->check(CLI::ExistingFile);
    auto* vintage_opt =
        scenario_cmd
            ->add_option("--vintage", scenario_vintage,
                         "use bundled reference correlations of this vintage")
            ->check(CLI::IsMember({"2003", "2013"}))
            ->excludes(stats_opt);
    scenario_cmd
        ->add_option("--calibration", scenario_calibration, "long or short (with --vintage)")
        ->check(CLI::IsMember({"long", "short"}))
        ->needs(vintage_opt);
    scenario_cmd
        ->add_option("--sigma-spread", sc_sigma_spread,
                     "sector spread volatility, bp/period (with --vintage; the bundled "
                     "tables publish correlations but not volatilities)")
        ->needs(vintage_opt);
    scenario_cmd->add_option("--sigma-shift", sc_sigma_shift, "shift volatility, bp/period")
        ->required();
    scenario_cmd->add_option("--sigma-twist", sc_sigma_twist,
                             "twist volatility, bp/period (needed for --twist)");
    scenario_cmd->add_option("--shift", sc_shift, "shift shock, bp")->capture_default_str();
    scenario_cmd->add_option("--twist", sc_twist, "twist shock, bp in twist-basis units")
        ->capture_default_str();
    scenario_cmd->add_flag(
        "--round-spread", round_spread,
        "carry the reported one-decimal spread move through the price step");
    scenario_fmt.attach(scenario_cmd, "delimited");

    // ---- simulate -------------------------------------------------------
    auto* simulate_cmd = app.add_subcommand(
        "simulate", "generate a synthetic market with known correlation structure");
    std::string simulate_config, simulate_write_yields, simulate_write_spreads;
    std::optional<std::uint64_t> simulate_seed;
    bool summary = false;
    FormatOption simulate_fmt;
    simulate_cmd->add_option("--config", simulate_config, "generator config (key=value)")
        ->required()
        ->check(CLI::ExistingFile);
    simulate_cmd->add_option("--seed", simulate_seed, "override the config seed");
    simulate_cmd->add_flag("--summary", summary,
                           "print estimated equal-weight correlations instead of the series");
    simulate_cmd->add_option("--write-yields", simulate_write_yields,
                             "integrate the factor changes into a yield level file");
    simulate_cmd->add_option("--write-spreads", simulate_write_spreads,
                             "integrate the sector changes into an OAS level file");
    simulate_fmt.attach(simulate_cmd, "delimited");

    // ---- tables ---------------------------------------------------------
    auto* tables_cmd = app.add_subcommand(
        "tables", "print the bundled reference correlation and multiplier tables");
    std::string tables_vintage, tables_calibration;
    FormatOption tables_fmt;
    tables_cmd->add_option("--vintage", tables_vintage, "2003 or 2013")
        ->required()
        ->check(CLI::IsMember({"2003", "2013"}));
    tables_cmd->add_option("--calibration", tables_calibration, "long or short")
        ->required()
        ->check(CLI::IsMember({"long", "short"}));
    tables_fmt.attach(tables_cmd, "text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message
        return 2;
    }

    try {
        if (app.got_subcommand(decompose_cmd)) {
            const auto obs = rs::io::load_yields(decompose_yields);
            const auto series = rs::factor_series(obs);
            if (cumulative) {
                const auto cum = rs::cumulative_factors(obs.front().timestamp, series);
                std::cout << rs::render_report(cum, decompose_fmt.format());
            } else {
                std::cout << rs::render_report(series, decompose_fmt.format());
            }
        } else if (app.got_subcommand(estimate_cmd)) {
            const auto scheme = scheme_name == "ewma"
                                    ? rs::WeightScheme::exponential(half_life)
                                    : rs::WeightScheme::equal_weight();
            // Short-window exponential estimates are dominated by a handful
            // of points; require two half-lives of data.
            const std::size_t min_periods =
                scheme.is_exponential()
                    ? static_cast<std::size_t>(std::ceil(2.0 * scheme.half_life))
                    : 0;
            const auto report = rs::estimate_comovement(
                rs::io::load_yields(estimate_yields), rs::io::load_spreads(estimate_spreads),
                scheme, min_periods);
            std::cout << rs::render_report(report, estimate_fmt.format());
        } else if (app.got_subcommand(effdur_cmd)) {
            if (ed_dspread < 0) ed_dspread = ed_dmod;
            const auto report = rs::duration_report(ed_dmod, ed_dspread, ed_rho,
                                                    ed_sigma_spread, ed_sigma_shift);
            if (effdur_fmt.format() == rs::ReportFormat::Delimited) {
                std::cout << "# format_version=" << rs::io::kFormatVersion << "\n";
                std::cout << "metric,value\n";
                std::cout << "d_eff_years," << fmt_full(report.d_eff) << "\n";
                std::cout << "m_eff_pct," << pct(report.m_eff) << "\n";
                if (ed_shift) {
                    const double ds = rs::expected_spread_change(
                        ed_rho, ed_sigma_spread, ed_sigma_shift, *ed_shift);
                    std::cout << "delta_spread_bp," << fmt_full(ds) << "\n";
                    std::cout << "price_change_per_100,"
                              << fmt_full(rs::price_impact(ed_dmod, *ed_shift, ed_dspread, ds))
                              << "\n";
                }
            } else {
                std::cout << "D_eff  " << fmt_fixed(report.d_eff, 3) << " years\n";
                std::cout << "M_eff  " << pct(report.m_eff) << "%\n";
                if (ed_shift) {
                    const double ds = rs::expected_spread_change(
                        ed_rho, ed_sigma_spread, ed_sigma_shift, *ed_shift);
                    std::cout << "shift of " << fmt_fixed(*ed_shift, 1)
                              << " bp: spread move " << fmt_fixed(ds, 1)
                              << " bp, price change "
                              << fmt_fixed(rs::price_impact(ed_dmod, *ed_shift, ed_dspread, ds),
                                           4)
                              << " per 100\n";
                }
            }
        } else if (app.got_subcommand(scenario_cmd)) {
            rs::SectorStatsTable stats;
            if (!scenario_stats.empty()) {
                stats = rs::io::load_sector_stats(scenario_stats);
            } else if (!scenario_vintage.empty()) {
                if (scenario_calibration.empty()) {
                    throw rs::InvalidInput("--vintage needs --calibration (long or short)");
                }
                if (sc_sigma_spread < 0) {
                    throw rs::InvalidInput(
                        "--vintage needs --sigma-spread: the bundled tables publish "
                        "correlations but not sector volatilities");
                }
                stats = stats_from_tables(rs::parse_vintage(scenario_vintage),
                                          rs::parse_calibration(scenario_calibration),
                                          sc_sigma_spread);
            } else {
                throw rs::InvalidInput(
                    "scenario needs sector statistics: --stats FILE, or --vintage/"
                    "--calibration/--sigma-spread for the bundled tables");
            }
            if (sc_twist != 0.0 && sc_sigma_twist <= 0.0) {
                throw rs::InvalidInput("a twist shock needs --sigma-twist > 0");
            }

            const auto book = rs::io::load_portfolio(scenario_portfolio);
            double weight_sum = 0;
            for (const auto& p : book) weight_sum += p.weight;
            if (std::abs(weight_sum - 1.0) > 1e-9) {
                std::cerr << "note: portfolio weights sum to " << fmt_full(weight_sum)
                          << "; totals are weight-weighted price changes\n";
            }
            const auto result = rs::scenario_pnl(book, {sc_shift, sc_twist}, stats,
                                                 {sc_sigma_shift, sc_sigma_twist}, round_spread);
            std::cout << rs::render_report(result, scenario_fmt.format());
        } else if (app.got_subcommand(simulate_cmd)) {
            auto cfg = rs::io::load_synth_config(simulate_config);
            if (simulate_seed) cfg.seed = *simulate_seed;
            const auto market = rs::generate_market(cfg);
            if (!simulate_write_yields.empty() || !simulate_write_spreads.empty()) {
                write_market_levels(market, simulate_write_yields, simulate_write_spreads);
            } else if (summary) {
                const auto matrix = rs::corr_matrix(market, rs::WeightScheme::equal_weight());
                std::cout << rs::render_report(matrix, simulate_fmt.format());
            } else {
                std::cout << rs::render_report(market, simulate_fmt.format());
            }
        } else if (app.got_subcommand(tables_cmd)) {
            const auto& tables = rs::reference_table(rs::parse_vintage(tables_vintage),
                                                 rs::parse_calibration(tables_calibration));
            std::cout << rs::render_report(tables, tables_fmt.format());
        }
    } catch (const rs::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
