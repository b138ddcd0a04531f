#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "ratespread/covariance.hpp"
#include "ratespread/curve_factors.hpp"
#include "ratespread/duration.hpp"
#include "ratespread/errors.hpp"
#include "ratespread/io.hpp"
#include "ratespread/reference_tables.hpp"
#include "ratespread/report.hpp"
#include "ratespread/scenario.hpp"
#include "ratespread/sector.hpp"
#include "ratespread/simulate.hpp"
#include "ratespread/workflow.hpp"

namespace py = pybind11;
using namespace ratespread;

namespace {

std::vector<std::vector<double>> grid_to_lists(const std::array<std::array<double, 3>, 9>& g) {
    std::vector<std::vector<double>> out;
    for (const auto& row : g) out.push_back({row[0], row[1], row[2]});
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Treasury curve shift/twist factors, weighted rates-spreads correlation "
              "estimation, and effective-duration analytics";

    // Exceptions: base first so derived translators take precedence.
    static py::exception<Error> base_exc(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidInput>(m, "InvalidInput", base_exc);
    py::register_exception<InsufficientData>(m, "InsufficientData", base_exc);
    py::register_exception<DegenerateSeries>(m, "DegenerateSeries", base_exc);
    py::register_exception<InvalidConfig>(m, "InvalidConfig", base_exc);
    py::register_exception<ParseError>(m, "ParseError", base_exc);

    // ---- sectors ---------------------------------------------------------
    py::enum_<Industry>(m, "Industry")
        .value("BANKING", Industry::BankingBrokerage)
        .value("FINANCIAL", Industry::FinancialInsuranceReits)
        .value("BASIC", Industry::BasicCapitalGoods)
        .value("CONSUMER_CYCLICAL", Industry::ConsumerCyclical)
        .value("CONSUMER_NON_CYCLICAL", Industry::ConsumerNonCyclical)
        .value("COMM_TECH", Industry::CommunicationTechnology)
        .value("ENERGY_TRANS", Industry::EnergyTransportation)
        .value("UTILITIES", Industry::Utilities)
        .value("NON_CORPORATE", Industry::NonCorporate);

    py::enum_<Rating>(m, "Rating")
        .value("AAA_AA", Rating::AaaAa)
        .value("A", Rating::A)
        .value("BBB", Rating::Bbb);

    py::class_<SectorId>(m, "SectorId")
        .def(py::init<Industry, Rating>(), py::arg("industry"), py::arg("rating"))
        .def_readwrite("industry", &SectorId::industry)
        .def_readwrite("rating", &SectorId::rating)
        .def("label", [](const SectorId& s) { return sector_label(s); })
        .def("__eq__", [](const SectorId& a, const SectorId& b) { return a == b; })
        .def("__hash__",
             [](const SectorId& s) {
                 return static_cast<std::size_t>(s.industry) * 31 +
                        static_cast<std::size_t>(s.rating);
             })
        .def("__repr__", [](const SectorId& s) { return "SectorId(" + sector_label(s) + ")"; });

    m.def("all_sectors", &all_sectors, "All 27 industry x rating sectors in canonical order");
    m.def("parse_industry", &parse_industry, py::arg("token"));
    m.def("parse_rating", &parse_rating, py::arg("token"));
    m.def("industry_name", &industry_name, py::arg("industry"));
    m.def("rating_name", &rating_name, py::arg("rating"));

    // ---- curve factors ---------------------------------------------------
    m.attr("KEY_RATE_TENORS") = kKeyRateTenors;
    m.attr("SHIFT_BASIS") = kShiftBasis;
    m.attr("TWIST_BASIS") = kTwistBasis;

    py::class_<KeyRateChange>(m, "KeyRateChange")
        .def(py::init([](double dy2, double dy5, double dy10, double dy20, double dy30) {
                 return KeyRateChange{dy2, dy5, dy10, dy20, dy30};
             }),
             py::arg("dy2"), py::arg("dy5"), py::arg("dy10"), py::arg("dy20"), py::arg("dy30"))
        .def(py::init(&KeyRateChange::from_array), py::arg("values"))
        .def_readwrite("dy2", &KeyRateChange::dy2)
        .def_readwrite("dy5", &KeyRateChange::dy5)
        .def_readwrite("dy10", &KeyRateChange::dy10)
        .def_readwrite("dy20", &KeyRateChange::dy20)
        .def_readwrite("dy30", &KeyRateChange::dy30)
        .def("to_array", &KeyRateChange::to_array);

    py::class_<FactorLoadings>(m, "FactorLoadings")
        .def(py::init([](double shift, double twist, const std::array<double, 5>& residual) {
                 return FactorLoadings{shift, twist, residual};
             }),
             py::arg("gamma_shift"), py::arg("gamma_twist"),
             py::arg("residual") = std::array<double, 5>{})
        .def_readwrite("gamma_shift", &FactorLoadings::gamma_shift)
        .def_readwrite("gamma_twist", &FactorLoadings::gamma_twist)
        .def_readwrite("residual", &FactorLoadings::residual);

    py::class_<CurveObservation>(m, "CurveObservation")
        .def(py::init([](std::string timestamp, const std::array<double, 5>& levels_bp) {
                 return CurveObservation{std::move(timestamp), levels_bp};
             }),
             py::arg("timestamp"), py::arg("levels_bp"))
        .def_readwrite("timestamp", &CurveObservation::timestamp)
        .def_readwrite("levels_bp", &CurveObservation::levels_bp);

    py::class_<FactorSeries>(m, "FactorSeries")
        .def_readonly("timestamps", &FactorSeries::timestamps)
        .def_readonly("shift_series", &FactorSeries::shift_series)
        .def_readonly("twist_series", &FactorSeries::twist_series)
        .def_readonly("residual_norms", &FactorSeries::residual_norms);

    m.def("decompose", &decompose, py::arg("dy"),
          "Project a key-rate change onto the shift/twist basis");
    m.def("reconstruct", &reconstruct, py::arg("loadings"));
    m.def("factor_series", &factor_series, py::arg("levels"));

    // ---- weighting and correlation ----------------------------------------
    py::class_<WeightScheme>(m, "WeightScheme")
        .def_static("equal_weight", &WeightScheme::equal_weight)
        .def_static("exponential", &WeightScheme::exponential, py::arg("half_life") = 12.0)
        .def_property_readonly("is_exponential", &WeightScheme::is_exponential)
        .def_readonly("half_life", &WeightScheme::half_life);

    m.def("ewma_weights", &ewma_weights, py::arg("half_life"), py::arg("n"),
          "Age-ordered exponential weights (index 0 = most recent), summing to 1");
    m.def("scheme_weights", &scheme_weights, py::arg("scheme"), py::arg("n"));

    py::class_<WeightedMoments>(m, "WeightedMoments")
        .def_readonly("mean_x", &WeightedMoments::mean_x)
        .def_readonly("mean_y", &WeightedMoments::mean_y)
        .def_readonly("cov_xy", &WeightedMoments::cov_xy)
        .def_readonly("var_x", &WeightedMoments::var_x)
        .def_readonly("var_y", &WeightedMoments::var_y);

    m.def(
        "weighted_moments",
        [](const std::vector<double>& x, const std::vector<double>& y,
           const std::vector<double>& w) { return weighted_moments(x, y, w); },
        py::arg("x"), py::arg("y"), py::arg("w"));
    m.def(
        "weighted_corr",
        [](const std::vector<double>& x, const std::vector<double>& y,
           const WeightScheme& scheme) { return weighted_corr(x, y, scheme); },
        py::arg("x"), py::arg("y"), py::arg("scheme"));

    py::class_<LabeledSeries>(m, "LabeledSeries")
        .def(py::init([](std::string label, std::vector<std::string> timestamps,
                         std::vector<double> values) {
                 return LabeledSeries{std::move(label), std::move(timestamps),
                                      std::move(values)};
             }),
             py::arg("label"), py::arg("timestamps"), py::arg("values"))
        .def_readwrite("label", &LabeledSeries::label)
        .def_readwrite("timestamps", &LabeledSeries::timestamps)
        .def_readwrite("values", &LabeledSeries::values);

    py::class_<AlignedSeries>(m, "AlignedSeries")
        .def(py::init())
        .def_readwrite("labels", &AlignedSeries::labels)
        .def_readwrite("timestamps", &AlignedSeries::timestamps)
        .def_readwrite("values", &AlignedSeries::values)
        .def_readonly("dropped_periods", &AlignedSeries::dropped_periods)
        .def("n_periods", &AlignedSeries::n_periods)
        .def("n_series", &AlignedSeries::n_series)
        .def("column", &AlignedSeries::column, py::arg("series_index"));

    m.def("align_series", &align_series, py::arg("series"));

    py::class_<CorrelationMatrix>(m, "CorrelationMatrix")
        .def_readonly("labels", &CorrelationMatrix::labels)
        .def_readonly("rho", &CorrelationMatrix::rho)
        .def_readonly("sigma", &CorrelationMatrix::sigma)
        .def_readonly("n_periods", &CorrelationMatrix::n_periods)
        .def_readonly("low_sample", &CorrelationMatrix::low_sample)
        .def_readonly("psd_ok", &CorrelationMatrix::psd_ok)
        .def_readonly("min_eigenvalue", &CorrelationMatrix::min_eigenvalue)
        .def("rho_of", &CorrelationMatrix::rho_of, py::arg("a"), py::arg("b"))
        .def("sigma_of", &CorrelationMatrix::sigma_of, py::arg("label"));

    m.def("corr_matrix", &corr_matrix, py::arg("series"), py::arg("scheme"));

    // ---- synthetic market -------------------------------------------------
    py::class_<SynthConfig>(m, "SynthConfig")
        .def(py::init())
        .def_readwrite("n_periods", &SynthConfig::n_periods)
        .def_readwrite("labels", &SynthConfig::labels)
        .def_readwrite("vols", &SynthConfig::vols)
        .def_readwrite("target_corr", &SynthConfig::target_corr)
        .def_readwrite("idio_vol", &SynthConfig::idio_vol)
        .def_readwrite("n_bonds", &SynthConfig::n_bonds)
        .def_readwrite("seed", &SynthConfig::seed);

    m.def("generate_market", &generate_market, py::arg("config"));

    py::class_<SectorPortfolio>(m, "SectorPortfolio")
        .def_static("build", &SectorPortfolio::build, py::arg("sector"), py::arg("n_bonds"),
                    py::arg("avg_maturity"), py::arg("avg_oas"))
        .def_readonly("sector", &SectorPortfolio::sector)
        .def_readonly("n_bonds", &SectorPortfolio::n_bonds)
        .def_readonly("bond_spreads", &SectorPortfolio::bond_spreads)
        .def_readonly("avg_maturity", &SectorPortfolio::avg_maturity)
        .def_readonly("avg_oas", &SectorPortfolio::avg_oas);

    m.def(
        "portfolio_spread_change",
        [](const SectorPortfolio& p, double factor_change, const std::vector<double>& idio) {
            return portfolio_spread_change(p, factor_change, idio);
        },
        py::arg("portfolio"), py::arg("factor_change_bp"), py::arg("idio_changes_bp"));

    // ---- duration ---------------------------------------------------------
    py::class_<SectorStats>(m, "SectorStats")
        .def(py::init([](SectorId sector, double sigma_spread, double rho_shift,
                         double rho_twist) {
                 return SectorStats{sector, sigma_spread, rho_shift, rho_twist};
             }),
             py::arg("sector"), py::arg("sigma_spread"), py::arg("rho_shift"),
             py::arg("rho_twist") = 0.0)
        .def_readwrite("sector", &SectorStats::sector)
        .def_readwrite("sigma_spread", &SectorStats::sigma_spread)
        .def_readwrite("rho_shift", &SectorStats::rho_shift)
        .def_readwrite("rho_twist", &SectorStats::rho_twist);

    py::class_<FactorStats>(m, "FactorStats")
        .def(py::init([](double sigma_shift, double sigma_twist) {
                 return FactorStats{sigma_shift, sigma_twist};
             }),
             py::arg("sigma_shift"), py::arg("sigma_twist") = 0.0)
        .def_readwrite("sigma_shift", &FactorStats::sigma_shift)
        .def_readwrite("sigma_twist", &FactorStats::sigma_twist);

    py::class_<DurationReport>(m, "DurationReport")
        .def_readonly("d_mod", &DurationReport::d_mod)
        .def_readonly("d_spread", &DurationReport::d_spread)
        .def_readonly("d_eff", &DurationReport::d_eff)
        .def_readonly("m_eff", &DurationReport::m_eff);

    m.def("expected_spread_change", &expected_spread_change, py::arg("rho"),
          py::arg("sigma_spread"), py::arg("sigma_factor"), py::arg("delta_factor_bp"));
    m.def("price_impact", &price_impact, py::arg("d_mod_years"), py::arg("delta_y_bp"),
          py::arg("d_spread_years"), py::arg("delta_s_bp"));
    m.def("effective_duration", &effective_duration, py::arg("d_mod"), py::arg("d_spread"),
          py::arg("rho"), py::arg("sigma_spread"), py::arg("sigma_shift"));
    m.def("effective_duration_multiplier", &effective_duration_multiplier, py::arg("rho"),
          py::arg("sigma_spread"), py::arg("sigma_shift"));
    m.def("duration_report", &duration_report, py::arg("d_mod"), py::arg("d_spread"),
          py::arg("rho"), py::arg("sigma_spread"), py::arg("sigma_shift"));

    // ---- scenarios ----------------------------------------------------------
    py::class_<BondPosition>(m, "BondPosition")
        .def(py::init([](std::string id, std::optional<SectorId> sector, double d_mod,
                         double d_spread, double weight, double price,
                         std::optional<double> tenor_years) {
                 return BondPosition{std::move(id), sector,  d_mod, d_spread,
                                     weight,        price,   tenor_years};
             }),
             py::arg("id"), py::arg("sector") = std::nullopt, py::arg("d_mod") = 0.0,
             py::arg("d_spread") = 0.0, py::arg("weight") = 0.0, py::arg("price") = 100.0,
             py::arg("tenor_years") = std::nullopt)
        .def_readwrite("id", &BondPosition::id)
        .def_readwrite("sector", &BondPosition::sector)
        .def_readwrite("d_mod", &BondPosition::d_mod)
        .def_readwrite("d_spread", &BondPosition::d_spread)
        .def_readwrite("weight", &BondPosition::weight)
        .def_readwrite("price", &BondPosition::price)
        .def_readwrite("tenor_years", &BondPosition::tenor_years);

    py::class_<ScenarioShock>(m, "ScenarioShock")
        .def(py::init([](double shift, double twist) {
                 return ScenarioShock{shift, twist};
             }),
             py::arg("delta_shift_bp") = 0.0, py::arg("delta_twist_bp") = 0.0)
        .def_readwrite("delta_shift_bp", &ScenarioShock::delta_shift_bp)
        .def_readwrite("delta_twist_bp", &ScenarioShock::delta_twist_bp);

    py::class_<PositionPnl>(m, "PositionPnl")
        .def_readonly("id", &PositionPnl::id)
        .def_readonly("delta_y_bp", &PositionPnl::delta_y_bp)
        .def_readonly("delta_s_bp", &PositionPnl::delta_s_bp)
        .def_readonly("price_change", &PositionPnl::price_change)
        .def_readonly("weighted_change", &PositionPnl::weighted_change)
        .def_readonly("twist_yield_omitted", &PositionPnl::twist_yield_omitted);

    py::class_<ScenarioResult>(m, "ScenarioResult")
        .def_readonly("shock", &ScenarioResult::shock)
        .def_readonly("positions", &ScenarioResult::positions)
        .def_readonly("total", &ScenarioResult::total);

    m.def(
        "portfolio_effective_duration",
        [](const std::vector<BondPosition>& positions, const SectorStatsTable& stats,
           const FactorStats& factors) {
            return portfolio_effective_duration(positions, stats, factors);
        },
        py::arg("positions"), py::arg("stats"), py::arg("factors"));
    m.def(
        "scenario_pnl",
        [](const std::vector<BondPosition>& positions, const ScenarioShock& shock,
           const SectorStatsTable& stats, const FactorStats& factors, bool round_spread) {
            return scenario_pnl(positions, shock, stats, factors, round_spread);
        },
        py::arg("positions"), py::arg("shock"), py::arg("stats"), py::arg("factors"),
        py::arg("round_spread_to_tenth_bp") = false);

    py::class_<ExposureVector>(m, "ExposureVector")
        .def(py::init([](std::vector<std::string> labels, std::vector<double> values) {
                 return ExposureVector{std::move(labels), std::move(values)};
             }),
             py::arg("labels"), py::arg("values"))
        .def_readwrite("labels", &ExposureVector::labels)
        .def_readwrite("values", &ExposureVector::values);

    m.def("portfolio_volatility", &portfolio_volatility, py::arg("exposure"), py::arg("corr"));

    // ---- reference tables ---------------------------------------------------
    py::enum_<Vintage>(m, "Vintage")
        .value("Y2003", Vintage::Y2003)
        .value("Y2013", Vintage::Y2013);
    py::enum_<Calibration>(m, "Calibration")
        .value("LONG_TERM", Calibration::LongTerm)
        .value("SHORT_TERM", Calibration::ShortTerm);

    py::class_<ReferenceTables>(m, "ReferenceTables")
        .def_property_readonly("vintage", [](const ReferenceTables& t) { return t.vintage; })
        .def_property_readonly("calibration",
                               [](const ReferenceTables& t) { return t.calibration; })
        .def_property_readonly("shift_corr",
                               [](const ReferenceTables& t) { return grid_to_lists(t.shift_corr); })
        .def_property_readonly("twist_corr",
                               [](const ReferenceTables& t) { return grid_to_lists(t.twist_corr); })
        .def_property_readonly("multipliers",
                               [](const ReferenceTables& t) { return grid_to_lists(t.multipliers); })
        .def("shift_corr_of", &ReferenceTables::shift_corr_of, py::arg("sector"))
        .def("twist_corr_of", &ReferenceTables::twist_corr_of, py::arg("sector"))
        .def("multiplier_of", &ReferenceTables::multiplier_of, py::arg("sector"));

    m.def("reference_table", &reference_table, py::arg("vintage"), py::arg("calibration"),
          py::return_value_policy::reference);

    // ---- estimation pipeline --------------------------------------------------
    py::class_<SectorEstimate>(m, "SectorEstimate")
        .def_readonly("sector", &SectorEstimate::sector)
        .def_readonly("n_periods", &SectorEstimate::n_periods)
        .def_readonly("rho_shift", &SectorEstimate::rho_shift)
        .def_readonly("rho_twist", &SectorEstimate::rho_twist)
        .def_readonly("sigma_spread", &SectorEstimate::sigma_spread)
        .def_readonly("m_eff", &SectorEstimate::m_eff);

    py::class_<EstimateReport>(m, "EstimateReport")
        .def_readonly("sigma_shift", &EstimateReport::sigma_shift)
        .def_readonly("sigma_twist", &EstimateReport::sigma_twist)
        .def_readonly("n_periods", &EstimateReport::n_periods)
        .def_readonly("dropped_periods", &EstimateReport::dropped_periods)
        .def_readonly("low_sample", &EstimateReport::low_sample)
        .def_readonly("rows", &EstimateReport::rows);

    m.def("estimate_comovement", &estimate_comovement, py::arg("yields"),
          py::arg("spread_levels"), py::arg("scheme"), py::arg("min_periods") = 0);

    // ---- file I/O and rendering -------------------------------------------------
    m.def("load_yields", &io::load_yields, py::arg("path"));
    m.def("write_yields", &io::write_yields, py::arg("path"), py::arg("observations"));
    m.def("load_spreads", &io::load_spreads, py::arg("path"));
    m.def("write_spreads", &io::write_spreads, py::arg("path"), py::arg("series"));
    m.def("parse_sector_label", &parse_sector_label, py::arg("label"));
    m.def("load_portfolio", &io::load_portfolio, py::arg("path"));
    m.def("load_sector_stats", &io::load_sector_stats, py::arg("path"));
    m.def("load_synth_config", &io::load_synth_config, py::arg("path"));

    py::enum_<ReportFormat>(m, "ReportFormat")
        .value("DELIMITED", ReportFormat::Delimited)
        .value("ALIGNED_TEXT", ReportFormat::AlignedText);

    m.def("render_report",
          py::overload_cast<const ReferenceTables&, ReportFormat>(&render_report),
          py::arg("tables"), py::arg("format") = ReportFormat::Delimited);
    m.def("render_report",
          py::overload_cast<const FactorSeries&, ReportFormat>(&render_report),
          py::arg("series"), py::arg("format") = ReportFormat::Delimited);
    m.def("render_report",
          py::overload_cast<const AlignedSeries&, ReportFormat>(&render_report),
          py::arg("series"), py::arg("format") = ReportFormat::Delimited);
    m.def("render_report",
          py::overload_cast<const CorrelationMatrix&, ReportFormat>(&render_report),
          py::arg("matrix"), py::arg("format") = ReportFormat::Delimited);
    m.def("render_report",
          py::overload_cast<const ScenarioResult&, ReportFormat>(&render_report),
          py::arg("result"), py::arg("format") = ReportFormat::Delimited);
    m.def("render_report",
          py::overload_cast<const EstimateReport&, ReportFormat>(&render_report),
          py::arg("report"), py::arg("format") = ReportFormat::Delimited);

    m.def("cumulative_factors", &cumulative_factors, py::arg("start_timestamp"),
          py::arg("series"));
    m.def("render_report",
          py::overload_cast<const CumulativeFactorSeries&, ReportFormat>(&render_report),
          py::arg("series"), py::arg("format") = ReportFormat::Delimited);

    py::class_<CumulativeFactorSeries>(m, "CumulativeFactorSeries")
        .def_readonly("timestamps", &CumulativeFactorSeries::timestamps)
        .def_readonly("shift_cum_bp", &CumulativeFactorSeries::shift_cum_bp)
        .def_readonly("twist_cum_bp", &CumulativeFactorSeries::twist_cum_bp);

#ifdef RATESPREAD_VERSION
    m.attr("__version__") = RATESPREAD_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
