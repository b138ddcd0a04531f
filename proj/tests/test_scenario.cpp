#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "ratespread/errors.hpp"
#include "ratespread/scenario.hpp"
#include "ratespread/simulate.hpp"

using namespace ratespread;

namespace {

const SectorId kConsumerCyclicalA{Industry::ConsumerCyclical, Rating::A};

// The worked example: a 10y corporate, d_mod = d_spread = 7.5y, rho -34%,
// sigma_spread 18.2, sigma_shift 24.3 bp/month.
SectorStatsTable example_stats() {
    SectorStatsTable t;
    t[kConsumerCyclicalA] = {kConsumerCyclicalA, 18.2, -0.34, 0.13};
    return t;
}

const FactorStats kExampleFactors{24.3, 12.0};

BondPosition corporate(double weight = 1.0) {
    return {"CORP", kConsumerCyclicalA, 7.5, 7.5, weight, 100.0, {}};
}

BondPosition treasury(const std::string& id, double d_mod, double weight) {
    return {id, std::nullopt, d_mod, 0.0, weight, 100.0, {}};
}

} // namespace

TEST_CASE("portfolio effective duration") {
    SUBCASE("single corporate position reproduces the worked example") {
        const std::vector<BondPosition> book{corporate()};
        const double d = portfolio_effective_duration(book, example_stats(), kExampleFactors);
        CHECK(std::abs(d - 5.5901234567901232) <= 1e-12);
    }

    SUBCASE("all-Treasury books keep their modified duration") {
        const std::vector<BondPosition> book{treasury("T1", 4.0, 0.25),
                                             treasury("T2", 8.0, 0.75)};
        const double d = portfolio_effective_duration(book, {}, kExampleFactors);
        CHECK(std::abs(d - (0.25 * 4.0 + 0.75 * 8.0)) <= 1e-12);
    }

    SUBCASE("two equal weights average their effective durations") {
        const std::vector<BondPosition> book{corporate(0.5), treasury("T", 7.5, 0.5)};
        const double d = portfolio_effective_duration(book, example_stats(), kExampleFactors);
        CHECK(std::abs(d - 0.5 * (5.5901234567901232 + 7.5)) <= 1e-12);
    }

    SUBCASE("missing sector statistics name the sector") {
        std::vector<BondPosition> book{corporate()};
        book[0].sector = SectorId{Industry::Utilities, Rating::Bbb};
        CHECK_THROWS_WITH_AS(
            portfolio_effective_duration(book, example_stats(), kExampleFactors),
            doctest::Contains("UTILITIES.BBB"), InvalidInput);
    }

    SUBCASE("weights must sum to one for an average") {
        const std::vector<BondPosition> book{corporate(0.7)};
        CHECK_THROWS_AS(portfolio_effective_duration(book, example_stats(), kExampleFactors),
                        InvalidInput);
    }
}

TEST_CASE("scenario P&L") {
    const auto stats = example_stats();

    SUBCASE("worked example under a +10 bp shift") {
        const std::vector<BondPosition> book{corporate()};
        const auto exact = scenario_pnl(book, {10.0, 0.0}, stats, kExampleFactors);
        CHECK(std::abs(exact.positions[0].price_change - (-0.55901234567901226)) <= 1e-12);
        // Carrying the reported one-decimal spread move instead gives the
        // published -0.5625.
        const auto rounded = scenario_pnl(book, {10.0, 0.0}, stats, kExampleFactors, true);
        CHECK(rounded.positions[0].delta_s_bp == -2.5);
        CHECK(rounded.positions[0].price_change == -0.5625);
    }

    SUBCASE("zero shock means zero P&L") {
        const std::vector<BondPosition> book{corporate(0.6), treasury("T", 7.5, 0.4)};
        const auto r = scenario_pnl(book, {0.0, 0.0}, stats, kExampleFactors);
        CHECK(r.total == 0.0);
        for (const auto& p : r.positions) CHECK(p.price_change == 0.0);
    }

    SUBCASE("modified-duration-matched hedge leaves the published mismatch") {
        // Corporate long vs duration-matched Treasury short: the spread
        // tightening is unhedged.
        const std::vector<BondPosition> book{corporate(1.0), treasury("T", 7.5, -1.0)};
        const auto rounded = scenario_pnl(book, {10.0, 0.0}, stats, kExampleFactors, true);
        CHECK(std::abs(rounded.total - 0.1875) <= 1e-12);
        const auto exact = scenario_pnl(book, {10.0, 0.0}, stats, kExampleFactors);
        CHECK(exact.total > 0.18);
        CHECK(exact.total < 0.20);
    }

    SUBCASE("effective-duration-matched hedge is flat under any pure shift") {
        const double d_eff = portfolio_effective_duration(
            std::vector<BondPosition>{corporate()}, stats, kExampleFactors);
        const std::vector<BondPosition> book{corporate(1.0), treasury("T", d_eff, -1.0)};
        for (double shock : {10.0, -25.0, 100.0, 3.14}) {
            const auto r = scenario_pnl(book, {shock, 0.0}, stats, kExampleFactors);
            CHECK(std::abs(r.total) <= 1e-12);
        }
    }

    SUBCASE("linear in the shock and additive across positions") {
        const std::vector<BondPosition> book{corporate(0.5), treasury("T", 6.0, 0.5)};
        const auto a = scenario_pnl(book, {7.0, 3.0}, stats, kExampleFactors);
        const auto b = scenario_pnl(book, {-2.0, 5.0}, stats, kExampleFactors);
        const auto joint = scenario_pnl(book, {5.0, 8.0}, stats, kExampleFactors);
        CHECK(std::abs(joint.total - (a.total + b.total)) <= 1e-12);

        double weighted_sum = 0.0;
        for (const auto& p : joint.positions) weighted_sum += p.weighted_change;
        CHECK(std::abs(joint.total - weighted_sum) <= 1e-15);
    }

    SUBCASE("twist shocks hit yields only through a known tenor") {
        std::vector<BondPosition> book{corporate()};
        const auto without = scenario_pnl(book, {0.0, 5.0}, stats, kExampleFactors);
        CHECK(without.positions[0].twist_yield_omitted);
        CHECK(without.positions[0].delta_y_bp == 0.0);
        // Spread response still flows through rho_twist.
        CHECK(std::abs(without.positions[0].delta_s_bp - (0.13 * 18.2 * 5.0 / 12.0)) <= 1e-12);

        book[0].tenor_years = 30.0;
        const auto with = scenario_pnl(book, {0.0, 5.0}, stats, kExampleFactors);
        CHECK_FALSE(with.positions[0].twist_yield_omitted);
        CHECK(with.positions[0].delta_y_bp == 2.0 * 5.0);  // twist basis at 30y
    }

    SUBCASE("degenerate factor volatility") {
        const std::vector<BondPosition> book{corporate()};
        CHECK_THROWS_AS(scenario_pnl(book, {10.0, 0.0}, stats, FactorStats{0.0, 12.0}),
                        DegenerateSeries);
    }
}

TEST_CASE("portfolio volatility") {
    CorrelationMatrix corr;
    corr.labels = {"shift", "twist"};
    corr.rho = {{1.0, 0.0}, {0.0, 1.0}};
    corr.sigma = {3.0, 4.0};
    corr.n_periods = 100;

    SUBCASE("unit exposure to one factor returns its volatility") {
        CHECK(portfolio_volatility({{"shift", "twist"}, {1.0, 0.0}}, corr) == 3.0);
    }

    SUBCASE("orthogonal exposures add in quadrature") {
        CHECK(std::abs(portfolio_volatility({{"shift", "twist"}, {1.0, 1.0}}, corr) - 5.0) <=
              1e-12);
    }

    SUBCASE("absolutely homogeneous") {
        const ExposureVector x{{"shift", "twist"}, {0.7, -1.3}};
        const double base = portfolio_volatility(x, corr);
        const ExposureVector scaled{{"shift", "twist"}, {-2.0 * 0.7, -2.0 * -1.3}};
        CHECK(std::abs(portfolio_volatility(scaled, corr) - 2.0 * base) <= 1e-12);
    }

    SUBCASE("quadratic-form oracle on an estimated matrix") {
        SynthConfig cfg;
        cfg.n_periods = 500;
        cfg.labels = {"shift", "twist", "ENERGY_TRANS.BBB"};
        cfg.vols = {24.0, 12.0, 17.0};
        cfg.target_corr = {{1.0, 0.1, -0.4}, {0.1, 1.0, 0.2}, {-0.4, 0.2, 1.0}};
        cfg.seed = 2024;
        const auto m = corr_matrix(generate_market(cfg), WeightScheme::equal_weight());

        const ExposureVector x{m.labels, {0.5, -1.0, 2.0}};
        std::vector<std::vector<double>> sigma_mat(3, std::vector<double>(3));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) sigma_mat[i][j] = m.rho[i][j] * m.sigma[i] * m.sigma[j];
        const double expected = std::sqrt(oracles::quadratic_form(x.values, sigma_mat));
        CHECK(std::abs(portfolio_volatility(x, m) - expected) <= 1e-9);
    }

    SUBCASE("duration-matched credit book keeps residual volatility") {
        // Net zero shift exposure, but the spread leg is not perfectly
        // correlated with rates, so risk remains.
        CorrelationMatrix cm;
        cm.labels = {"shift", "CONSUMER_CYCLICAL.A"};
        cm.rho = {{1.0, -0.34}, {-0.34, 1.0}};
        cm.sigma = {24.3, 18.2};
        cm.n_periods = 100;
        // Corporate long (exposed to both) vs Treasury short (shift only).
        const ExposureVector x{cm.labels, {0.075 - 0.075, 0.075}};
        CHECK(portfolio_volatility(x, cm) > 0.0);
    }

    SUBCASE("label and dimension mismatches") {
        CHECK_THROWS_AS(portfolio_volatility({{"twist", "shift"}, {1.0, 0.0}}, corr),
                        InvalidInput);
        CHECK_THROWS_AS(portfolio_volatility({{"shift"}, {1.0}}, corr), InvalidInput);
    }

    SUBCASE("non-PSD matrix is rejected") {
        CorrelationMatrix bad = corr;
        bad.psd_ok = false;
        bad.min_eigenvalue = -0.2;
        CHECK_THROWS_AS(portfolio_volatility({{"shift", "twist"}, {1.0, 1.0}}, bad),
                        InvalidConfig);
    }
}
