#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_shell(const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buf;
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) {
        output.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), std::move(output)};
}

// Runs the CLI and captures stdout (plus stderr when merge_stderr).
RunResult run_cli(const std::string& args, bool merge_stderr = false) {
    return run_shell(std::string(RATESPREAD_CLI_PATH) + " " + args +
                     (merge_stderr ? " 2>&1" : " 2>/dev/null"));
}

std::string data_file(const std::string& name) {
    return (fs::path(RATESPREAD_DATA_DIR) / name).string();
}

fs::path temp_file(const std::string& name, const std::string& content) {
    const fs::path p = fs::temp_directory_path() / ("ratespread_cli_" + name);
    std::ofstream out(p);
    out << content;
    return p;
}

} // namespace

TEST_CASE("effdur reproduces the worked example") {
    const auto r = run_cli("effdur --dmod 7.5 --dspread 7.5 --rho -0.34 "
                           "--sigma-spread 18.2 --sigma-shift 24.3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("D_eff  5.590 years") != std::string::npos);
    CHECK(r.output.find("M_eff  75%") != std::string::npos);

    const auto csv = run_cli("effdur --dmod 7.5 --dspread 7.5 --rho -0.34 "
                             "--sigma-spread 18.2 --sigma-shift 24.3 --shift 10 "
                             "--format delimited");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output.find("# format_version=1") != std::string::npos);
    CHECK(csv.output.find("d_eff_years,5.59012345679012") != std::string::npos);
    CHECK(csv.output.find("m_eff_pct,75") != std::string::npos);
    CHECK(csv.output.find("delta_spread_bp,-2.5465020576131") != std::string::npos);
}

TEST_CASE("scenario on the bundled example portfolio") {
    const std::string base = "scenario --portfolio " + data_file("example_portfolio.csv") +
                             " --stats " + data_file("example_sector_stats.csv") +
                             " --sigma-shift 24.3 --shift 10";

    SUBCASE("carrying the one-decimal spread move reproduces -0.5625") {
        const auto r = run_cli(base + " --round-spread");
        CHECK(r.exit_code == 0);
        CHECK(r.output.find("CORP10Y,10,-2.5,-0.5625,-0.5625,0") != std::string::npos);
        CHECK(r.output.find("TOTAL,,,,-0.5625,") != std::string::npos);
    }

    SUBCASE("full precision lands within the exact band") {
        const auto r = run_cli(base);
        CHECK(r.exit_code == 0);
        CHECK(r.output.find("-0.559012345679012") != std::string::npos);
    }

    SUBCASE("bundled reference tables supply the correlations") {
        const auto r = run_cli("scenario --portfolio " + data_file("example_portfolio.csv") +
                               " --vintage 2013 --calibration long --sigma-spread 18.2 "
                               "--sigma-shift 24.3 --shift 10 --round-spread");
        CHECK(r.exit_code == 0);
        // Table value -34% for Consumer Cyclical A: same -0.5625 result.
        CHECK(r.output.find("-0.5625") != std::string::npos);
    }

    SUBCASE("hedged book shows the duration mismatch") {
        const auto r = run_cli("scenario --portfolio " +
                                   data_file("example_hedged_portfolio.csv") +
                                   " --stats " + data_file("example_sector_stats.csv") +
                                   " --sigma-shift 24.3 --shift 10 --round-spread",
                               true);
        CHECK(r.exit_code == 0);
        CHECK(r.output.find("TOTAL,,,,0.1875,") != std::string::npos);
    }
}

TEST_CASE("decompose") {
    SUBCASE("constant yields give an all-zero factor series") {
        const auto p = temp_file("const.csv",
                                 "# format_version=1\n"
                                 "date,y2,y5,y10,y20,y30\n"
                                 "2013-01-31,1.0,2.0,3.0,4.0,5.0\n"
                                 "2013-02-28,1.0,2.0,3.0,4.0,5.0\n"
                                 "2013-03-28,1.0,2.0,3.0,4.0,5.0\n");
        const auto r = run_cli("decompose --yields " + p.string());
        CHECK(r.exit_code == 0);
        CHECK(r.output.find("2013-02-28,0,0,0") != std::string::npos);
        CHECK(r.output.find("2013-03-28,0,0,0") != std::string::npos);
    }

    SUBCASE("cumulative output starts from zero and is deterministic") {
        const std::string cmd =
            "decompose --yields " + data_file("example_yields.csv") + " --cumulative";
        const auto a = run_cli(cmd);
        const auto b = run_cli(cmd);
        CHECK(a.exit_code == 0);
        CHECK(a.output == b.output);
        CHECK(a.output.find("timestamp,shift_cum_bp,twist_cum_bp\n2012-06-29,0,0\n") !=
              std::string::npos);
    }
}

TEST_CASE("simulate") {
    const std::string cmd = "simulate --config " + data_file("example_synth.cfg");

    SUBCASE("deterministic bytes under the config seed") {
        const auto a = run_cli(cmd);
        const auto b = run_cli(cmd);
        CHECK(a.exit_code == 0);
        CHECK(a.output == b.output);
        CHECK(a.output.find("timestamp,shift,twist,BANKING.A") != std::string::npos);
    }

    SUBCASE("seed override changes the draw") {
        const auto a = run_cli(cmd);
        const auto b = run_cli(cmd + " --seed 2");
        CHECK(a.output != b.output);
    }

    SUBCASE("generated level files feed the estimate pipeline") {
        const auto cfg = temp_file("pipe.cfg",
                                   "format_version=1\nn_periods=600\nseed=5\n"
                                   "labels=shift,twist,BANKING.A\n"
                                   "vol.shift=24\nvol.twist=12\nvol.BANKING.A=14\n"
                                   "corr.0.2=-0.33\n");
        const auto yields = fs::temp_directory_path() / "ratespread_cli_pipe_y.csv";
        const auto spreads = fs::temp_directory_path() / "ratespread_cli_pipe_s.csv";
        const auto sim = run_cli("simulate --config " + cfg.string() + " --write-yields " +
                                 yields.string() + " --write-spreads " + spreads.string());
        CHECK(sim.exit_code == 0);

        const auto est = run_cli("estimate --yields " + yields.string() + " --spreads " +
                                 spreads.string());
        CHECK(est.exit_code == 0);
        // rho(sector, shift) configured at -33%; n=600 keeps the estimate
        // within a few percent.
        const auto row = est.output.find("BANKING,A,600,");
        REQUIRE(row != std::string::npos);
        const int rho_pct = std::atoi(est.output.c_str() + row + 14);
        CHECK(rho_pct <= -25);
        CHECK(rho_pct >= -41);
    }

    SUBCASE("summary recovers the configured correlation") {
        const auto r = run_cli(cmd + " --summary");
        CHECK(r.exit_code == 0);
        // -33% target estimated on 10k months at whole-percent rendering.
        const bool near = r.output.find("corr,shift,BANKING.A,-33") != std::string::npos ||
                          r.output.find("corr,shift,BANKING.A,-32") != std::string::npos ||
                          r.output.find("corr,shift,BANKING.A,-34") != std::string::npos;
        CHECK(near);
    }
}

TEST_CASE("estimate runs the full pipeline") {
    // Synthetic levels: a noisy curve history and one sector OAS series.
    std::string yields = "# format_version=1\ndate,y2,y5,y10,y20,y30\n";
    std::string spreads = "# format_version=1\ndate,industry,rating,oas_bp\n";
    unsigned state = 12345;
    auto next_step = [&state]() {
        state = state * 1103515245u + 12345u;  // LCG, plenty for plumbing data
        return static_cast<double>((state >> 16) % 41) - 20.0;  // -20..20 bp
    };
    double level[5] = {50, 120, 220, 300, 330};
    double oas = 140;
    for (int m = 0; m < 48; ++m) {
        char date[16];
        std::snprintf(date, sizeof date, "%04d-%02d-28", 2009 + m / 12, m % 12 + 1);
        char row[160];
        std::snprintf(row, sizeof row, "%s,%.4f,%.4f,%.4f,%.4f,%.4f\n", date, level[0] / 100,
                      level[1] / 100, level[2] / 100, level[3] / 100, level[4] / 100);
        yields += row;
        std::snprintf(row, sizeof row, "%s,BANKING,A,%.4f\n", date, oas);
        spreads += row;
        const double shift = next_step();
        for (auto& l : level) l += shift + 0.3 * next_step();
        oas += -0.4 * shift + 0.5 * next_step();
    }
    const auto yp = temp_file("est_yields.csv", yields);
    const auto sp = temp_file("est_spreads.csv", spreads);

    const auto r = run_cli("estimate --yields " + yp.string() + " --spreads " + sp.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("industry,rating,n_periods,rho_shift_pct,rho_twist_pct,"
                        "sigma_spread_bp,m_eff_pct") != std::string::npos);
    CHECK(r.output.find("BANKING,A,47,-") != std::string::npos);  // negative by construction

    SUBCASE("ewma needs two half-lives of data") {
        const auto short_run = run_cli("estimate --yields " + yp.string() + " --spreads " +
                                           sp.string() + " --scheme ewma --half-life 36",
                                       true);
        CHECK(short_run.exit_code == 1);
        CHECK(short_run.output.find("72") != std::string::npos);

        const auto ok = run_cli("estimate --yields " + yp.string() + " --spreads " +
                                sp.string() + " --scheme ewma --half-life 12");
        CHECK(ok.exit_code == 0);
    }
}

TEST_CASE("exit codes and diagnostics") {
    SUBCASE("usage errors exit 2") {
        CHECK(run_cli("tables --vintage 2013", true).exit_code == 2);  // missing calibration
        CHECK(run_cli("no-such-command", true).exit_code == 2);
        CHECK(run_cli("effdur --dmod 7.5", true).exit_code == 2);  // missing required flags
    }

    SUBCASE("domain and data errors exit 1") {
        const auto missing = run_cli("decompose --yields /no/such/file.csv", true);
        CHECK(missing.exit_code == 2);  // flagged by the existence check

        const auto bad = temp_file("bad.csv", "not,a,yield,file\n");
        const auto r = run_cli("decompose --yields " + bad.string(), true);
        CHECK(r.exit_code == 1);
        CHECK(r.output.find("error:") != std::string::npos);

        const auto degenerate = run_cli(
            "effdur --dmod 7.5 --rho -0.34 --sigma-spread 18.2 --sigma-shift 0", true);
        CHECK(degenerate.exit_code == 1);
    }

    SUBCASE("help exits 0") {
        CHECK(run_cli("--help").exit_code == 0);
        CHECK(run_cli("scenario --help").exit_code == 0);
    }
}

TEST_CASE("tables command") {
    const auto text = run_cli("tables --vintage 2003 --calibration short");
    CHECK(text.exit_code == 0);
    CHECK(text.output.find("Banking and Brokerage") != std::string::npos);
    CHECK(text.output.find("-56%") != std::string::npos);

    const auto csv = run_cli("tables --vintage 2013 --calibration long --format delimited");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output.find("shift_corr,BANKING,A,-33") != std::string::npos);
    CHECK(csv.output.find("multiplier,NON_CORPORATE,BBB,66") != std::string::npos);

    SUBCASE("output width override pads aligned columns") {
        const auto wide = run_shell(std::string("RATESPREAD_OUTPUT_WIDTH=12 ") +
                                    RATESPREAD_CLI_PATH +
                                    " tables --vintage 2013 --calibration long 2>/dev/null");
        CHECK(wide.exit_code == 0);
        CHECK(wide.output.find("      -32%") != std::string::npos);
    }
}
