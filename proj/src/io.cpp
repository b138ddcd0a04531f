#include "ratespread/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ratespread/errors.hpp"

namespace ratespread::io {

namespace {

struct Line {
    std::size_t number;  // 1-based
    std::string text;
};

std::vector<Line> read_lines(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open \"" + path.string() + "\"");
    std::vector<Line> lines;
    std::string text;
    std::size_t number = 0;
    while (std::getline(in, text)) {
        ++number;
        if (!text.empty() && text.back() == '\r') text.pop_back();
        lines.push_back({number, text});
    }
    return lines;
}

std::string strip(const std::string& s) {
    auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) out.push_back(strip(cell));
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

double parse_number(const std::string& path, std::size_t line, const std::string& cell,
                    const char* what) {
    const std::string t = strip(cell);
    double value = 0;
    const auto* begin = t.data();
    const auto* end = t.data() + t.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || t.empty()) {
        throw ParseError(path, line, std::string("cannot parse ") + what + " from \"" + cell + "\"");
    }
    return value;
}

long parse_integer(const std::string& path, std::size_t line, const std::string& cell,
                   const char* what) {
    const std::string t = strip(cell);
    long value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
        throw ParseError(path, line, std::string("cannot parse ") + what + " from \"" + cell + "\"");
    }
    return value;
}

void require_iso_date(const std::string& path, std::size_t line, const std::string& date) {
    const bool shape_ok =
        date.size() == 10 && date[4] == '-' && date[7] == '-' &&
        std::all_of(date.begin(), date.end(), [](char c) {
            return c == '-' || std::isdigit(static_cast<unsigned char>(c));
        });
    if (!shape_ok) {
        throw ParseError(path, line, "date \"" + date + "\" is not ISO-8601 (YYYY-MM-DD)");
    }
    const int month = (date[5] - '0') * 10 + (date[6] - '0');
    const int day = (date[8] - '0') * 10 + (date[9] - '0');
    if (month < 1 || month > 12 || day < 1 || day > 31) {
        throw ParseError(path, line, "date \"" + date + "\" has an impossible month or day");
    }
}

/// Consumes the leading "# format_version=N" stamp and returns the
/// remaining data/header lines with comment lines removed.
std::vector<Line> data_lines(const std::string& path, const std::vector<Line>& lines) {
    std::vector<Line> out;
    bool version_seen = false;
    for (const auto& line : lines) {
        const std::string text = strip(line.text);
        if (text.empty()) continue;
        if (text[0] == '#') {
            const std::string body = strip(text.substr(1));
            if (body.rfind("format_version=", 0) == 0) {
                const long v =
                    parse_integer(path, line.number, body.substr(15), "format version");
                if (v != kFormatVersion) {
                    throw ParseError(path, line.number,
                                     "unsupported format_version " + std::to_string(v) +
                                         " (this build reads version " +
                                         std::to_string(kFormatVersion) + ")");
                }
                version_seen = true;
            }
            continue;  // other comments are ignored
        }
        out.push_back({line.number, text});
    }
    if (!version_seen) {
        throw ParseError(path, 1, "missing \"# format_version=" +
                                      std::to_string(kFormatVersion) + "\" header");
    }
    if (out.empty()) throw ParseError(path, lines.size(), "no header row found");
    return out;
}

void require_header(const std::string& path, const Line& line,
                    const std::vector<std::string>& expected) {
    const auto cells = split_csv(line.text);
    if (cells.size() != expected.size()) {
        throw ParseError(path, line.number,
                         "expected " + std::to_string(expected.size()) + " header columns, got " +
                             std::to_string(cells.size()));
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
        std::string got = cells[i];
        std::transform(got.begin(), got.end(), got.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        if (got != expected[i]) {
            throw ParseError(path, line.number,
                             "missing column \"" + expected[i] + "\" (found \"" + cells[i] +
                                 "\" instead)");
        }
    }
}

std::string fmt_full(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

} // namespace

std::vector<CurveObservation> load_yields(const std::filesystem::path& path) {
    const std::string name = path.string();
    const auto rows = data_lines(name, read_lines(path));
    require_header(name, rows[0], {"date", "y2", "y5", "y10", "y20", "y30"});

    std::vector<CurveObservation> out;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto cells = split_csv(rows[r].text);
        if (cells.size() != 6) {
            throw ParseError(name, rows[r].number,
                             "expected 6 columns, got " + std::to_string(cells.size()));
        }
        require_iso_date(name, rows[r].number, cells[0]);
        if (!out.empty() && cells[0] <= out.back().timestamp) {
            throw ParseError(name, rows[r].number,
                             "dates must be strictly increasing: \"" + cells[0] +
                                 "\" follows \"" + out.back().timestamp + "\"");
        }
        CurveObservation obs;
        obs.timestamp = cells[0];
        static constexpr const char* kCols[5] = {"y2", "y5", "y10", "y20", "y30"};
        for (int k = 0; k < 5; ++k) {
            // Files carry percent; everything internal is bp.
            obs.levels_bp[k] = parse_number(name, rows[r].number, cells[k + 1], kCols[k]) * 100.0;
        }
        out.push_back(std::move(obs));
    }
    if (out.empty()) throw ParseError(name, rows[0].number, "file has a header but no data rows");
    return out;
}

void write_yields(const std::filesystem::path& path,
                  const std::vector<CurveObservation>& observations) {
    std::ofstream outfile(path);
    if (!outfile) throw Error("cannot write \"" + path.string() + "\"");
    outfile << "# format_version=" << kFormatVersion << "\n";
    outfile << "date,y2,y5,y10,y20,y30\n";
    for (const auto& obs : observations) {
        outfile << obs.timestamp;
        for (double bp : obs.levels_bp) outfile << ',' << fmt_full(bp / 100.0);
        outfile << '\n';
    }
}

std::vector<LabeledSeries> load_spreads(const std::filesystem::path& path) {
    const std::string name = path.string();
    const auto rows = data_lines(name, read_lines(path));
    require_header(name, rows[0], {"date", "industry", "rating", "oas_bp"});

    std::vector<LabeledSeries> series;
    auto series_for = [&](const SectorId& sector) -> LabeledSeries& {
        const std::string label = sector_label(sector);
        for (auto& s : series) {
            if (s.label == label) return s;
        }
        series.push_back({label, {}, {}});
        return series.back();
    };

    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto cells = split_csv(rows[r].text);
        if (cells.size() != 4) {
            throw ParseError(name, rows[r].number,
                             "expected 4 columns, got " + std::to_string(cells.size()));
        }
        require_iso_date(name, rows[r].number, cells[0]);
        SectorId sector;
        try {
            sector = {parse_industry(cells[1]), parse_rating(cells[2])};
        } catch (const InvalidInput& e) {
            throw ParseError(name, rows[r].number, e.what());
        }
        auto& s = series_for(sector);
        if (!s.timestamps.empty() && cells[0] <= s.timestamps.back()) {
            throw ParseError(name, rows[r].number,
                             "dates for " + s.label + " must be strictly increasing: \"" +
                                 cells[0] + "\" follows \"" + s.timestamps.back() + "\"");
        }
        s.timestamps.push_back(cells[0]);
        s.values.push_back(parse_number(name, rows[r].number, cells[3], "oas_bp"));
    }
    if (series.empty()) {
        throw ParseError(name, rows[0].number, "file has a header but no data rows");
    }
    return series;
}

void write_spreads(const std::filesystem::path& path,
                   const std::vector<LabeledSeries>& series) {
    struct Row {
        std::string date;
        std::size_t series_index;
        double value;
    };
    std::vector<Row> rows;
    std::vector<SectorId> sectors;
    for (std::size_t i = 0; i < series.size(); ++i) {
        sectors.push_back(parse_sector_label(series[i].label));
        if (series[i].timestamps.size() != series[i].values.size()) {
            throw InvalidInput("series \"" + series[i].label +
                               "\" has mismatched timestamps and values");
        }
        for (std::size_t t = 0; t < series[i].timestamps.size(); ++t) {
            rows.push_back({series[i].timestamps[t], i, series[i].values[t]});
        }
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const Row& a, const Row& b) { return a.date < b.date; });

    std::ofstream out(path);
    if (!out) throw Error("cannot write \"" + path.string() + "\"");
    out << "# format_version=" << kFormatVersion << "\n";
    out << "date,industry,rating,oas_bp\n";
    for (const auto& row : rows) {
        const auto& sector = sectors[row.series_index];
        out << row.date << ',' << industry_code(sector.industry) << ','
            << rating_code(sector.rating) << ',' << fmt_full(row.value) << '\n';
    }
}

std::vector<BondPosition> load_portfolio(const std::filesystem::path& path) {
    const std::string name = path.string();
    const auto rows = data_lines(name, read_lines(path));

    const auto header = split_csv(rows[0].text);
    const bool with_tenor = header.size() == 8;
    require_header(name, rows[0],
                   with_tenor
                       ? std::vector<std::string>{"id", "industry", "rating", "d_mod",
                                                  "d_spread", "weight", "price", "tenor_years"}
                       : std::vector<std::string>{"id", "industry", "rating", "d_mod",
                                                  "d_spread", "weight", "price"});

    std::vector<BondPosition> out;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto cells = split_csv(rows[r].text);
        if (cells.size() != header.size()) {
            throw ParseError(name, rows[r].number,
                             "expected " + std::to_string(header.size()) + " columns, got " +
                                 std::to_string(cells.size()));
        }
        BondPosition p;
        p.id = cells[0];
        if (p.id.empty()) throw ParseError(name, rows[r].number, "position id is empty");
        const std::string industry = strip(cells[1]);
        if (industry != "TREASURY") {
            try {
                p.sector = SectorId{parse_industry(industry), parse_rating(cells[2])};
            } catch (const InvalidInput& e) {
                throw ParseError(name, rows[r].number, e.what());
            }
        } else if (!strip(cells[2]).empty()) {
            throw ParseError(name, rows[r].number,
                             "Treasury positions must leave the rating column empty");
        }
        p.d_mod = parse_number(name, rows[r].number, cells[3], "d_mod");
        p.d_spread = parse_number(name, rows[r].number, cells[4], "d_spread");
        p.weight = parse_number(name, rows[r].number, cells[5], "weight");
        p.price = parse_number(name, rows[r].number, cells[6], "price");
        if (with_tenor && !strip(cells[7]).empty()) {
            p.tenor_years = parse_number(name, rows[r].number, cells[7], "tenor_years");
        }
        if (p.d_mod < 0 || p.d_spread < 0) {
            throw ParseError(name, rows[r].number, "durations must be non-negative");
        }
        out.push_back(std::move(p));
    }
    if (out.empty()) throw ParseError(name, rows[0].number, "portfolio has no positions");
    return out;
}

SectorStatsTable load_sector_stats(const std::filesystem::path& path) {
    const std::string name = path.string();
    const auto rows = data_lines(name, read_lines(path));
    require_header(name, rows[0], {"industry", "rating", "sigma_spread_bp", "rho_shift", "rho_twist"});

    SectorStatsTable out;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto cells = split_csv(rows[r].text);
        if (cells.size() != 5) {
            throw ParseError(name, rows[r].number,
                             "expected 5 columns, got " + std::to_string(cells.size()));
        }
        SectorStats s;
        try {
            s.sector = {parse_industry(cells[0]), parse_rating(cells[1])};
        } catch (const InvalidInput& e) {
            throw ParseError(name, rows[r].number, e.what());
        }
        s.sigma_spread = parse_number(name, rows[r].number, cells[2], "sigma_spread_bp");
        s.rho_shift = parse_number(name, rows[r].number, cells[3], "rho_shift");
        s.rho_twist = parse_number(name, rows[r].number, cells[4], "rho_twist");
        if (s.sigma_spread < 0) {
            throw ParseError(name, rows[r].number, "sigma_spread_bp must be non-negative");
        }
        if (std::abs(s.rho_shift) > 1 || std::abs(s.rho_twist) > 1) {
            throw ParseError(name, rows[r].number, "correlations must lie in [-1, 1]");
        }
        if (!out.emplace(s.sector, s).second) {
            throw ParseError(name, rows[r].number,
                             "duplicate sector " + sector_label(s.sector));
        }
    }
    if (out.empty()) throw ParseError(name, rows[0].number, "stats file has no rows");
    return out;
}

std::map<std::string, std::string> load_config(const std::filesystem::path& path) {
    const std::string name = path.string();
    std::map<std::string, std::string> out;
    for (const auto& line : read_lines(path)) {
        std::string text = line.text;
        if (const auto hash = text.find('#'); hash != std::string::npos) {
            text = text.substr(0, hash);
        }
        text = strip(text);
        if (text.empty()) continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos) {
            throw ParseError(name, line.number, "expected key=value, got \"" + text + "\"");
        }
        const std::string key = strip(text.substr(0, eq));
        const std::string value = strip(text.substr(eq + 1));
        if (key.empty()) throw ParseError(name, line.number, "empty key");
        if (!out.emplace(key, value).second) {
            throw ParseError(name, line.number, "duplicate key \"" + key + "\"");
        }
    }
    return out;
}

SynthConfig load_synth_config(const std::filesystem::path& path) {
    const std::string name = path.string();
    auto kv = load_config(path);

    auto take = [&](const std::string& key) -> std::string {
        const auto it = kv.find(key);
        if (it == kv.end()) throw ParseError(name, 0, "missing key \"" + key + "\"");
        std::string v = it->second;
        kv.erase(it);
        return v;
    };
    auto to_number = [&](const std::string& key, const std::string& v) {
        double value = 0;
        const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
        if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) {
            throw ParseError(name, 0, "cannot parse number for \"" + key + "\" from \"" + v + "\"");
        }
        return value;
    };

    const long version = static_cast<long>(to_number("format_version", take("format_version")));
    if (version != kFormatVersion) {
        throw ParseError(name, 0, "unsupported format_version " + std::to_string(version));
    }

    SynthConfig cfg;
    cfg.n_periods = static_cast<std::size_t>(to_number("n_periods", take("n_periods")));
    const std::string label_list = take("labels");
    {
        std::istringstream ss(label_list);
        std::string label;
        while (std::getline(ss, label, ',')) {
            label = strip(label);
            if (label.empty()) throw ParseError(name, 0, "empty label in labels list");
            cfg.labels.push_back(label);
        }
    }
    if (auto it = kv.find("n_bonds"); it != kv.end()) {
        cfg.n_bonds = static_cast<std::size_t>(to_number("n_bonds", it->second));
        kv.erase(it);
    }
    if (auto it = kv.find("idio_vol"); it != kv.end()) {
        cfg.idio_vol = to_number("idio_vol", it->second);
        kv.erase(it);
    }
    if (auto it = kv.find("seed"); it != kv.end()) {
        cfg.seed = static_cast<std::uint64_t>(to_number("seed", it->second));
        kv.erase(it);
    }

    const std::size_t k = cfg.labels.size();
    cfg.vols.resize(k, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
        cfg.vols[i] = to_number("vol." + cfg.labels[i], take("vol." + cfg.labels[i]));
    }

    cfg.target_corr.assign(k, std::vector<double>(k, 0.0));
    for (std::size_t i = 0; i < k; ++i) cfg.target_corr[i][i] = 1.0;
    // Off-diagonals are keyed by label indices, "corr.<i>.<j>" with i < j.
    for (auto it = kv.begin(); it != kv.end();) {
        if (it->first.rfind("corr.", 0) == 0) {
            const std::string rest = it->first.substr(5);
            const auto dot = rest.find('.');
            if (dot == std::string::npos) {
                throw ParseError(name, 0, "malformed correlation key \"" + it->first + "\"");
            }
            const long i = parse_integer(name, 0, rest.substr(0, dot), "correlation row index");
            const long j = parse_integer(name, 0, rest.substr(dot + 1), "correlation column index");
            if (i < 0 || j < 0 || i >= static_cast<long>(k) || j >= static_cast<long>(k) || i == j) {
                throw ParseError(name, 0, "correlation key \"" + it->first +
                                              "\" is out of range for " + std::to_string(k) +
                                              " labels");
            }
            const double rho = to_number(it->first, it->second);
            cfg.target_corr[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = rho;
            cfg.target_corr[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = rho;
            it = kv.erase(it);
        } else {
            ++it;
        }
    }
    if (!kv.empty()) {
        throw ParseError(name, 0, "unknown key \"" + kv.begin()->first + "\"");
    }
    return cfg;
}

DelimitedTable parse_delimited(const std::string& text, const std::string& origin) {
    DelimitedTable out;
    std::istringstream ss(text);
    std::string raw;
    std::size_t number = 0;
    bool version_seen = false;
    bool header_seen = false;
    while (std::getline(ss, raw)) {
        ++number;
        const std::string line = strip(raw);
        if (line.empty()) continue;
        if (line[0] == '#') {
            const std::string body = strip(line.substr(1));
            if (body.rfind("format_version=", 0) == 0) {
                version_seen = true;
            } else {
                out.comments.push_back(body);
            }
            continue;
        }
        if (!header_seen) {
            out.header = split_csv(line);
            header_seen = true;
        } else {
            auto cells = split_csv(line);
            if (cells.size() != out.header.size()) {
                throw ParseError(origin, number,
                                 "expected " + std::to_string(out.header.size()) +
                                     " columns, got " + std::to_string(cells.size()));
            }
            out.rows.push_back(std::move(cells));
        }
    }
    if (!version_seen) throw ParseError(origin, 1, "missing format_version stamp");
    if (!header_seen) throw ParseError(origin, number, "missing header row");
    return out;
}

} // namespace ratespread::io
