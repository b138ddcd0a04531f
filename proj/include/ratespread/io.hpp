#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "ratespread/covariance.hpp"
#include "ratespread/curve_factors.hpp"
#include "ratespread/scenario.hpp"
#include "ratespread/simulate.hpp"

namespace ratespread::io {

/// Version stamp carried by every file format, "# format_version=1" for
/// delimited files and "format_version=1" for config files.
inline constexpr int kFormatVersion = 1;

/// Loads a yield-curve history. Expected layout:
///
///   # format_version=1
///   date,y2,y5,y10,y20,y30
///   1990-01-31,7.89,7.92,8.00,8.05,8.02
///
/// Yields are percent in the file and converted to bp once at this
/// boundary. Dates must be ISO-8601 and strictly increasing. Every
/// malformed cell raises ParseError with the offending line.
std::vector<CurveObservation> load_yields(const std::filesystem::path& path);

/// Writes the inverse of load_yields (bp converted back to percent).
void write_yields(const std::filesystem::path& path,
                  const std::vector<CurveObservation>& observations);

/// Loads per-sector OAS level series from a long-format file:
///
///   # format_version=1
///   date,industry,rating,oas_bp
///   1990-01-31,BANKING,A,95.0
///
/// Returns one LabeledSeries per sector present (canonical sector labels),
/// each with strictly increasing dates.
std::vector<LabeledSeries> load_spreads(const std::filesystem::path& path);

/// Writes per-sector OAS level series in the long format above, date-major.
/// Series labels must be canonical sector labels.
void write_spreads(const std::filesystem::path& path,
                   const std::vector<LabeledSeries>& series);

/// Loads a portfolio file:
///
///   # format_version=1
///   id,industry,rating,d_mod,d_spread,weight,price[,tenor_years]
///   CORP1,CONSUMER_CYCLICAL,A,7.5,7.5,1.0,100.0
///   TSY1,TREASURY,,7.5,0.0,-1.0,100.0
///
/// industry TREASURY (empty rating) marks a Treasury position. The
/// tenor_years column is optional.
std::vector<BondPosition> load_portfolio(const std::filesystem::path& path);

/// Loads per-sector statistics:
///
///   # format_version=1
///   industry,rating,sigma_spread_bp,rho_shift,rho_twist
///   CONSUMER_CYCLICAL,A,18.2,-0.34,0.13
SectorStatsTable load_sector_stats(const std::filesystem::path& path);

/// Flat key=value config with '#' comments and dotted keys. Duplicate keys
/// are an error.
std::map<std::string, std::string> load_config(const std::filesystem::path& path);

/// Reads a synthetic-market config:
///
///   format_version=1
///   n_periods=10000
///   n_bonds=20
///   idio_vol=0
///   seed=1
///   labels=shift,twist,BANKING.A
///   vol.shift=24
///   vol.twist=12
///   vol.BANKING.A=14
///   corr.0.2=-0.33        # indices into labels, i < j; omitted pairs are 0
SynthConfig load_synth_config(const std::filesystem::path& path);

/// A delimited payload parsed back into tokens: the column header plus one
/// row of cells per record. Comment lines ("# key=value") are collected
/// separately.
struct DelimitedTable {
    std::vector<std::string> comments;  // without the leading "# "
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Parses text in the library's delimited output format. Requires the
/// format_version stamp and a header row.
DelimitedTable parse_delimited(const std::string& text, const std::string& origin);

} // namespace ratespread::io
