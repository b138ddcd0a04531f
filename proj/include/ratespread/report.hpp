#pragma once

#include <string>

#include "ratespread/covariance.hpp"
#include "ratespread/curve_factors.hpp"
#include "ratespread/reference_tables.hpp"
#include "ratespread/scenario.hpp"

namespace ratespread {

enum class ReportFormat { Delimited, AlignedText };

/// Rendering conventions shared by every report: correlations and
/// multipliers as signed whole percents, durations to 3 decimals, spread
/// moves to 1 decimal bp in aligned text, full precision in delimited
/// output. Output bytes are deterministic for identical inputs.
///
/// Aligned-text column padding honours a minimum width override (see
/// RATESPREAD_OUTPUT_WIDTH in the CLI).

std::string render_report(const ReferenceTables& tables, ReportFormat format);
std::string render_report(const FactorSeries& series, ReportFormat format);
std::string render_report(const AlignedSeries& series, ReportFormat format);
std::string render_report(const CorrelationMatrix& matrix, ReportFormat format);
std::string render_report(const ScenarioResult& result, ReportFormat format);

/// Cumulative shift/twist levels over a factor series: a leading zero row
/// at the first observation's timestamp, then running sums.
struct CumulativeFactorSeries {
    std::vector<std::string> timestamps;
    std::vector<double> shift_cum_bp;
    std::vector<double> twist_cum_bp;
};

CumulativeFactorSeries cumulative_factors(const std::string& start_timestamp,
                                          const FactorSeries& series);
std::string render_report(const CumulativeFactorSeries& series, ReportFormat format);

/// Minimum aligned-text column width, settable by the CLI front end.
void set_min_column_width(int width);
int min_column_width();

/// Pads string rows into columns: first column left-aligned, the rest
/// right-aligned, honouring the minimum column width.
std::string render_aligned_grid(const std::vector<std::vector<std::string>>& rows);

} // namespace ratespread
