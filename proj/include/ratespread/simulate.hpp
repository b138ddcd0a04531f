#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ratespread/covariance.hpp"

namespace ratespread {

/// Synthetic market with a known ground-truth correlation structure, used
/// to validate the estimators.
///
/// Labels name the generated series. "shift" and "twist" are pure factors;
/// every other label is treated as a sector portfolio of n_bonds equally
/// weighted bonds and receives averaged idiosyncratic noise on top of its
/// factor draw.
struct SynthConfig {
    std::size_t n_periods{0};
    std::vector<std::string> labels;
    std::vector<double> vols;                      // bp/period, parallel to labels
    std::vector<std::vector<double>> target_corr;  // symmetric, unit diagonal, PSD
    double idio_vol{0.0};                          // bp/period per bond
    std::size_t n_bonds{20};
    std::uint64_t seed{0};
};

/// Under "shift"/"twist" naming, the label set of a config's sector series.
std::vector<std::string> sector_labels(const SynthConfig& cfg);

/// Draws jointly Gaussian per-period changes with the target correlation
/// and volatilities (spectral factorization of the covariance), adds
/// per-bond idiosyncratic noise to sector series, and aggregates to
/// equally weighted portfolio series.
///
/// Output is bit-identical for identical configs: factor and idiosyncratic
/// draws come from two independent deterministic streams derived from the
/// seed, so the factor path does not depend on idio_vol or n_bonds.
///
/// Throws InvalidConfig on malformed dimensions, a non-PSD target (the
/// message names the offending eigenvalue) or negative volatilities.
AlignedSeries generate_market(const SynthConfig& cfg);

} // namespace ratespread
