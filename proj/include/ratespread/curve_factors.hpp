#pragma once

#include <array>
#include <string>
#include <vector>

namespace ratespread {

/// Key-rate tenors of the Treasury curve, in years. The 0.5y point is
/// deliberately not part of the factor definition.
inline constexpr std::array<double, 5> kKeyRateTenors{2.0, 5.0, 10.0, 20.0, 30.0};

/// Unit parallel shift across the five key rates.
inline constexpr std::array<double, 5> kShiftBasis{1.0, 1.0, 1.0, 1.0, 1.0};

/// Unit steepening twist, a rotation around the 10y point.
/// dot(shift, twist) = 0, dot(shift, shift) = 5, dot(twist, twist) = 10.
inline constexpr std::array<double, 5> kTwistBasis{-2.0, -1.0, 0.0, 1.0, 2.0};

/// One period's yield changes at the 2/5/10/20/30y key rates, in bp.
struct KeyRateChange {
    double dy2{};
    double dy5{};
    double dy10{};
    double dy20{};
    double dy30{};

    static KeyRateChange from_array(const std::array<double, 5>& v) {
        return {v[0], v[1], v[2], v[3], v[4]};
    }
    std::array<double, 5> to_array() const { return {dy2, dy5, dy10, dy20, dy30}; }
};

/// Shift/twist loadings of one key-rate change plus the residual move.
///
/// By construction the residual carries neither a parallel nor a twist
/// component: sum(residual) = 0 and dot(residual, twist basis) = 0.
struct FactorLoadings {
    double gamma_shift{};              // bp
    double gamma_twist{};              // bp per unit of the twist basis
    std::array<double, 5> residual{};  // bp
};

/// One yield-curve snapshot; levels in bp at the five key-rate tenors.
struct CurveObservation {
    std::string timestamp;  // ordered label, e.g. an ISO date
    std::array<double, 5> levels_bp{};
};

/// Per-period factor loadings of a yield-curve history. Entry t describes
/// the change from observation t to t+1 and is labelled with the later
/// observation's timestamp.
struct FactorSeries {
    std::vector<std::string> timestamps;
    std::vector<double> shift_series;    // bp per period
    std::vector<double> twist_series;    // bp per period
    std::vector<double> residual_norms;  // Euclidean norm of the residual, bp
};

/// Projects a key-rate change onto the shift/twist basis.
///
/// gamma_shift = (dy2 + dy5 + dy10 + dy20 + dy30) / 5
/// gamma_twist = (-2*dy2 - dy5 + dy20 + 2*dy30) / 10
///
/// The bases are orthogonal, so the closed forms coincide with the
/// least-squares regression coefficients of the change on the two bases.
/// Throws InvalidInput on non-finite entries.
FactorLoadings decompose(const KeyRateChange& dy);

/// Inverse of decompose: gamma_shift*shift + gamma_twist*twist + residual.
/// reconstruct(decompose(dy)) == dy exactly.
KeyRateChange reconstruct(const FactorLoadings& loadings);

/// First-differences a yield-curve history and decomposes each change.
/// Requires >= 2 observations (InsufficientData otherwise) and strictly
/// increasing timestamps (InvalidInput otherwise).
FactorSeries factor_series(const std::vector<CurveObservation>& levels);

} // namespace ratespread
