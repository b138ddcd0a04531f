#include "ratespread/curve_factors.hpp"

#include <cmath>

#include "ratespread/errors.hpp"

namespace ratespread {

namespace {

constexpr double kShiftNormSq = 5.0;   // dot(shift, shift)
constexpr double kTwistNormSq = 10.0;  // dot(twist, twist)

void require_finite(const std::array<double, 5>& v, const char* what) {
    for (double x : v) {
        if (!std::isfinite(x)) {
            throw InvalidInput(std::string(what) + " contains a non-finite entry");
        }
    }
}

} // namespace

FactorLoadings decompose(const KeyRateChange& dy) {
    const auto v = dy.to_array();
    require_finite(v, "key-rate change");

    // Orthogonal bases make the projections exact least-squares loadings.
    FactorLoadings out;
    out.gamma_shift = (v[0] + v[1] + v[2] + v[3] + v[4]) / kShiftNormSq;
    out.gamma_twist = (-2.0 * v[0] - v[1] + v[3] + 2.0 * v[4]) / kTwistNormSq;
    for (int k = 0; k < 5; ++k) {
        out.residual[k] =
            v[k] - out.gamma_shift * kShiftBasis[k] - out.gamma_twist * kTwistBasis[k];
    }
    return out;
}

KeyRateChange reconstruct(const FactorLoadings& loadings) {
    if (!std::isfinite(loadings.gamma_shift) || !std::isfinite(loadings.gamma_twist)) {
        throw InvalidInput("factor loadings contain a non-finite entry");
    }
    require_finite(loadings.residual, "residual");

    std::array<double, 5> v{};
    for (int k = 0; k < 5; ++k) {
        v[k] = loadings.gamma_shift * kShiftBasis[k] +
               loadings.gamma_twist * kTwistBasis[k] + loadings.residual[k];
    }
    return KeyRateChange::from_array(v);
}

FactorSeries factor_series(const std::vector<CurveObservation>& levels) {
    if (levels.size() < 2) {
        throw InsufficientData("factor series needs at least two yield observations, got " +
                               std::to_string(levels.size()));
    }

    FactorSeries out;
    out.timestamps.reserve(levels.size() - 1);
    out.shift_series.reserve(levels.size() - 1);
    out.twist_series.reserve(levels.size() - 1);
    out.residual_norms.reserve(levels.size() - 1);

    for (std::size_t i = 1; i < levels.size(); ++i) {
        const auto& prev = levels[i - 1];
        const auto& cur = levels[i];
        if (cur.timestamp <= prev.timestamp) {
            throw InvalidInput("timestamps must be strictly increasing: \"" +
                               prev.timestamp + "\" is not before \"" + cur.timestamp + "\"");
        }
        std::array<double, 5> diff{};
        for (int k = 0; k < 5; ++k) diff[k] = cur.levels_bp[k] - prev.levels_bp[k];
        const auto loadings = decompose(KeyRateChange::from_array(diff));

        double norm_sq = 0;
        for (double e : loadings.residual) norm_sq += e * e;

        out.timestamps.push_back(cur.timestamp);
        out.shift_series.push_back(loadings.gamma_shift);
        out.twist_series.push_back(loadings.gamma_twist);
        out.residual_norms.push_back(std::sqrt(norm_sq));
    }
    return out;
}

} // namespace ratespread
