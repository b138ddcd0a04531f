#include "ratespread/duration.hpp"

#include <cmath>
#include <string>

#include "ratespread/errors.hpp"

namespace ratespread {

namespace {

void require_rho(double rho) {
    if (!std::isfinite(rho) || std::abs(rho) > 1.0) {
        throw InvalidInput("correlation must lie in [-1, 1], got " + std::to_string(rho));
    }
}

void require_positive_vol(double sigma, const char* what) {
    if (!std::isfinite(sigma) || sigma <= 0.0) {
        throw DegenerateSeries(std::string(what) + " volatility must be positive, got " +
                               std::to_string(sigma));
    }
}

} // namespace

double expected_spread_change(double rho, double sigma_spread,
                              double sigma_factor, double delta_factor_bp) {
    require_rho(rho);
    require_positive_vol(sigma_factor, "factor");
    if (!std::isfinite(sigma_spread) || sigma_spread < 0.0) {
        throw InvalidInput("spread volatility must be non-negative");
    }
    if (!std::isfinite(delta_factor_bp)) {
        throw InvalidInput("factor move must be finite");
    }
    // delta_s / sigma_s = rho * delta_f / sigma_f, in matching units.
    return rho * sigma_spread * delta_factor_bp / sigma_factor;
}

double price_impact(double d_mod_years, double delta_y_bp,
                    double d_spread_years, double delta_s_bp) {
    if (d_mod_years < 0.0 || d_spread_years < 0.0) {
        throw InvalidInput("durations must be non-negative");
    }
    if (!std::isfinite(delta_y_bp) || !std::isfinite(delta_s_bp)) {
        throw InvalidInput("rate and spread moves must be finite");
    }
    // Durations are stored positive; the sign convention lives here.
    return -(d_mod_years * delta_y_bp + d_spread_years * delta_s_bp) / 100.0;
}

double effective_duration(double d_mod, double d_spread, double rho,
                          double sigma_spread, double sigma_shift) {
    require_rho(rho);
    require_positive_vol(sigma_shift, "shift");
    if (d_mod < 0.0 || d_spread < 0.0) {
        throw InvalidInput("durations must be non-negative");
    }
    if (sigma_spread < 0.0) throw InvalidInput("spread volatility must be non-negative");
    return d_mod + rho * (sigma_spread / sigma_shift) * d_spread;
}

double effective_duration_multiplier(double rho, double sigma_spread,
                                     double sigma_shift) {
    require_rho(rho);
    require_positive_vol(sigma_shift, "shift");
    if (sigma_spread < 0.0) throw InvalidInput("spread volatility must be non-negative");
    return 1.0 + rho * sigma_spread / sigma_shift;
}

DurationReport duration_report(double d_mod, double d_spread, double rho,
                               double sigma_spread, double sigma_shift) {
    DurationReport r;
    r.d_mod = d_mod;
    r.d_spread = d_spread;
    r.d_eff = effective_duration(d_mod, d_spread, rho, sigma_spread, sigma_shift);
    r.m_eff = effective_duration_multiplier(rho, sigma_spread, sigma_shift);
    return r;
}

} // namespace ratespread
