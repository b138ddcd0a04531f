#include "ratespread/rng.hpp"

#include <cmath>

namespace ratespread {

double GaussianRng::next_uniform() {
    // Top 53 bits -> (0,1): offset by half an ulp so 0 is never produced.
    const std::uint64_t bits = engine_() >> 11;
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

double GaussianRng::next() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // Marsaglia polar method; rejection keeps it to sqrt/log only.
    double u, v, s;
    do {
        u = 2.0 * next_uniform() - 1.0;
        v = 2.0 * next_uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double scale = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * scale;
    has_spare_ = true;
    return u * scale;
}

} // namespace ratespread
