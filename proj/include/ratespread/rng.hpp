#pragma once

#include <cstdint>
#include <random>

namespace ratespread {

/// Deterministic standard-normal stream.
///
/// Uniforms come from std::mt19937_64 (algorithm fixed by the standard)
/// mapped to doubles via the top 53 bits; normals via the Marsaglia polar
/// method, which uses only sqrt and log. A seed therefore fully determines
/// the sequence.
class GaussianRng {
public:
    explicit GaussianRng(std::uint64_t seed) : engine_(seed) {}

    /// Next N(0,1) draw.
    double next();

    /// Uniform on (0,1), 53-bit resolution, never exactly 0 or 1.
    double next_uniform();

private:
    std::mt19937_64 engine_;
    double spare_{0.0};
    bool has_spare_{false};
};

} // namespace ratespread
