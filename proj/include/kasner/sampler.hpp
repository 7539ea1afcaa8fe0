#pragma once

#include <cstdint>

#include "kasner/geometry.hpp"

namespace kasner {

/// Configuration for the seeded convex-polygon generator.
struct SamplerConfig {
    int n = 5;                  ///< vertex count, >= 3
    std::uint64_t seed = 0;     ///< full 64-bit seed; same config, same polygon
    double scale = 1.0;         ///< overall size of the emitted polygon
    double anisotropy = 1.0;    ///< optional x-axis stretch for thin stress shapes
};

/// Strictly convex CCW n-gon, deterministic per config. Generation pairs two
/// sorted coordinate multisets into edge vectors in convex position and
/// chains them by angle; strict convexity is verified at abs_eps = 1e-12
/// and the draw is retried with a derived seed (at most 100 times) on the
/// measure-zero failures. Throws RetryExhaustedError if all attempts fail.
Polygon random_convex_polygon(const SamplerConfig& cfg);

}  // namespace kasner
