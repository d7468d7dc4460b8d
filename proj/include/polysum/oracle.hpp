#pragma once

#include <cstdint>

#include "polysum/powersum.hpp"

namespace polysum {

// Brute-force ground truth. Dense sampling plus the candidate catalog, no
// gradients anywhere, so it stays independent of the search it validates.
struct GridReport {
    double minValue = 0.0;
    double maxValue = 0.0;
    PointN argmin, argmax;
    std::size_t gridSize = 0;
    std::uint64_t seed = 0;
};

/// Extrema over N uniform angles (offset half a step so vertex directions
/// are never sampled) plus the non-singular catalog points. dim 2, N >= 16.
GridReport grid_extrema_circle(const VertexSet& vs, const SphereSpec& circle,
                               const PowerSumParams& p, std::size_t n);

/// Extrema over a Fibonacci lattice (dim 3) or seeded random directions
/// (dim > 3), with the non-singular catalog points appended.
GridReport grid_extrema_sphere(const VertexSet& vs, const SphereSpec& sphere,
                               const PowerSumParams& p, std::size_t n, std::uint64_t seed);

}  // namespace polysum
