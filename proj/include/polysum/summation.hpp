#pragma once

#include <span>

namespace polysum {

// Pairwise (tree) summation with the split always at the midpoint, so the
// reduction order is a pure function of the element count. Error grows like
// O(log n) in ulps, which keeps constancy spreads at the 1e-13 level for
// vertex counts up to 2^10.
inline double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 8) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

// Exact non-negative integer power by binary exponentiation.
inline double pow_int(double base, long long e) {
    double acc = 1.0;
    double b = base;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

}  // namespace polysum
