#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "polysum/geometry.hpp"

namespace polysum {

// splitmix64. Chosen over std::mt19937_64 + distributions because the
// standard distributions are implementation-defined; this generator gives
// bit-identical streams on every platform and is cheap to reseed per index,
// which lets probe generation run embarrassingly parallel.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller (no caching, so the stream is stateless
    // per call pair and reproducible regardless of call pattern).
    double next_normal() {
        double u1 = next_double();
        while (u1 <= 0.0) u1 = next_double();
        const double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

private:
    std::uint64_t state_;
};

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    Rng r(seed ^ (0x632be59bd9b4e019ULL + index * 0x9e3779b97f4a7c15ULL));
    return r.next_u64();
}

// i-th point of an N-point Fibonacci lattice on the given 2-sphere.
inline PointN fibonacci_sphere_point(std::size_t i, std::size_t n, const SphereSpec& sphere) {
    const double golden_angle = 2.399963229728653;  // pi * (3 - sqrt(5))
    const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(n);
    const double rho = std::sqrt(std::fmax(0.0, 1.0 - z * z));
    const double theta = golden_angle * static_cast<double>(i);
    PointN p = sphere.center;
    p[0] += sphere.radius * rho * std::cos(theta);
    p[1] += sphere.radius * rho * std::sin(theta);
    p[2] += sphere.radius * z;
    return p;
}

// i-th seeded Gaussian direction on a sphere of any dimension >= 2.
// Deterministic per (seed, i); independent of evaluation order.
inline PointN gaussian_sphere_point(std::uint64_t seed, std::size_t i, const SphereSpec& sphere) {
    Rng rng(mix_seed(seed, i));
    const int d = sphere.dim();
    PointN v(static_cast<std::size_t>(d));
    double n2 = 0.0;
    do {
        for (int k = 0; k < d; ++k) v[static_cast<std::size_t>(k)] = rng.next_normal();
        n2 = norm_sq(v);
    } while (n2 < 1e-24);
    const double s = sphere.radius / std::sqrt(n2);
    PointN p = sphere.center;
    axpy(s, v, p);
    return p;
}

inline PointN circle_point(double theta, const SphereSpec& sphere) {
    PointN p = sphere.center;
    p[0] += sphere.radius * std::cos(theta);
    p[1] += sphere.radius * std::sin(theta);
    return p;
}

// Quasi-uniform probe set: uniform angles in dim 2, Fibonacci lattice in
// dim 3, seeded Gaussian directions above that.
inline PointN sphere_probe(std::size_t i, std::size_t n, const SphereSpec& sphere,
                           std::uint64_t seed) {
    const int d = sphere.dim();
    if (d == 2)
        return circle_point(2.0 * 3.14159265358979323846 * static_cast<double>(i) /
                                static_cast<double>(n),
                            sphere);
    if (d == 3) return fibonacci_sphere_point(i, n, sphere);
    return gaussian_sphere_point(seed, i, sphere);
}

}  // namespace polysum
