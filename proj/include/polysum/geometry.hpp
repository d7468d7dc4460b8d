#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "polysum/errors.hpp"

namespace polysum {

// Cartesian point/vector in R^d. Plain storage; all geometry is done through
// the free functions below.
using PointN = std::vector<double>;

// The moving sphere Gamma: center O and radius R.
struct SphereSpec {
    PointN center;
    double radius = 1.0;

    int dim() const { return static_cast<int>(center.size()); }
};

inline double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm_sq(std::span<const double> a) { return dot(a, a); }

inline double norm(std::span<const double> a) { return std::sqrt(norm_sq(a)); }

inline double dist_sq(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

inline double dist(std::span<const double> a, std::span<const double> b) {
    return std::sqrt(dist_sq(a, b));
}

inline PointN add(std::span<const double> a, std::span<const double> b) {
    PointN r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline PointN sub(std::span<const double> a, std::span<const double> b) {
    PointN r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline PointN scaled(std::span<const double> a, double s) {
    PointN r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

inline void axpy(double s, std::span<const double> x, PointN& y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += s * x[i];
}

inline PointN normalized(std::span<const double> a) {
    const double n = norm(a);
    if (n == 0.0) throw InvalidParameter("cannot normalize a zero vector");
    return scaled(a, 1.0 / n);
}

inline PointN origin(int dim) { return PointN(static_cast<std::size_t>(dim), 0.0); }

inline void require_same_dim(std::span<const double> a, std::span<const double> b,
                             const char* what) {
    if (a.size() != b.size()) throw DimensionMismatch(what);
}

// Angle at `center` between the rays toward a and b, in radians.
inline double angular_distance(std::span<const double> a, std::span<const double> b,
                               std::span<const double> center) {
    const PointN u = sub(a, center);
    const PointN v = sub(b, center);
    const double nu = norm(u), nv = norm(v);
    if (nu == 0.0 || nv == 0.0) throw InvalidParameter("angular distance from center");
    double c = dot(u, v) / (nu * nv);
    c = std::fmax(-1.0, std::fmin(1.0, c));
    return std::acos(c);
}

// Radial projection of p onto the sphere (the point O + R * (p-O)/|p-O|).
inline PointN radial_projection(std::span<const double> p, const SphereSpec& sphere) {
    PointN d = sub(p, sphere.center);
    const double n = norm(d);
    if (n == 0.0) throw InvalidParameter("radial projection of the center is undefined");
    PointN r = sphere.center;
    axpy(sphere.radius / n, d, r);
    return r;
}

}  // namespace polysum
