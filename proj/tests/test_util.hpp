#pragma once

#include <cmath>
#include <vector>

#include "polysum/polytopes.hpp"
#include "polysum/sampling.hpp"

namespace polysum::testutil {

inline bool rel_close(double a, double b, double tol) {
    const double scale = std::fmax(std::abs(a), std::abs(b));
    return scale == 0.0 || std::abs(a - b) <= tol * scale;
}

// Random orthogonal matrix (rows) by Gram-Schmidt on Gaussian vectors.
inline std::vector<PointN> random_rotation(int dim, Rng& rng) {
    std::vector<PointN> rows;
    while (static_cast<int>(rows.size()) < dim) {
        PointN v(static_cast<std::size_t>(dim));
        for (auto& x : v) x = rng.next_normal();
        for (const auto& r : rows) axpy(-dot(v, r), r, v);
        const double n = norm(v);
        if (n < 1e-6) continue;
        rows.push_back(scaled(v, 1.0 / n));
    }
    return rows;
}

inline PointN rotate_point(const std::vector<PointN>& q, std::span<const double> x) {
    PointN y(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) y[i] = dot(q[i], x);
    return y;
}

inline VertexSet rotate_set(const std::vector<PointN>& q, const VertexSet& vs) {
    VertexSet out = vs;
    out.center = rotate_point(q, vs.center);
    for (auto& v : out.vertices) v = rotate_point(q, v);
    return out;
}

// Multiset equality of distance spectra at a tolerance.
inline bool spectra_equal(const DistanceSpectrum& a, const DistanceSpectrum& b, double tol) {
    if (a.entries.size() != b.entries.size()) return false;
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        if (a.entries[i].multiplicity != b.entries[i].multiplicity) return false;
        if (std::abs(a.entries[i].distance - b.entries[i].distance) > tol) return false;
    }
    return true;
}

inline std::vector<VertexSet> all_families_sample() {
    return {
        generate(PolytopeFamily::ngon(3), 1.0),
        generate(PolytopeFamily::ngon(5), 1.0),
        generate(PolytopeFamily::ngon(8), 1.0),
        generate(PolytopeFamily::simplex(2), 1.0),
        generate(PolytopeFamily::simplex(3), 1.0),
        generate(PolytopeFamily::simplex(5), 1.0),
        generate(PolytopeFamily::cross_polytope(2), 1.0),
        generate(PolytopeFamily::cross_polytope(3), 1.0),
        generate(PolytopeFamily::cross_polytope(5), 1.0),
        generate(PolytopeFamily::hypercube(2), 1.0),
        generate(PolytopeFamily::hypercube(3), 1.0),
        generate(PolytopeFamily::hypercube(5), 1.0),
        generate(PolytopeFamily::icosahedron(), 1.0),
        generate(PolytopeFamily::dodecahedron(), 1.0),
    };
}

}  // namespace polysum::testutil
