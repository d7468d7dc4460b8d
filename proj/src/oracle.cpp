#include "polysum/oracle.hpp"

#include <cmath>
#include <functional>
#include <mutex>

#include "polysum/extrema.hpp"
#include "polysum/parallel.hpp"
#include "polysum/sampling.hpp"

namespace polysum {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool singular_config(const VertexSet& vs, const SphereSpec& sphere, const PowerSumParams& p) {
    return p.lambda < 0.0 && p.hOffset == 0.0 &&
           std::abs(sphere.radius - vs.circumradius) <= 1e-12 * vs.circumradius;
}

// Catalog points, minus the vertex projections when they are poles.
std::vector<PointN> catalog_probes(const VertexSet& vs, const SphereSpec& sphere,
                                   const PowerSumParams& p) {
    const CandidateCatalog cat = candidate_catalog(vs, sphere);
    const bool skip_vertices = singular_config(vs, sphere, p);
    std::vector<PointN> pts;
    for (const auto& o : cat.orbits) {
        if (skip_vertices && o.name == orbit::vertex_projections) continue;
        pts.insert(pts.end(), o.points.begin(), o.points.end());
    }
    return pts;
}

// Deterministic reduction: scan in index order, strict comparisons, so the
// report is identical for every thread count.
GridReport reduce(const VertexSet& vs, const PowerSumParams& p, std::size_t n,
                  std::uint64_t seed, const std::function<PointN(std::size_t)>& point_at,
                  std::size_t total) {
    std::vector<double> vals(total);
    std::exception_ptr error;
    std::mutex error_mutex;
    parallel_for(total, [&](std::size_t i) {
        try {
            vals[i] = evaluate(vs, point_at(i), p);
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    });
    if (error) std::rethrow_exception(error);

    std::size_t imin = 0, imax = 0;
    for (std::size_t i = 1; i < total; ++i) {
        if (vals[i] < vals[imin]) imin = i;
        if (vals[i] > vals[imax]) imax = i;
    }
    GridReport rep;
    rep.minValue = vals[imin];
    rep.maxValue = vals[imax];
    rep.argmin = point_at(imin);
    rep.argmax = point_at(imax);
    rep.gridSize = n;
    rep.seed = seed;
    return rep;
}

}  // namespace

GridReport grid_extrema_circle(const VertexSet& vs, const SphereSpec& circle,
                               const PowerSumParams& p, std::size_t n) {
    if (vs.dim() != 2) throw DimensionMismatch("circle oracle requires dim 2");
    if (n < 16) throw InvalidParameter("grid must have at least 16 points");

    const std::vector<PointN> extra = catalog_probes(vs, circle, p);
    const std::size_t total = n + extra.size();
    auto point_at = [&](std::size_t i) -> PointN {
        if (i < n)
            return circle_point(2.0 * kPi * (static_cast<double>(i) + 0.5) /
                                    static_cast<double>(n),
                                circle);
        return extra[i - n];
    };
    return reduce(vs, p, n, 0, point_at, total);
}

GridReport grid_extrema_sphere(const VertexSet& vs, const SphereSpec& sphere,
                               const PowerSumParams& p, std::size_t n, std::uint64_t seed) {
    if (vs.dim() < 3) throw DimensionMismatch("sphere oracle requires dim >= 3");
    if (n < 16) throw InvalidParameter("grid must have at least 16 points");

    const std::vector<PointN> extra = catalog_probes(vs, sphere, p);
    const std::size_t total = n + extra.size();
    auto point_at = [&](std::size_t i) -> PointN {
        if (i < n) return sphere_probe(i, n, sphere, seed);
        return extra[i - n];
    };
    return reduce(vs, p, n, seed, point_at, total);
}

}  // namespace polysum
