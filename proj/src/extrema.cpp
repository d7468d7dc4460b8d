#include "polysum/extrema.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polysum/sampling.hpp"

namespace polysum {

namespace {

constexpr double kClassifyTol = 1e-6;   // radians to the nearest orbit point
constexpr double kConstantTol = 1e-9;   // relative max-min below which we call it flat
constexpr int kMaxIterations = 100000;

void require_concentric(const VertexSet& vs, const SphereSpec& sphere) {
    if (sphere.dim() != vs.dim())
        throw DimensionMismatch("sphere dimension does not match the vertex set");
    if (dist(sphere.center, vs.center) > 1e-9 * vs.circumradius)
        throw InvalidParameter("sphere must be concentric with the circumsphere");
    if (!(sphere.radius > 0.0)) throw InvalidParameter("sphere radius must be positive");
}

bool on_circumsphere(const VertexSet& vs, const SphereSpec& sphere) {
    return std::abs(sphere.radius - vs.circumradius) <= 1e-12 * vs.circumradius;
}

}  // namespace

const CandidateCatalog::Orbit* CandidateCatalog::find(std::string_view name) const {
    for (const auto& o : orbits)
        if (o.name == name) return &o;
    return nullptr;
}

std::vector<PointN> CandidateCatalog::all_points() const {
    std::vector<PointN> pts;
    for (const auto& o : orbits) pts.insert(pts.end(), o.points.begin(), o.points.end());
    return pts;
}

std::pair<std::string, double> CandidateCatalog::classify(std::span<const double> p,
                                                          std::span<const double> center) const {
    std::string best = orbit::unclassified;
    double best_angle = std::numeric_limits<double>::infinity();
    for (const auto& o : orbits)
        for (const auto& q : o.points) {
            const double a = angular_distance(p, q, center);
            if (a < best_angle) {
                best_angle = a;
                best = o.name;
            }
        }
    return {best, best_angle};
}

CandidateCatalog candidate_catalog(const VertexSet& vs, const SphereSpec& sphere) {
    require_concentric(vs, sphere);

    CandidateCatalog cat;
    CandidateCatalog::Orbit proj{orbit::vertex_projections, {}};
    for (const auto& a : vs.vertices) proj.points.push_back(radial_projection(a, sphere));
    cat.orbits.push_back(std::move(proj));

    switch (vs.family.kind) {
        case FamilyKind::NGon: {
            CandidateCatalog::Orbit arcs{orbit::arc_midpoints, {}};
            for (const auto& c : face_centers(vs)) arcs.points.push_back(radial_projection(c, sphere));
            cat.orbits.push_back(std::move(arcs));
            break;
        }
        case FamilyKind::Simplex: {
            CandidateCatalog::Orbit anti{orbit::vertex_antipodes, {}};
            for (const auto& a : vs.vertices) {
                PointN p = sphere.center;
                axpy(-sphere.radius / vs.circumradius, sub(a, vs.center), p);
                anti.points.push_back(std::move(p));
            }
            cat.orbits.push_back(std::move(anti));
            break;
        }
        default: {
            CandidateCatalog::Orbit fc{orbit::face_center_projections, {}};
            for (const auto& c : face_centers(vs)) fc.points.push_back(radial_projection(c, sphere));
            cat.orbits.push_back(std::move(fc));
            break;
        }
    }
    return cat;
}

RegimePrediction predict_regime(const PolytopeFamily& family, double lambda) {
    family.validate();
    if (family.kind == FamilyKind::Icosahedron || family.kind == FamilyKind::Dodecahedron)
        throw UnsupportedFamily("no extremum classification for this family");

    const double inf = std::numeric_limits<double>::infinity();
    RegimePrediction pred;
    pred.family = family;
    pred.lambda = lambda;

    // The "far" orbit opposite the vertex projections.
    const char* far_orbit = nullptr;
    double constancy_cap = 0.0;  // largest even lambda with a constant sum
    switch (family.kind) {
        case FamilyKind::NGon:
            far_orbit = orbit::arc_midpoints;
            constancy_cap = 2.0 * (family.param - 1);
            break;
        case FamilyKind::Simplex:
            far_orbit = orbit::vertex_antipodes;
            constancy_cap = 4.0;
            break;
        default:
            far_orbit = orbit::face_center_projections;
            constancy_cap = 6.0;
            break;
    }
    const double top = constancy_cap + 2.0;  // start of the terminal regime

    if (lambda < 0.0) {
        pred.intervalLo = -inf;
        pred.intervalHi = 0.0;
        pred.predictedMaxOrbit = orbit::vertex_projections;
        pred.predictedMinOrbit = far_orbit;
        pred.unboundedOnCircumsphere = true;
        return pred;
    }
    if (lambda < top && is_even_integer(lambda)) {
        pred.intervalLo = pred.intervalHi = lambda;
        pred.predictedMaxOrbit = orbit::constant;
        pred.predictedMinOrbit = orbit::constant;
        return pred;
    }
    if (lambda < top) {
        const int m = static_cast<int>(std::floor(0.5 * lambda));
        pred.intervalLo = 2.0 * m;
        pred.intervalHi = 2.0 * m + 2.0;
        if (m % 2 == 0) {
            pred.predictedMaxOrbit = far_orbit;
            pred.predictedMinOrbit = orbit::vertex_projections;
        } else {
            pred.predictedMaxOrbit = orbit::vertex_projections;
            pred.predictedMinOrbit = far_orbit;
        }
        return pred;
    }

    pred.intervalLo = top;
    pred.intervalHi = inf;
    if (family.kind == FamilyKind::NGon && family.param % 2 != 0) {
        // Odd polygon: the roles flip in the terminal regime.
        pred.predictedMaxOrbit = far_orbit;
        pred.predictedMinOrbit = orbit::vertex_projections;
    } else if (family.kind == FamilyKind::NGon) {
        pred.predictedMaxOrbit = orbit::vertex_projections;
        pred.predictedMinOrbit = far_orbit;
    } else if (family.kind == FamilyKind::Simplex) {
        pred.predictedMaxOrbit = far_orbit;
        pred.predictedMinOrbit = orbit::vertex_projections;
    } else {
        pred.predictedMaxOrbit = orbit::vertex_projections;
        pred.predictedMinOrbit = far_orbit;
    }
    return pred;
}

namespace {

struct SearchOutcome {
    PointN point;
    double value = 0.0;
    bool converged = true;
};

PointN retract(const PointN& p, const SphereSpec& sphere) {
    PointN d = sub(p, sphere.center);
    const double n = norm(d);
    PointN r = sphere.center;
    axpy(sphere.radius / n, d, r);
    return r;
}

// Projected-gradient ascent (sign=+1) or descent (sign=-1) with Armijo
// backtracking and renormalization retraction.
SearchOutcome local_search(const VertexSet& vs, const SphereSpec& sphere,
                           const PowerSumParams& p, PointN start, double sign) {
    SearchOutcome out;
    PointN m = retract(start, sphere);
    double fm = evaluate(vs, m, p);

    for (int iter = 0; iter < kMaxIterations; ++iter) {
        PointN g = tangential_gradient(vs, m, sphere, p);
        const double gn = norm(g);
        // Stationarity scaled by the natural gradient magnitude |lambda| f / R;
        // an absolute cutoff would be unattainable for large powers.
        const double scale = std::fmax(1.0, std::abs(p.lambda) * std::abs(fm) / sphere.radius);
        if (gn <= 1e-10 * scale) {
            out.point = m;
            out.value = fm;
            return out;
        }

        double alpha = 0.1 * sphere.radius / std::fmax(gn, 1e-300);
        bool moved = false;
        for (int bt = 0; bt < 80; ++bt) {
            PointN trial = m;
            axpy(sign * alpha, g, trial);
            trial = retract(trial, sphere);
            const double ft = evaluate(vs, trial, p);
            if (sign * (ft - fm) >= 1e-4 * alpha * gn * gn) {
                m = std::move(trial);
                fm = ft;
                moved = true;
                break;
            }
            alpha *= 0.5;
            if (alpha * gn < 1e-16 * sphere.radius) break;
        }
        if (!moved) {
            // Step size underflowed: numerically stationary.
            out.point = m;
            out.value = fm;
            return out;
        }
    }
    out.point = m;
    out.value = fm;
    out.converged = false;
    return out;
}

}  // namespace

ExtremumReport find_extrema(const VertexSet& vs, const SphereSpec& sphere,
                            const PowerSumParams& p, int starts, std::uint64_t seed) {
    require_concentric(vs, sphere);
    if (starts < 1) throw InvalidParameter("starts must be positive");

    ExtremumReport rep;
    rep.lambda = p.lambda;
    rep.hOffset = p.hOffset;
    rep.seed = seed;
    rep.starts = starts;

    const CandidateCatalog cat = candidate_catalog(vs, sphere);
    const bool singular = p.lambda < 0.0 && p.hOffset == 0.0 && on_circumsphere(vs, sphere);

    std::vector<PointN> start_points;
    for (const auto& o : cat.orbits) {
        if (singular && o.name == orbit::vertex_projections) continue;  // poles
        start_points.insert(start_points.end(), o.points.begin(), o.points.end());
    }
    const auto too_close_to_pole = [&](const PointN& p) {
        if (!singular) return false;
        for (const auto& a : vs.vertices)
            if (dist(p, a) < 1e-6 * vs.circumradius) return true;
        return false;
    };
    for (int i = 0; i < starts; ++i) {
        PointN p = sphere_probe(static_cast<std::size_t>(i), static_cast<std::size_t>(starts),
                                sphere, seed);
        if (too_close_to_pole(p))
            p = sphere_probe(static_cast<std::size_t>(i) + 1,
                             static_cast<std::size_t>(2 * starts + 1), sphere, seed);
        if (too_close_to_pole(p)) continue;
        start_points.push_back(std::move(p));
    }

    double best_max = -std::numeric_limits<double>::infinity();
    double best_min = std::numeric_limits<double>::infinity();
    PointN arg_max, arg_min;
    bool all_converged = true;

    for (const auto& s : start_points) {
        if (!singular) {
            SearchOutcome up = local_search(vs, sphere, p, s, +1.0);
            all_converged = all_converged && up.converged;
            if (up.value > best_max) {
                best_max = up.value;
                arg_max = up.point;
            }
        }
        SearchOutcome down = local_search(vs, sphere, p, s, -1.0);
        all_converged = all_converged && down.converged;
        if (down.value < best_min) {
            best_min = down.value;
            arg_min = down.point;
        }
    }

    rep.converged = all_converged;
    rep.minValue = best_min;
    rep.argmin = arg_min;
    auto cls_min = cat.classify(arg_min, sphere.center);
    rep.minLabel = cls_min.second < kClassifyTol ? cls_min.first : orbit::unclassified;
    rep.minAngularError = cls_min.second;

    if (singular) {
        rep.unboundedMax = true;
        rep.maxValue = std::numeric_limits<double>::infinity();
        rep.argmax = radial_projection(vs.vertices.front(), sphere);
        rep.maxLabel = orbit::unbounded;
        rep.maxAngularError = 0.0;
        return rep;
    }

    rep.maxValue = best_max;
    rep.argmax = arg_max;
    auto cls_max = cat.classify(arg_max, sphere.center);
    rep.maxLabel = cls_max.second < kClassifyTol ? cls_max.first : orbit::unclassified;
    rep.maxAngularError = cls_max.second;

    const double mean = 0.5 * (std::abs(best_max) + std::abs(best_min));
    if (mean > 0.0 && (best_max - best_min) < kConstantTol * mean) {
        rep.maxLabel = orbit::constant;
        rep.minLabel = orbit::constant;
    }
    return rep;
}

namespace {

// Point sets equal as orbits: same size and mutual angular Hausdorff
// distance below tol.
bool orbits_coincide(const std::vector<PointN>& a, const std::vector<PointN>& b,
                     std::span<const double> center, double tol) {
    if (a.size() != b.size()) return false;
    for (const auto& p : a) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& q : b) best = std::fmin(best, angular_distance(p, q, center));
        if (best > tol) return false;
    }
    return true;
}

}  // namespace

bool verify_duality(const VertexSet& primal, const VertexSet& dual, const SphereSpec& sphere,
                    double lambda) {
    const bool pair_ok =
        (primal.family.kind == FamilyKind::Hypercube &&
         dual.family.kind == FamilyKind::CrossPolytope &&
         primal.family.param == dual.family.param) ||
        (primal.family.kind == FamilyKind::CrossPolytope &&
         dual.family.kind == FamilyKind::Hypercube &&
         primal.family.param == dual.family.param) ||
        (primal.family.kind == FamilyKind::Icosahedron &&
         dual.family.kind == FamilyKind::Dodecahedron) ||
        (primal.family.kind == FamilyKind::Dodecahedron &&
         dual.family.kind == FamilyKind::Icosahedron);
    if (!pair_ok) throw NotDualPair("families are not a polar dual pair");
    if (dist(primal.center, dual.center) > 1e-9 * primal.circumradius ||
        std::abs(primal.circumradius - dual.circumradius) > 1e-9 * primal.circumradius)
        throw NotDualPair("dual pair must share the circumsphere");

    // Alignment by polar reciprocation: the primal's face centers must point
    // at dual vertices.
    const SphereSpec circum{primal.center, primal.circumradius};
    std::vector<PointN> fc;
    for (const auto& c : face_centers(primal)) fc.push_back(radial_projection(c, circum));
    std::vector<PointN> dv;
    for (const auto& v : dual.vertices) dv.push_back(radial_projection(v, circum));
    if (!orbits_coincide(fc, dv, primal.center, 1e-9))
        throw NotDualPair("dual pair is not aligned by polar reciprocation");

    const PowerSumParams params{lambda, 0.0};
    const ExtremumReport rp = find_extrema(primal, sphere, params, 8, 42);
    const ExtremumReport rd = find_extrema(dual, sphere, params, 8, 42);

    if (rp.maxLabel == orbit::constant && rd.maxLabel == orbit::constant) return true;

    const CandidateCatalog cp = candidate_catalog(primal, sphere);
    const CandidateCatalog cd = candidate_catalog(dual, sphere);

    auto orbit_points = [](const CandidateCatalog& c, const std::string& name,
                           const ExtremumReport& rep,
                           bool is_max) -> const std::vector<PointN>* {
        if (name == orbit::unbounded && is_max) {
            // Unbounded maximum sits at the vertex projections.
            const auto* o = c.find(orbit::vertex_projections);
            return o ? &o->points : nullptr;
        }
        (void)rep;
        const auto* o = c.find(name);
        return o ? &o->points : nullptr;
    };

    const auto* p_max = orbit_points(cp, rp.maxLabel, rp, true);
    const auto* p_min = orbit_points(cp, rp.minLabel, rp, false);
    const auto* d_max = orbit_points(cd, rd.maxLabel, rd, true);
    const auto* d_min = orbit_points(cd, rd.minLabel, rd, false);
    if (!p_max || !p_min || !d_max || !d_min) return false;

    return orbits_coincide(*p_max, *d_min, sphere.center, kClassifyTol) &&
           orbits_coincide(*p_min, *d_max, sphere.center, kClassifyTol);
}

}  // namespace polysum
