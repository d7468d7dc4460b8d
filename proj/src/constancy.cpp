#include "polysum/constancy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>

#include "polysum/extrema.hpp"
#include "polysum/parallel.hpp"
#include "polysum/sampling.hpp"
#include "polysum/summation.hpp"

namespace polysum {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kBinTol = 1e-10;  // non-DC Fourier bin threshold, relative to DC

void require_concentric(const VertexSet& vs, const SphereSpec& sphere) {
    if (sphere.dim() != vs.dim())
        throw DimensionMismatch("sphere dimension does not match the vertex set");
    if (dist(sphere.center, vs.center) > 1e-9 * vs.circumradius)
        throw InvalidParameter("sphere must be concentric with the circumsphere");
    if (!(sphere.radius > 0.0)) throw InvalidParameter("sphere radius must be positive");
}

// Orthonormal basis of the orthogonal complement of `normal` within
// span(basis). Gram-Schmidt with largest-norm pivoting; deterministic.
std::vector<PointN> complement_basis(const std::vector<PointN>& basis, const PointN& normal) {
    std::vector<PointN> work;
    for (const auto& b : basis) {
        PointN v = b;
        axpy(-dot(v, normal), normal, v);
        work.push_back(std::move(v));
    }
    std::vector<PointN> out;
    const std::size_t want = basis.size() - 1;
    while (out.size() < want) {
        std::size_t pick = 0;
        double best = -1.0;
        for (std::size_t i = 0; i < work.size(); ++i) {
            const double n2 = norm_sq(work[i]);
            if (n2 > best) {
                best = n2;
                pick = i;
            }
        }
        if (best < 1e-20) throw InvalidParameter("degenerate basis in slice reduction");
        PointN u = scaled(work[pick], 1.0 / std::sqrt(best));
        for (auto& w : work) axpy(-dot(w, u), u, w);
        out.push_back(std::move(u));
    }
    return out;
}

// Constancy of sum_i (|M - P_i|^2 + h_i)^k for M on the sphere spanned by the
// orthonormal `basis` around `center` with the given radius.
bool constant_on_subsphere(const std::vector<PointN>& pts, const std::vector<double>& hs,
                           const PointN& center, double radius,
                           const std::vector<PointN>& basis, int k) {
    if (basis.size() == 2)
        return circle_constancy_even(pts, hs, center, basis[0], basis[1], radius, k)
            .isConstant;

    const int offsets = k + 1;
    for (int fam = 0; fam < 2; ++fam) {
        const PointN& normal = basis[static_cast<std::size_t>(fam)];
        const std::vector<PointN> sub_basis = complement_basis(basis, normal);
        for (int j = 0; j < offsets; ++j) {
            const double t =
                radius * (-1.0 + 2.0 * (j + 1) / static_cast<double>(offsets + 1));
            PointN sub_center = center;
            axpy(t, normal, sub_center);
            const double sub_radius = std::sqrt(radius * radius - t * t);

            std::vector<PointN> sub_pts;
            std::vector<double> sub_hs;
            sub_pts.reserve(pts.size());
            sub_hs.reserve(pts.size());
            for (std::size_t i = 0; i < pts.size(); ++i) {
                const double s = dot(sub(pts[i], sub_center), normal);
                PointN q = pts[i];
                axpy(-s, normal, q);
                sub_pts.push_back(std::move(q));
                sub_hs.push_back(hs[i] + s * s);
            }
            if (!constant_on_subsphere(sub_pts, sub_hs, sub_center, sub_radius, sub_basis, k))
                return false;
        }
    }
    return true;
}

std::vector<PointN> standard_basis(int dim) {
    std::vector<PointN> b;
    for (int i = 0; i < dim; ++i) {
        PointN e = origin(dim);
        e[static_cast<std::size_t>(i)] = 1.0;
        b.push_back(std::move(e));
    }
    return b;
}

}  // namespace

CircleConstancy circle_constancy_even(const std::vector<PointN>& points,
                                      const std::vector<double>& offsets, const PointN& center,
                                      const PointN& u, const PointN& v, double radius, int k) {
    const int n_angles = 2 * k + 2;
    std::vector<double> vals(static_cast<std::size_t>(n_angles));
    std::vector<double> terms(points.size());
    for (int t = 0; t < n_angles; ++t) {
        const double theta = 2.0 * kPi * t / n_angles;
        PointN m = center;
        axpy(radius * std::cos(theta), u, m);
        axpy(radius * std::sin(theta), v, m);
        for (std::size_t i = 0; i < points.size(); ++i)
            terms[i] = pow_int(dist_sq(m, points[i]) + offsets[i], k);
        vals[static_cast<std::size_t>(t)] = pairwise_sum(terms);
    }

    CircleConstancy res;
    double lo = vals[0], hi = vals[0];
    for (double x : vals) {
        lo = std::fmin(lo, x);
        hi = std::fmax(hi, x);
    }
    res.spread = hi - lo;

    // With 2k+2 samples of a degree-<=k trigonometric polynomial there is no
    // aliasing: bins 1..k carry the exact coefficients.
    const double dc = std::abs(pairwise_sum(vals));
    bool ok = true;
    for (int m = 1; m <= k && ok; ++m) {
        double re = 0.0, im = 0.0;
        for (int t = 0; t < n_angles; ++t) {
            const double ang = 2.0 * kPi * m * t / n_angles;
            re += vals[static_cast<std::size_t>(t)] * std::cos(ang);
            im -= vals[static_cast<std::size_t>(t)] * std::sin(ang);
        }
        if (std::hypot(re, im) > kBinTol * dc) ok = false;
    }
    res.isConstant = ok;
    return res;
}

bool powered_sum_constant_even(const std::vector<PointN>& points,
                               const std::vector<double>& offsets, const SphereSpec& sphere,
                               int k) {
    if (k < 1) throw InvalidParameter("exponent k must be >= 1");
    if (points.empty()) throw InvalidParameter("empty point set");
    if (points.size() != offsets.size())
        throw InvalidParameter("points/offsets size mismatch");
    return constant_on_subsphere(points, offsets, sphere.center, sphere.radius,
                                 standard_basis(sphere.dim()), k);
}

ConstancyReport spread_on_sphere(const VertexSet& vs, const SphereSpec& sphere,
                                 const PowerSumParams& p, int probes, std::uint64_t seed) {
    require_concentric(vs, sphere);
    if (probes < 1) throw InvalidParameter("probe count must be positive");

    std::vector<PointN> extra = candidate_catalog(vs, sphere).all_points();
    const std::size_t total = static_cast<std::size_t>(probes) + extra.size();

    std::vector<double> vals(total);
    std::exception_ptr error;
    std::mutex error_mutex;
    parallel_for(total, [&](std::size_t i) {
        try {
            const PointN m = i < static_cast<std::size_t>(probes)
                                 ? sphere_probe(i, static_cast<std::size_t>(probes), sphere, seed)
                                 : extra[i - static_cast<std::size_t>(probes)];
            vals[i] = evaluate(vs, m, p);
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    });
    if (error) std::rethrow_exception(error);

    double lo = vals[0], hi = vals[0];
    for (double x : vals) {
        lo = std::fmin(lo, x);
        hi = std::fmax(hi, x);
    }
    const double mean = pairwise_sum(vals) / static_cast<double>(total);

    ConstancyReport rep;
    rep.lambda = p.lambda;
    rep.probeCount = static_cast<int>(total);
    rep.seed = seed;
    rep.spreadAbs = hi - lo;
    rep.spreadRel = mean != 0.0 ? rep.spreadAbs / std::abs(mean) : rep.spreadAbs;
    if (rep.spreadRel < kSpreadConstantTol)
        rep.verdict = ConstancyVerdict::Constant;
    else if (rep.spreadRel > kSpreadNonConstantTol)
        rep.verdict = ConstancyVerdict::NonConstant;
    else
        rep.verdict = ConstancyVerdict::Indeterminate;
    rep.isConstant = rep.verdict == ConstancyVerdict::Constant;
    return rep;
}

bool slice_constancy_even(const VertexSet& vs, const SphereSpec& sphere, int lambdaEven,
                          const SliceFamily& slices) {
    require_concentric(vs, sphere);
    if (lambdaEven < 2 || lambdaEven % 2 != 0)
        throw InvalidParameter("lambda must be an even integer >= 2");
    const int k = lambdaEven / 2;

    const PointN n1 = normalized(slices.normal1);
    const PointN n2 = normalized(slices.normal2);
    if (std::abs(std::abs(dot(n1, n2)) - 1.0) < 1e-9)
        throw InvalidParameter("slice normals must not be parallel");
    if (slices.offsets.empty()) throw InvalidParameter("slice family has no offsets");

    const std::vector<PointN> basis = standard_basis(vs.dim());

    for (const PointN& normal : {n1, n2}) {
        const std::vector<PointN> sub_basis = complement_basis(basis, normal);
        for (double t : slices.offsets) {
            if (std::abs(t) >= sphere.radius * (1.0 - 1e-12))
                throw DegenerateSlice("slice offset misses the sphere");
            PointN sub_center = sphere.center;
            axpy(t, normal, sub_center);
            const double sub_radius = std::sqrt(sphere.radius * sphere.radius - t * t);

            std::vector<PointN> pts;
            std::vector<double> hs;
            pts.reserve(vs.vertices.size());
            for (const auto& a : vs.vertices) {
                const double s = dot(sub(a, sub_center), normal);
                PointN q = a;
                axpy(-s, normal, q);
                pts.push_back(std::move(q));
                hs.push_back(s * s);
            }
            if (!constant_on_subsphere(pts, hs, sub_center, sub_radius, sub_basis, k))
                return false;
        }
    }
    return true;
}

SliceFamily default_slice_family(const VertexSet& vs, const SphereSpec& sphere,
                                 int lambdaEven) {
    SliceFamily fam;
    switch (vs.family.kind) {
        case FamilyKind::Icosahedron:
        case FamilyKind::Dodecahedron: {
            // Face-parallel planes, two non-parallel face normals.
            const auto fc = face_centers(vs);
            fam.normal1 = normalized(sub(fc[0], vs.center));
            for (std::size_t i = 1; i < fc.size(); ++i) {
                PointN n2 = normalized(sub(fc[i], vs.center));
                if (std::abs(dot(fam.normal1, n2)) < 1.0 - 1e-6) {
                    fam.normal2 = std::move(n2);
                    break;
                }
            }
            break;
        }
        case FamilyKind::Simplex: {
            fam.normal1 = normalized(sub(vs.vertices[0], vs.center));
            fam.normal2 = normalized(sub(vs.vertices[1], vs.center));
            break;
        }
        default: {
            fam.normal1 = origin(vs.dim());
            fam.normal1[0] = 1.0;
            fam.normal2 = origin(vs.dim());
            fam.normal2[1] = 1.0;
            break;
        }
    }
    const int count = lambdaEven / 2 + 1;
    for (int j = 0; j < count; ++j)
        fam.offsets.push_back(sphere.radius *
                              (-1.0 + 2.0 * (j + 1) / static_cast<double>(count + 1)));
    return fam;
}

std::vector<int> constancy_set_even(const VertexSet& vs, const SphereSpec& sphere,
                                    int lambdaMax) {
    require_concentric(vs, sphere);
    if (lambdaMax < 2) throw InvalidParameter("lambdaMax must be >= 2");

    std::vector<int> out;
    const std::vector<double> zero_h(vs.vertices.size(), 0.0);
    for (int lam = 2; lam <= lambdaMax; lam += 2) {
        bool ok;
        if (vs.dim() == 2) {
            PointN u = {1.0, 0.0}, v = {0.0, 1.0};
            ok = circle_constancy_even(vs.vertices, zero_h, sphere.center, u, v,
                                       sphere.radius, lam / 2)
                     .isConstant;
        } else {
            ok = slice_constancy_even(vs, sphere, lam, default_slice_family(vs, sphere, lam));
        }
        if (ok) out.push_back(lam);
    }
    return out;
}

std::vector<int> proven_constancy_set(const PolytopeFamily& family) {
    std::vector<int> out;
    switch (family.kind) {
        case FamilyKind::NGon:
            for (int lam = 2; lam <= 2 * (family.param - 1); lam += 2) out.push_back(lam);
            break;
        case FamilyKind::Simplex: out = {2, 4}; break;
        case FamilyKind::CrossPolytope:
        case FamilyKind::Hypercube: out = {2, 4, 6}; break;
        case FamilyKind::Dodecahedron: out = {2, 4, 6, 8, 10}; break;
        case FamilyKind::Icosahedron: out = {2, 4, 6}; break;
    }
    return out;
}

int count_sign_changes(const ExponentialSum& es, double lambdaLo, double lambdaHi,
                       int gridSize) {
    if (!(lambdaLo < lambdaHi)) throw InvalidParameter("lambda range is empty");
    if (gridSize < 2) throw InvalidParameter("grid must have at least 2 points");
    for (const auto& t : es.terms)
        if (!(t.b > 0.0)) throw InvalidParameter("exponential-sum bases must be positive");

    int changes = 0;
    int prev_sign = 0;
    for (int i = 0; i < gridSize; ++i) {
        const double lam =
            lambdaLo + (lambdaHi - lambdaLo) * i / static_cast<double>(gridSize - 1);
        double theta = 0.0;
        for (const auto& t : es.terms) theta += t.a * std::exp(lam * std::log(t.b));
        const int s = theta > 0.0 ? 1 : (theta < 0.0 ? -1 : 0);
        if (s != 0) {
            if (prev_sign != 0 && s != prev_sign) ++changes;
            prev_sign = s;
        }
    }
    return changes;
}

int max_constancy_bound(const VertexSet& vs, const SphereSpec& sphere) {
    require_concentric(vs, sphere);

    const PointN face_point = radial_projection(face_centers(vs).front(), sphere);
    const PointN vertex_point = radial_projection(vs.vertices.front(), sphere);

    const DistanceSpectrum sf = distance_spectrum(vs, face_point);
    const DistanceSpectrum sv = distance_spectrum(vs, vertex_point);

    // Grouped coefficients of Theta(lambda) = sum_C mult d^lambda
    //                                       - sum_V mult d^lambda,
    // zero-distance terms dropped (0^lambda contributes nothing for the
    // exponents in play and the root bound needs positive bases).
    struct Grouped {
        double d;
        double a;
    };
    std::vector<Grouped> terms;
    const double tol = 1e-9 * vs.circumradius;
    auto add = [&](double d, double coeff) {
        if (d <= tol) return;
        for (auto& t : terms)
            if (std::abs(t.d - d) <= tol) {
                t.a += coeff;
                return;
            }
        terms.push_back({d, coeff});
    };
    for (const auto& e : sf.entries) add(e.distance, static_cast<double>(e.multiplicity));
    for (const auto& e : sv.entries) add(e.distance, -static_cast<double>(e.multiplicity));

    int nonzero = 0;
    for (const auto& t : terms)
        if (std::abs(t.a) > 0.5) ++nonzero;
    if (nonzero == 0)
        throw DegenerateSpectrum("spectra coincide termwise; the bound is empty");
    return nonzero - 1;
}

}  // namespace polysum
