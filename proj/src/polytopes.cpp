#include "polysum/polytopes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace polysum {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<PointN> ngon_vertices(int n) {
    std::vector<PointN> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n);
        v.push_back({std::cos(t), std::sin(t)});
    }
    return v;
}

// d+1 unit vectors in R^d with equal pairwise distances: center the standard
// basis of R^{d+1} on the hyperplane sum(x) = 1/(d+1), then rotate that
// hyperplane onto R^d x {0} with the Householder reflection taking
// (1,..,1)/sqrt(d+1) to e_{d+1}.
std::vector<PointN> simplex_vertices(int d) {
    const int m = d + 1;
    const double inv = 1.0 / static_cast<double>(m);
    const double un = 1.0 / std::sqrt(static_cast<double>(m));

    PointN w(static_cast<std::size_t>(m), un);
    w[static_cast<std::size_t>(d)] -= 1.0;
    const double wn2 = norm_sq(w);

    std::vector<PointN> out;
    out.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        PointN v(static_cast<std::size_t>(m), -inv);
        v[static_cast<std::size_t>(i)] += 1.0;
        const double c = 2.0 * dot(w, v) / wn2;
        PointN h = v;
        axpy(-c, w, h);  // Householder reflection; last coordinate lands on 0
        PointN p(h.begin(), h.begin() + d);
        out.push_back(normalized(p));
    }
    return out;
}

std::vector<PointN> cross_polytope_vertices(int d) {
    std::vector<PointN> v;
    v.reserve(static_cast<std::size_t>(2 * d));
    for (int i = 0; i < d; ++i) {
        PointN p = origin(d);
        p[static_cast<std::size_t>(i)] = 1.0;
        v.push_back(p);
        p[static_cast<std::size_t>(i)] = -1.0;
        v.push_back(p);
    }
    return v;
}

std::vector<PointN> hypercube_vertices(int d) {
    const double c = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<PointN> v;
    v.reserve(1u << d);
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        PointN p(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i)
            p[static_cast<std::size_t>(i)] = (mask >> i) & 1u ? c : -c;
        v.push_back(p);
    }
    return v;
}

// Golden-ratio constructions, unit-circumradius after rescaling.
std::vector<PointN> icosahedron_vertices() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double s = 1.0 / std::sqrt(1.0 + phi * phi);
    std::vector<PointN> v;
    for (double a : {-1.0, 1.0})
        for (double b : {-phi, phi}) {
            v.push_back({0.0, a * s, b * s});
            v.push_back({a * s, b * s, 0.0});
            v.push_back({b * s, 0.0, a * s});
        }
    return v;
}

std::vector<PointN> dodecahedron_vertices() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double s = 1.0 / std::sqrt(3.0);
    std::vector<PointN> v;
    for (double a : {-1.0, 1.0})
        for (double b : {-1.0, 1.0})
            for (double c : {-1.0, 1.0}) v.push_back({a * s, b * s, c * s});
    const double ip = s / phi, p = s * phi;
    for (double a : {-ip, ip})
        for (double b : {-p, p}) {
            v.push_back({0.0, a, b});
            v.push_back({a, b, 0.0});
            v.push_back({b, 0.0, a});
        }
    return v;
}

// Edge graph by minimum nonzero pairwise distance.
std::vector<std::vector<int>> adjacency(const std::vector<PointN>& v, double tol) {
    const int n = static_cast<int>(v.size());
    double min_d = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) min_d = std::fmin(min_d, dist(v[i], v[j]));
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (dist(v[i], v[j]) <= min_d + tol) {
                adj[static_cast<std::size_t>(i)].push_back(j);
                adj[static_cast<std::size_t>(j)].push_back(i);
            }
    return adj;
}

bool coplanar(const std::vector<PointN>& pts, double tol) {
    PointN c = origin(static_cast<int>(pts[0].size()));
    for (const auto& p : pts) axpy(1.0 / static_cast<double>(pts.size()), p, c);
    // Normal of the face plane from two chords; all points must lie on it.
    const PointN u = sub(pts[1], pts[0]);
    const PointN w = sub(pts[2], pts[0]);
    PointN nrm = {u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2],
                  u[0] * w[1] - u[1] * w[0]};
    const double nn = norm(nrm);
    if (nn < tol) return false;
    nrm = scaled(nrm, 1.0 / nn);
    for (const auto& p : pts)
        if (std::abs(dot(sub(p, c), nrm)) > tol) return false;
    return true;
}

// Triangular faces: mutually adjacent vertex triples.
std::vector<std::vector<int>> triangle_faces(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    auto connected = [&](int a, int b) {
        const auto& row = adj[static_cast<std::size_t>(a)];
        return std::find(row.begin(), row.end(), b) != row.end();
    };
    std::vector<std::vector<int>> faces;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (connected(i, j) && connected(j, k) && connected(i, k))
                    faces.push_back({i, j, k});
    return faces;
}

// Pentagonal faces: chordless 5-cycles in the (3-regular) edge graph,
// filtered by coplanarity, deduplicated by vertex set.
std::vector<std::vector<int>> pentagon_faces(const std::vector<PointN>& v,
                                             const std::vector<std::vector<int>>& adj,
                                             double tol) {
    auto connected = [&](int a, int b) {
        const auto& row = adj[static_cast<std::size_t>(a)];
        return std::find(row.begin(), row.end(), b) != row.end();
    };
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> faces;
    const int n = static_cast<int>(v.size());
    for (int a = 0; a < n; ++a)
        for (int b : adj[static_cast<std::size_t>(a)])
            for (int c : adj[static_cast<std::size_t>(b)]) {
                if (c == a) continue;
                for (int d : adj[static_cast<std::size_t>(c)]) {
                    if (d == a || d == b) continue;
                    for (int e : adj[static_cast<std::size_t>(d)]) {
                        if (e == a || e == b || e == c) continue;
                        if (!connected(e, a)) continue;
                        std::vector<int> key = {a, b, c, d, e};
                        std::sort(key.begin(), key.end());
                        if (seen.count(key)) continue;
                        std::vector<PointN> pts = {v[static_cast<std::size_t>(a)],
                                                   v[static_cast<std::size_t>(b)],
                                                   v[static_cast<std::size_t>(c)],
                                                   v[static_cast<std::size_t>(d)],
                                                   v[static_cast<std::size_t>(e)]};
                        if (!coplanar(pts, tol)) continue;
                        seen.insert(key);
                        faces.push_back({a, b, c, d, e});
                    }
                }
            }
    return faces;
}

PointN centroid_of(const VertexSet& vs, const std::vector<int>& idx) {
    PointN c = origin(vs.dim());
    for (int i : idx) axpy(1.0 / static_cast<double>(idx.size()),
                           vs.vertices[static_cast<std::size_t>(i)], c);
    return c;
}

}  // namespace

int PolytopeFamily::dimension() const {
    switch (kind) {
        case FamilyKind::NGon: return 2;
        case FamilyKind::Icosahedron:
        case FamilyKind::Dodecahedron: return 3;
        default: return param;
    }
}

int PolytopeFamily::vertex_count() const {
    switch (kind) {
        case FamilyKind::NGon: return param;
        case FamilyKind::Simplex: return param + 1;
        case FamilyKind::CrossPolytope: return 2 * param;
        case FamilyKind::Hypercube: return 1 << param;
        case FamilyKind::Icosahedron: return 12;
        case FamilyKind::Dodecahedron: return 20;
    }
    return 0;
}

std::string PolytopeFamily::name() const {
    switch (kind) {
        case FamilyKind::NGon: return "ngon";
        case FamilyKind::Simplex: return "simplex";
        case FamilyKind::CrossPolytope: return "crosspolytope";
        case FamilyKind::Hypercube: return "hypercube";
        case FamilyKind::Icosahedron: return "icosahedron";
        case FamilyKind::Dodecahedron: return "dodecahedron";
    }
    return "?";
}

void PolytopeFamily::validate() const {
    switch (kind) {
        case FamilyKind::NGon:
            if (param < 3) throw InvalidParameter("ngon requires n >= 3");
            break;
        case FamilyKind::Simplex:
        case FamilyKind::CrossPolytope:
            if (param < 2) throw InvalidParameter("dimension must be >= 2");
            break;
        case FamilyKind::Hypercube:
            if (param < 2) throw InvalidParameter("dimension must be >= 2");
            if (param > 20) throw InvalidParameter("hypercube dimension too large");
            break;
        case FamilyKind::Icosahedron:
        case FamilyKind::Dodecahedron:
            break;
    }
}

PolytopeFamily parse_family(const std::string& name, int param) {
    if (name == "ngon") return PolytopeFamily::ngon(param);
    if (name == "simplex") return PolytopeFamily::simplex(param);
    if (name == "crosspolytope" || name == "cross-polytope" || name == "orthoplex")
        return PolytopeFamily::cross_polytope(param);
    if (name == "hypercube" || name == "cube") return PolytopeFamily::hypercube(param);
    if (name == "icosahedron") return PolytopeFamily::icosahedron();
    if (name == "dodecahedron") return PolytopeFamily::dodecahedron();
    throw InvalidParameter("unknown polytope family: " + name);
}

VertexSet generate(const PolytopeFamily& family, double circumradius, PointN center) {
    family.validate();
    if (!(circumradius > 0.0)) throw InvalidParameter("circumradius must be positive");
    const int d = family.dimension();
    if (center.empty()) center = origin(d);
    if (static_cast<int>(center.size()) != d)
        throw DimensionMismatch("center dimension does not match the family");

    std::vector<PointN> unit;
    switch (family.kind) {
        case FamilyKind::NGon: unit = ngon_vertices(family.param); break;
        case FamilyKind::Simplex: unit = simplex_vertices(family.param); break;
        case FamilyKind::CrossPolytope: unit = cross_polytope_vertices(family.param); break;
        case FamilyKind::Hypercube: unit = hypercube_vertices(family.param); break;
        case FamilyKind::Icosahedron: unit = icosahedron_vertices(); break;
        case FamilyKind::Dodecahedron: unit = dodecahedron_vertices(); break;
    }

    VertexSet vs;
    vs.family = family;
    vs.center = center;
    vs.circumradius = circumradius;
    vs.vertices.reserve(unit.size());
    for (auto& u : unit) {
        // Renormalize before scaling: keeps | |A_i - O| - r | at the few-ulp level.
        PointN p = scaled(normalized(u), circumradius);
        vs.vertices.push_back(add(p, center));
    }
    return vs;
}

DistanceSpectrum distance_spectrum(const VertexSet& vs, std::span<const double> p) {
    if (static_cast<int>(p.size()) != vs.dim())
        throw DimensionMismatch("point dimension does not match the vertex set");
    std::vector<double> d;
    d.reserve(vs.vertices.size());
    for (const auto& a : vs.vertices) d.push_back(dist(p, a));
    std::sort(d.begin(), d.end());

    const double tol = 1e-9 * vs.circumradius;
    DistanceSpectrum spec;
    for (double x : d) {
        if (!spec.entries.empty() && x - spec.entries.back().distance <= tol)
            ++spec.entries.back().multiplicity;
        else
            spec.entries.push_back({x, 1});
    }
    return spec;
}

std::vector<PointN> face_centers(const VertexSet& vs) {
    const int d = vs.dim();
    std::vector<PointN> out;
    switch (vs.family.kind) {
        case FamilyKind::NGon: {
            const int n = vs.family.param;
            for (int i = 0; i < n; ++i) {
                PointN m = add(vs.vertices[static_cast<std::size_t>(i)],
                               vs.vertices[static_cast<std::size_t>((i + 1) % n)]);
                out.push_back(scaled(m, 0.5));
            }
            break;
        }
        case FamilyKind::Simplex: {
            // Facet opposite A_i has centroid O - (A_i - O)/d.
            for (const auto& a : vs.vertices) {
                PointN c = vs.center;
                axpy(-1.0 / static_cast<double>(d), sub(a, vs.center), c);
                out.push_back(c);
            }
            break;
        }
        case FamilyKind::CrossPolytope: {
            const double s = vs.circumradius / static_cast<double>(d);
            for (unsigned mask = 0; mask < (1u << d); ++mask) {
                PointN c = vs.center;
                for (int i = 0; i < d; ++i)
                    c[static_cast<std::size_t>(i)] += (mask >> i) & 1u ? s : -s;
                out.push_back(c);
            }
            break;
        }
        case FamilyKind::Hypercube: {
            const double s = vs.circumradius / std::sqrt(static_cast<double>(d));
            for (int i = 0; i < d; ++i)
                for (double sign : {1.0, -1.0}) {
                    PointN c = vs.center;
                    c[static_cast<std::size_t>(i)] += sign * s;
                    out.push_back(c);
                }
            break;
        }
        case FamilyKind::Icosahedron:
        case FamilyKind::Dodecahedron: {
            const double tol = 1e-9 * vs.circumradius;
            const auto adj = adjacency(vs.vertices, tol);
            const auto faces = vs.family.kind == FamilyKind::Icosahedron
                                   ? triangle_faces(adj)
                                   : pentagon_faces(vs.vertices, adj, 1e-6 * vs.circumradius);
            const std::size_t expected = vs.family.kind == FamilyKind::Icosahedron ? 20 : 12;
            if (faces.size() != expected)
                throw std::logic_error("face enumeration produced an unexpected count");
            for (const auto& f : faces) out.push_back(centroid_of(vs, f));
            break;
        }
    }
    return out;
}

VertexSet polar_dual(const VertexSet& vs) {
    PolytopeFamily dual_family;
    switch (vs.family.kind) {
        case FamilyKind::NGon: dual_family = vs.family; break;
        case FamilyKind::Simplex: dual_family = vs.family; break;
        case FamilyKind::CrossPolytope:
            dual_family = PolytopeFamily::hypercube(vs.family.param);
            break;
        case FamilyKind::Hypercube:
            dual_family = PolytopeFamily::cross_polytope(vs.family.param);
            break;
        case FamilyKind::Icosahedron: dual_family = PolytopeFamily::dodecahedron(); break;
        case FamilyKind::Dodecahedron: dual_family = PolytopeFamily::icosahedron(); break;
    }
    VertexSet dual;
    dual.family = dual_family;
    dual.center = vs.center;
    dual.circumradius = vs.circumradius;
    const SphereSpec sphere{vs.center, vs.circumradius};
    for (const auto& c : face_centers(vs)) dual.vertices.push_back(radial_projection(c, sphere));
    if (static_cast<int>(dual.vertices.size()) != dual_family.vertex_count())
        throw std::logic_error("polar dual vertex count mismatch");
    return dual;
}

}  // namespace polysum
