#pragma once

#include <span>
#include <string>
#include <vector>

#include "polysum/geometry.hpp"

namespace polysum {

enum class FamilyKind { NGon, Simplex, CrossPolytope, Hypercube, Icosahedron, Dodecahedron };

// A regular polytope family plus its integer parameter (n for NGon, the
// ambient dimension for Simplex/CrossPolytope/Hypercube; the two Platonic
// solids are fixed in dim 3).
struct PolytopeFamily {
    FamilyKind kind = FamilyKind::NGon;
    int param = 0;

    static PolytopeFamily ngon(int n) { return {FamilyKind::NGon, n}; }
    static PolytopeFamily simplex(int dim) { return {FamilyKind::Simplex, dim}; }
    static PolytopeFamily cross_polytope(int dim) { return {FamilyKind::CrossPolytope, dim}; }
    static PolytopeFamily hypercube(int dim) { return {FamilyKind::Hypercube, dim}; }
    static PolytopeFamily icosahedron() { return {FamilyKind::Icosahedron, 3}; }
    static PolytopeFamily dodecahedron() { return {FamilyKind::Dodecahedron, 3}; }

    int dimension() const;
    int vertex_count() const;
    std::string name() const;

    // Throws InvalidParameter unless n >= 3 (NGon) resp. dim >= 2.
    void validate() const;

    bool operator==(const PolytopeFamily&) const = default;
};

// Parses "ngon", "simplex", "crosspolytope", "hypercube", "icosahedron",
// "dodecahedron" (param is n or dim; ignored for the solids).
PolytopeFamily parse_family(const std::string& name, int param);

// Vertex list A_1..A_k with the circumscribed sphere data (center O,
// circumradius r). Immutable after generation.
struct VertexSet {
    PolytopeFamily family;
    std::vector<PointN> vertices;
    PointN center;
    double circumradius = 1.0;

    int dim() const { return static_cast<int>(center.size()); }
    SphereSpec circumsphere() const { return {center, circumradius}; }
};

// Sorted distance multiset from one point to all vertices.
struct DistanceSpectrum {
    struct Entry {
        double distance;
        int multiplicity;
    };
    std::vector<Entry> entries;  // strictly increasing distances

    int total() const {
        int t = 0;
        for (const auto& e : entries) t += e.multiplicity;
        return t;
    }
};

/// Exact vertex coordinates for the family, scaled to `circumradius` and
/// translated to `center` (origin when empty). Deterministic; the returned
/// set satisfies | |A_i - O| - r | / r < 1e-12 for every vertex.
VertexSet generate(const PolytopeFamily& family, double circumradius, PointN center = {});

/// Distances from p to every vertex, merged into multiplicity groups. Two
/// distances are one group when they differ by at most 1e-9 * circumradius.
DistanceSpectrum distance_spectrum(const VertexSet& vs, std::span<const double> p);

/// Centroids of all facets ((d-1)-faces). Closed forms for the product
/// families; for the icosahedron/dodecahedron the faces are recovered from
/// the edge graph (minimum-distance adjacency).
std::vector<PointN> face_centers(const VertexSet& vs);

/// The polar dual inscribed in the same sphere: vertices are the radial
/// projections of face centers onto the circumsphere. Cube <-> cross-polytope
/// and icosahedron <-> dodecahedron come out aligned by construction.
VertexSet polar_dual(const VertexSet& vs);

}  // namespace polysum
