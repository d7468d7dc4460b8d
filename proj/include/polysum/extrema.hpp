#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "polysum/powersum.hpp"

namespace polysum {

namespace orbit {
inline constexpr const char* vertex_projections = "vertexProjections";
inline constexpr const char* vertex_antipodes = "vertexAntipodes";
inline constexpr const char* face_center_projections = "faceCenterProjections";
inline constexpr const char* arc_midpoints = "arcMidpoints";
inline constexpr const char* constant = "constant";
inline constexpr const char* unclassified = "unclassified";
inline constexpr const char* unbounded = "unbounded";
}  // namespace orbit

// Labeled orbits of symmetry-forced critical points on Gamma: the vertex
// projections B_i = OA_i \cap Gamma plus the family's opposite orbit
// (arc midpoints / vertex antipodes / face-center projections).
struct CandidateCatalog {
    struct Orbit {
        std::string name;
        std::vector<PointN> points;
    };
    std::vector<Orbit> orbits;

    const Orbit* find(std::string_view name) const;
    std::vector<PointN> all_points() const;
    // Nearest catalog point to p: orbit name and angular distance.
    std::pair<std::string, double> classify(std::span<const double> p,
                                            std::span<const double> center) const;
};

CandidateCatalog candidate_catalog(const VertexSet& vs, const SphereSpec& sphere);

// What the classification theorems say about the extremizers in the regime
// containing lambda.
struct RegimePrediction {
    PolytopeFamily family;
    double lambda = 0.0;
    double intervalLo = 0.0;
    double intervalHi = 0.0;
    std::string predictedMaxOrbit;  // orbit name, or "constant"
    std::string predictedMinOrbit;
    // For lambda < 0 the sum blows up when Gamma is the circumsphere and h=0;
    // bounded in every other configuration.
    bool unboundedOnCircumsphere = false;
};

/// Throws UnsupportedFamily for icosahedron/dodecahedron (no extremum
/// classification exists for them, only constancy results).
RegimePrediction predict_regime(const PolytopeFamily& family, double lambda);

struct ExtremumReport {
    double lambda = 0.0;
    double hOffset = 0.0;
    PointN argmax, argmin;
    double maxValue = 0.0, minValue = 0.0;
    std::string maxLabel, minLabel;
    double maxAngularError = 0.0, minAngularError = 0.0;
    bool converged = true;  // false: some start hit the iteration cap
    bool unboundedMax = false;
    std::uint64_t seed = 0;
    int starts = 0;
};

/// Multistart projected-gradient search over the sphere: ascent and descent
/// from `starts` seeded random points plus every catalog point, Armijo
/// backtracking, renormalization retraction. Deterministic for a fixed seed.
ExtremumReport find_extrema(const VertexSet& vs, const SphereSpec& sphere,
                            const PowerSumParams& p, int starts, std::uint64_t seed);

/// Checks the max/min swap across a polar dual pair (cube/cross-polytope,
/// icosahedron/dodecahedron) on the same sphere: true when the argmax orbit
/// of each sum coincides with the argmin orbit of the other, or both sums
/// are constant. h = 0.
bool verify_duality(const VertexSet& primal, const VertexSet& dual, const SphereSpec& sphere,
                    double lambda);

}  // namespace polysum
