#pragma once

#include <cstdint>
#include <vector>

#include "polysum/powersum.hpp"

namespace polysum {

enum class ConstancyVerdict { Constant, NonConstant, Indeterminate };

// Sampled spread of the powered sum over the sphere. A relative spread below
// 1e-9 is constant, above 1e-6 non-constant; anything between is flagged
// Indeterminate and should fail the run.
struct ConstancyReport {
    double lambda = 0.0;
    double spreadAbs = 0.0;
    double spreadRel = 0.0;
    bool isConstant = false;
    ConstancyVerdict verdict = ConstancyVerdict::NonConstant;
    int probeCount = 0;
    std::uint64_t seed = 0;
};

// Theta(lambda) = sum_i a_i * b_i^lambda with all b_i > 0: the number of its
// real roots is at most (#terms - 1), which caps how many exponents can make
// a powered sum constant.
struct ExponentialSum {
    struct Term {
        double a;
        double b;
    };
    std::vector<Term> terms;
};

// Two non-parallel hyperplane orientations plus the offsets at which to
// slice the sphere.
struct SliceFamily {
    PointN normal1;
    PointN normal2;
    std::vector<double> offsets;
};

constexpr double kSpreadConstantTol = 1e-9;
constexpr double kSpreadNonConstantTol = 1e-6;

/// Max-min of the powered sum over `probes` quasi-uniform sphere points plus
/// every candidate-catalog point. Deterministic for a fixed seed regardless
/// of thread count.
ConstancyReport spread_on_sphere(const VertexSet& vs, const SphereSpec& sphere,
                                 const PowerSumParams& p, int probes, std::uint64_t seed);

/// Exact even-power constancy decision (up to roundoff) for an arbitrary
/// point set with per-point squared offsets: restricted to any circle on the
/// sphere the sum is a trigonometric polynomial of degree <= k, so sampling
/// 2k+2 angles and testing the non-DC Fourier bins decides constancy on that
/// circle exactly. Spheres of dimension > 2 are reduced to circles by slicing
/// along two orientations at k+1 offsets per level; the non-DC coefficient of
/// any fixed harmonic is (a parity factor times) a polynomial of degree <= k
/// in the offset, so vanishing on k+1 interior slices forces vanishing on
/// all parallel slices, and two non-parallel families chain every pair of
/// sphere points together.
bool powered_sum_constant_even(const std::vector<PointN>& points,
                               const std::vector<double>& offsets, const SphereSpec& sphere,
                               int k);

/// Fourier-bin test on one explicit circle; also reports the sampled spread.
struct CircleConstancy {
    bool isConstant = false;
    double spread = 0.0;
};
CircleConstancy circle_constancy_even(const std::vector<PointN>& points,
                                      const std::vector<double>& offsets, const PointN& center,
                                      const PointN& u, const PointN& v, double radius, int k);

/// The slice-based decision for a vertex set at even lambda >= 2 over the
/// given slice family. Throws DegenerateSlice when an offset misses the
/// sphere.
bool slice_constancy_even(const VertexSet& vs, const SphereSpec& sphere, int lambdaEven,
                          const SliceFamily& slices);

/// Default slice orientations (face-parallel planes for the Platonic solids,
/// coordinate planes for cube/cross-polytope, vertex-orthogonal planes for
/// the simplex) with lambda/2 + 1 interior offsets.
SliceFamily default_slice_family(const VertexSet& vs, const SphereSpec& sphere, int lambdaEven);

/// All even lambda in [2, lambdaMax] for which the sum is constant on the
/// sphere (full-circle Fourier test in dim 2, slice decision above).
std::vector<int> constancy_set_even(const VertexSet& vs, const SphereSpec& sphere,
                                    int lambdaMax);

/// Even exponents whose constancy is established for this family (as opposed
/// to numerically observed).
std::vector<int> proven_constancy_set(const PolytopeFamily& family);

/// Sign alternations of Theta(lambda) over a uniform grid; a lower bound for
/// the root count.
int count_sign_changes(const ExponentialSum& es, double lambdaLo, double lambdaHi,
                       int gridSize);

/// Root-count cap on the constancy set: builds Theta from the distance
/// spectra at a face-center projection and a vertex projection on the sphere
/// and returns (#distinct terms - 1). Throws DegenerateSpectrum when the two
/// spectra cancel termwise.
int max_constancy_bound(const VertexSet& vs, const SphereSpec& sphere);

}  // namespace polysum
