#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "polysum/constancy.hpp"

namespace polysum {

// n distinct points in the complex plane together with the circle the moving
// point runs on (dim-2 sphere).
struct PlanarConfig {
    std::vector<std::complex<double>> points;
    SphereSpec circle{{0.0, 0.0}, 1.0};
};

// Power sums p_k = sum a_i^k with the elementary symmetric functions derived
// through Newton's identities. The regular-polygon verdict combines two
// separately reported criteria: vanishing p_1..p_{n-1} (regular about the
// origin) and equal moduli (a common circle).
struct MomentReport {
    std::vector<std::complex<double>> powerSums;             // p_1..p_kmax
    std::vector<std::complex<double>> elementarySymmetric;   // e_1..e_kmax
    bool powerSumsVanish = false;
    bool equalModuli = false;
    bool isRegular = false;  // both of the above
    double residual = 0.0;   // Newton-identity reconstruction error, relative
};

struct RegularityCheck {
    bool hypothesisConstant = false;  // the assumed constancy held
    bool conclusionRegular = false;   // the points came out regular
};

struct ConjectureSearchResult {
    double bestSpread = 0.0;
    PlanarConfig bestConfig;
    long iterations = 0;
    std::uint64_t seed = 0;
};

struct TetrahedronCheck {
    bool constantFor2And4 = false;
    bool regularTetrahedron = false;
};

void validate(const PlanarConfig& cfg);

MomentReport power_sums(const PlanarConfig& cfg, int kmax);

/// Constancy of sum |PA_i|^(2k) for P on cfg.circle: exact Fourier-bin test
/// on 2k+2 equispaced probes.
CircleConstancy constancy_even_on_circle(const PlanarConfig& cfg, int k);

/// Verifies the constancy hypothesis for every k in kset, then tests the
/// regular-polygon conclusion (points recentered on the circle's center).
/// Both halves are reported so implications can be property-tested.
RegularityCheck regularity_from_constancy(const PlanarConfig& cfg,
                                          const std::vector<int>& kset);

/// Simulated-annealing minimization of the spread of sum |PA_i|^(2n-2) over
/// n-point configurations with max modulus normalized to 1, P on the unit
/// circle. Near-regular configurations (power-sum residual < 1e-3) are
/// penalized away unless `regularityPenalty` is false. A spread floor across
/// seeds is evidence that only the regular polygon achieves constancy.
ConjectureSearchResult conjecture_search(int n, long iterations, std::uint64_t seed,
                                         bool regularityPenalty = true);

/// For 4 points in R^3: constancy of the powered sum on the sphere for
/// lambda = 2 and 4 (exact slice test) and equality of all six pairwise
/// distances.
TetrahedronCheck tetrahedron_from_constancy(const std::array<PointN, 4>& points,
                                            const SphereSpec& sphere);

}  // namespace polysum
