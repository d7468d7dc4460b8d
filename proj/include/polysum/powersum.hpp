#pragma once

#include <span>

#include "polysum/polytopes.hpp"

namespace polysum {

// Exponent and offset of the objective  sum_i (|MA_i|^2 + h)^(lambda/2).
struct PowerSumParams {
    double lambda = 2.0;
    double hOffset = 0.0;
};

// True when lambda is an even integer (within 1e-9).
bool is_even_integer(double lambda);

/// The powered distance sum at m. Terms are combined by pairwise summation in
/// vertex order. Throws SingularEvaluation when lambda < 0, h = 0 and m lies
/// within 1e-14 * r of a vertex.
double evaluate(const VertexSet& vs, std::span<const double> m, const PowerSumParams& p);

/// Closed form of the even-power sum over a regular n-gon:
///   sum_i |PA_i|^(2k) = n * sum_j C(k,2j) C(2j,j) (R^2+r^2)^(k-2j) (Rr)^(2j)
/// for P at distance R from the center, circumradius r, valid for
/// 1 <= k <= n-1 (the sum stops being position-independent at k = n).
double closed_form_even(int n, double bigR, double r, int k);

/// Euclidean gradient of evaluate at m.
PointN euclidean_gradient(const VertexSet& vs, std::span<const double> m,
                          const PowerSumParams& p);

/// Gradient projected onto the tangent space of `sphere` at m. Requires m on
/// the sphere to 1e-9 relative.
PointN tangential_gradient(const VertexSet& vs, std::span<const double> m,
                           const SphereSpec& sphere, const PowerSumParams& p);

}  // namespace polysum
