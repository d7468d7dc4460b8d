#include "polysum/powersum.hpp"

#include <cmath>
#include <vector>

#include "polysum/summation.hpp"

namespace polysum {

namespace {

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (k > n - k) k = n - k;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return r;
}

// (base)^(lambda/2) with an exact-integer fast path for even lambda.
inline double half_power(double base, double lambda, bool even, long long half) {
    if (even) {
        if (half >= 0) return pow_int(base, half);
        return 1.0 / pow_int(base, -half);
    }
    return std::pow(base, 0.5 * lambda);
}

}  // namespace

bool is_even_integer(double lambda) {
    const double nearest = 2.0 * std::round(0.5 * lambda);
    return std::abs(lambda - nearest) < 1e-9;
}

double evaluate(const VertexSet& vs, std::span<const double> m, const PowerSumParams& p) {
    if (static_cast<int>(m.size()) != vs.dim())
        throw DimensionMismatch("evaluation point dimension mismatch");

    const bool even = is_even_integer(p.lambda);
    const long long half = even ? static_cast<long long>(std::llround(0.5 * p.lambda)) : 0;
    const bool singular_regime = p.lambda < 0.0 && p.hOffset == 0.0;
    const double guard = 1e-14 * vs.circumradius;

    thread_local std::vector<double> terms;
    terms.clear();
    terms.reserve(vs.vertices.size());
    for (const auto& a : vs.vertices) {
        const double d2 = dist_sq(m, a);
        if (singular_regime && d2 < guard * guard)
            throw SingularEvaluation("powered sum has a pole at a vertex");
        terms.push_back(half_power(d2 + p.hOffset, p.lambda, even, half));
    }
    return pairwise_sum(terms);
}

double closed_form_even(int n, double bigR, double r, int k) {
    if (n < 3) throw InvalidParameter("closed form requires n >= 3");
    if (!(bigR > 0.0) || !(r > 0.0)) throw InvalidParameter("radii must be positive");
    if (k < 1) throw OutOfRange("closed form requires k >= 1");
    if (k >= n) throw OutOfRange("closed form holds only for k <= n-1");

    const double s = bigR * bigR + r * r;
    const double q = bigR * r;
    double acc = 0.0;
    for (int j = 0; 2 * j <= k; ++j)
        acc += binomial(k, 2 * j) * binomial(2 * j, j) * pow_int(s, k - 2 * j) *
               pow_int(q, 2 * j);
    return static_cast<double>(n) * acc;
}

PointN euclidean_gradient(const VertexSet& vs, std::span<const double> m,
                          const PowerSumParams& p) {
    if (static_cast<int>(m.size()) != vs.dim())
        throw DimensionMismatch("evaluation point dimension mismatch");

    const double lam = p.lambda;
    const bool even2 = is_even_integer(lam - 2.0);  // (lambda/2 - 1) integral
    const long long half2 = even2 ? static_cast<long long>(std::llround(0.5 * lam)) - 1 : 0;
    const bool singular_regime = lam < 0.0 && p.hOffset == 0.0;
    const double guard = 1e-14 * vs.circumradius;

    PointN g = origin(vs.dim());
    for (const auto& a : vs.vertices) {
        const double d2 = dist_sq(m, a);
        if (singular_regime && d2 < guard * guard)
            throw SingularEvaluation("powered sum has a pole at a vertex");
        const double w = lam * half_power(d2 + p.hOffset, lam - 2.0, even2, half2);
        for (std::size_t i = 0; i < g.size(); ++i) g[i] += w * (m[i] - a[i]);
    }
    return g;
}

PointN tangential_gradient(const VertexSet& vs, std::span<const double> m,
                           const SphereSpec& sphere, const PowerSumParams& p) {
    PointN radial = sub(m, sphere.center);
    const double rn = norm(radial);
    if (std::abs(rn - sphere.radius) > 1e-9 * sphere.radius)
        throw InvalidParameter("point is not on the sphere");
    radial = scaled(radial, 1.0 / rn);

    PointN g = euclidean_gradient(vs, m, p);
    const double r_comp = dot(g, radial);
    axpy(-r_comp, radial, g);
    return g;
}

}  // namespace polysum
