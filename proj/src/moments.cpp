#include "polysum/moments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polysum/sampling.hpp"
#include "polysum/summation.hpp"

namespace polysum {

namespace {

using cplx = std::complex<double>;

constexpr double kRegularTol = 1e-10;
constexpr double kPenaltyResidual = 1e-3;

double max_modulus(const std::vector<cplx>& pts) {
    double m = 0.0;
    for (const auto& a : pts) m = std::fmax(m, std::abs(a));
    return m;
}

std::vector<PointN> to_points(const std::vector<cplx>& pts) {
    std::vector<PointN> out;
    out.reserve(pts.size());
    for (const auto& a : pts) out.push_back({a.real(), a.imag()});
    return out;
}

// Combined "distance from regular about the origin": the largest normalized
// power sum p_1..p_{n-1} and the relative modulus spread.
double regularity_residual(const std::vector<cplx>& pts) {
    const int n = static_cast<int>(pts.size());
    const double mm = max_modulus(pts);
    if (mm == 0.0) return 0.0;

    double res = 0.0;
    cplx pk_acc;
    std::vector<cplx> powers(pts.begin(), pts.end());
    for (int k = 1; k <= n - 1; ++k) {
        pk_acc = cplx(0.0, 0.0);
        for (int i = 0; i < n; ++i) {
            if (k > 1) powers[static_cast<std::size_t>(i)] *= pts[static_cast<std::size_t>(i)];
            pk_acc += powers[static_cast<std::size_t>(i)];
        }
        res = std::fmax(res, std::abs(pk_acc) / (n * pow_int(mm, k)));
    }
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (const auto& a : pts) {
        lo = std::fmin(lo, std::abs(a));
        hi = std::fmax(hi, std::abs(a));
    }
    res = std::fmax(res, (hi - lo) / hi);
    return res;
}

}  // namespace

void validate(const PlanarConfig& cfg) {
    if (cfg.points.size() < 2) throw InvalidParameter("need at least two points");
    if (cfg.circle.dim() != 2) throw DimensionMismatch("circle must be two-dimensional");
    if (!(cfg.circle.radius > 0.0)) throw InvalidParameter("circle radius must be positive");
    for (std::size_t i = 0; i < cfg.points.size(); ++i)
        for (std::size_t j = i + 1; j < cfg.points.size(); ++j)
            if (std::abs(cfg.points[i] - cfg.points[j]) <= 1e-12)
                throw InvalidParameter("configuration points must be distinct");
}

MomentReport power_sums(const PlanarConfig& cfg, int kmax) {
    if (kmax < 1) throw InvalidParameter("kmax must be >= 1");
    validate(cfg);
    const int n = static_cast<int>(cfg.points.size());

    MomentReport rep;
    rep.powerSums.resize(static_cast<std::size_t>(kmax));
    std::vector<cplx> powers(cfg.points.begin(), cfg.points.end());
    for (int k = 1; k <= kmax; ++k) {
        cplx s(0.0, 0.0);
        for (int i = 0; i < n; ++i) {
            if (k > 1) powers[static_cast<std::size_t>(i)] *= cfg.points[static_cast<std::size_t>(i)];
            s += powers[static_cast<std::size_t>(i)];
        }
        rep.powerSums[static_cast<std::size_t>(k - 1)] = s;
    }

    // Newton's identities: k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i.
    rep.elementarySymmetric.resize(static_cast<std::size_t>(kmax));
    std::vector<cplx> e(static_cast<std::size_t>(kmax) + 1);
    e[0] = cplx(1.0, 0.0);
    for (int k = 1; k <= kmax; ++k) {
        cplx acc(0.0, 0.0);
        for (int i = 1; i <= k; ++i) {
            const cplx term = e[static_cast<std::size_t>(k - i)] *
                              rep.powerSums[static_cast<std::size_t>(i - 1)];
            acc += (i % 2 == 1) ? term : -term;
        }
        e[static_cast<std::size_t>(k)] = acc / static_cast<double>(k);
        rep.elementarySymmetric[static_cast<std::size_t>(k - 1)] = e[static_cast<std::size_t>(k)];
    }

    // Independent route to the e_k: expand prod (x - a_i) by convolution and
    // read the signed coefficients. The gap to the Newton-derived values is
    // the reported residual.
    const double mm = std::fmax(max_modulus(cfg.points), 1e-300);
    std::vector<cplx> poly = {cplx(1.0, 0.0)};
    for (const auto& a : cfg.points) {
        std::vector<cplx> next(poly.size() + 1, cplx(0.0, 0.0));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i];
            next[i + 1] -= poly[i] * a;
        }
        poly = std::move(next);
    }
    double res = 0.0;
    double scale = 1.0;  // binomial(n,k) * mm^k caps |e_k|
    for (int k = 1; k <= std::min(kmax, n); ++k) {
        scale *= static_cast<double>(n - k + 1) / static_cast<double>(k) * mm;
        const cplx direct = (k % 2 == 0 ? 1.0 : -1.0) * poly[static_cast<std::size_t>(k)];
        res = std::fmax(res,
                        std::abs(e[static_cast<std::size_t>(k)] - direct) / std::fmax(scale, 1e-300));
    }
    rep.residual = res;

    // Regular about the origin: p_1..p_{n-1} vanish and all moduli agree.
    bool sums_vanish = true;
    if (kmax >= n - 1) {
        for (int k = 1; k <= n - 1; ++k)
            if (std::abs(rep.powerSums[static_cast<std::size_t>(k - 1)]) >=
                kRegularTol * n * pow_int(mm, k))
                sums_vanish = false;
    } else {
        // Not enough power sums were requested to decide; extend internally.
        std::vector<cplx> powers2(cfg.points.begin(), cfg.points.end());
        for (int k = 1; k <= n - 1; ++k) {
            cplx s(0.0, 0.0);
            for (int i = 0; i < n; ++i) {
                if (k > 1)
                    powers2[static_cast<std::size_t>(i)] *= cfg.points[static_cast<std::size_t>(i)];
                s += powers2[static_cast<std::size_t>(i)];
            }
            if (std::abs(s) >= kRegularTol * n * pow_int(mm, k)) sums_vanish = false;
        }
    }
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (const auto& a : cfg.points) {
        lo = std::fmin(lo, std::abs(a));
        hi = std::fmax(hi, std::abs(a));
    }
    rep.powerSumsVanish = sums_vanish;
    rep.equalModuli = hi > 0.0 && (hi - lo) < kRegularTol * hi;
    rep.isRegular = rep.powerSumsVanish && rep.equalModuli;
    return rep;
}

CircleConstancy constancy_even_on_circle(const PlanarConfig& cfg, int k) {
    if (k < 1) throw InvalidParameter("k must be >= 1");
    validate(cfg);
    const std::vector<PointN> pts = to_points(cfg.points);
    const std::vector<double> hs(pts.size(), 0.0);
    const PointN u = {1.0, 0.0}, v = {0.0, 1.0};
    return circle_constancy_even(pts, hs, cfg.circle.center, u, v, cfg.circle.radius, k);
}

RegularityCheck regularity_from_constancy(const PlanarConfig& cfg,
                                          const std::vector<int>& kset) {
    if (kset.empty()) throw InvalidParameter("kset must be nonempty");
    validate(cfg);

    RegularityCheck out;
    out.hypothesisConstant = true;
    for (int k : kset)
        if (!constancy_even_on_circle(cfg, k).isConstant) out.hypothesisConstant = false;

    // The conclusion lives in the frame of the circle: "regular polygon
    // inscribed in a circle concentric to Gamma".
    PlanarConfig centered = cfg;
    const cplx c(cfg.circle.center[0], cfg.circle.center[1]);
    for (auto& a : centered.points) a -= c;
    centered.circle.center = {0.0, 0.0};
    out.conclusionRegular = power_sums(centered, static_cast<int>(centered.points.size()))
                                .isRegular;
    return out;
}

namespace {

// Spread of sum |PA_i|^(2n-2) over the unit circle, probed at the exact
// trigonometric sampling resolution.
double objective_spread(const std::vector<cplx>& pts) {
    const int n = static_cast<int>(pts.size());
    const int k = n - 1;
    const std::vector<PointN> p = to_points(pts);
    const std::vector<double> hs(p.size(), 0.0);
    const PointN c = {0.0, 0.0}, u = {1.0, 0.0}, v = {0.0, 1.0};
    return circle_constancy_even(p, hs, c, u, v, 1.0, k).spread;
}

// Relative non-DC Fourier energy of the restricted sum. Same zero set as the
// spread (a degree-<=k trigonometric polynomial is constant iff its bins
// vanish) but smooth in the configuration, which keeps the descent free of
// the spurious corners a max-min objective has.
double fourier_energy(const std::vector<cplx>& pts) {
    const int n = static_cast<int>(pts.size());
    const int k = n - 1;
    const int n_angles = 2 * k + 2;
    std::vector<double> vals(static_cast<std::size_t>(n_angles));
    for (int t = 0; t < n_angles; ++t) {
        const double theta = 2.0 * 3.14159265358979323846 * t / n_angles;
        const cplx p(std::cos(theta), std::sin(theta));
        double s = 0.0;
        for (const auto& a : pts) s += pow_int(std::norm(p - a), k);
        vals[static_cast<std::size_t>(t)] = s;
    }
    double dc = 0.0;
    for (double x : vals) dc += x;
    double energy = 0.0;
    for (int m = 1; m <= k; ++m) {
        double re = 0.0, im = 0.0;
        for (int t = 0; t < n_angles; ++t) {
            const double ang = 2.0 * 3.14159265358979323846 * m * t / n_angles;
            re += vals[static_cast<std::size_t>(t)] * std::cos(ang);
            im -= vals[static_cast<std::size_t>(t)] * std::sin(ang);
        }
        energy += re * re + im * im;
    }
    return energy / (dc * dc);
}

double penalized_objective(const std::vector<cplx>& pts, bool penalty) {
    const double energy = fourier_energy(pts);
    if (!penalty) return energy;
    const double res = regularity_residual(pts);
    if (res < kPenaltyResidual) return energy + (kPenaltyResidual - res) * 1e6;
    return energy;
}

void normalize_scale(std::vector<cplx>& pts) {
    const double mm = max_modulus(pts);
    if (mm > 0.0)
        for (auto& a : pts) a /= mm;
}

bool distinct(const std::vector<cplx>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (std::abs(pts[i] - pts[j]) <= 1e-9) return false;
    return true;
}

}  // namespace

ConjectureSearchResult conjecture_search(int n, long iterations, std::uint64_t seed,
                                         bool regularityPenalty) {
    if (n < 3) throw InvalidParameter("n must be >= 3");
    if (iterations < 1) throw InvalidParameter("iterations must be positive");

    constexpr long kRestartEvery = 10000;
    constexpr double kCooling = 0.995;

    ConjectureSearchResult result;
    result.iterations = iterations;
    result.seed = seed;
    result.bestSpread = std::numeric_limits<double>::infinity();

    const long restarts = (iterations + kRestartEvery - 1) / kRestartEvery;
    for (long r = 0; r < restarts; ++r) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(r)));
        const long steps = std::min(kRestartEvery, iterations - r * kRestartEvery);

        std::vector<cplx> cur(static_cast<std::size_t>(n));
        do {
            for (auto& a : cur) a = cplx(2.0 * rng.next_double() - 1.0,
                                         2.0 * rng.next_double() - 1.0);
            normalize_scale(cur);
        } while (!distinct(cur));
        double cur_obj = penalized_objective(cur, regularityPenalty);

        std::vector<cplx> best = cur;
        double best_obj = cur_obj;

        // Annealing phase: geometric cooling, move scale tied to temperature.
        double temperature = 1.0;
        double diameter = 2.0;
        for (long s = 0; s < steps; ++s) {
            std::vector<cplx> trial = cur;
            const std::size_t idx = static_cast<std::size_t>(rng.next_u64() %
                                                             static_cast<std::uint64_t>(n));
            const double scale = 0.05 * diameter * std::fmax(temperature, 1e-6);
            trial[idx] += cplx(scale * rng.next_normal(), scale * rng.next_normal());
            normalize_scale(trial);
            if (!distinct(trial)) continue;

            const double trial_obj = penalized_objective(trial, regularityPenalty);
            const double delta = trial_obj - cur_obj;
            const double t_eff = std::fmax(temperature * 0.1 * (best_obj + 1e-12), 1e-300);
            if (delta < 0.0 || rng.next_double() < std::exp(-delta / t_eff)) {
                cur = std::move(trial);
                cur_obj = trial_obj;
                if (cur_obj < best_obj) {
                    best = cur;
                    best_obj = cur_obj;
                }
            }
            temperature *= kCooling;
        }

        // Greedy polish: axis plus seeded random directions with a shrinking
        // step, so each restart's local minimum is resolved well below the
        // annealing noise floor.
        double step = 0.05;
        while (step > 1e-13) {
            bool improved = false;
            for (std::size_t i = 0; i < best.size(); ++i) {
                std::vector<cplx> dirs = {cplx(1.0, 0.0), cplx(-1.0, 0.0), cplx(0.0, 1.0),
                                          cplx(0.0, -1.0)};
                for (int extra = 0; extra < 4; ++extra) {
                    const double t = 6.283185307179586 * rng.next_double();
                    dirs.emplace_back(std::cos(t), std::sin(t));
                }
                for (const cplx d : dirs) {
                    std::vector<cplx> trial = best;
                    trial[i] += d * step;
                    normalize_scale(trial);
                    if (!distinct(trial)) continue;
                    const double obj = penalized_objective(trial, regularityPenalty);
                    if (obj < best_obj) {
                        best = std::move(trial);
                        best_obj = obj;
                        improved = true;
                    }
                }
            }
            if (!improved) step *= 0.5;
        }

        const double raw = objective_spread(best);
        const bool acceptable = !regularityPenalty || regularity_residual(best) >= kPenaltyResidual;
        if (acceptable && raw < result.bestSpread) {
            result.bestSpread = raw;
            result.bestConfig.points = best;
            result.bestConfig.circle = SphereSpec{{0.0, 0.0}, 1.0};
        }
    }
    return result;
}

TetrahedronCheck tetrahedron_from_constancy(const std::array<PointN, 4>& points,
                                            const SphereSpec& sphere) {
    if (sphere.dim() != 3) throw DimensionMismatch("tetrahedron check requires dim 3");
    for (const auto& p : points)
        if (p.size() != 3) throw DimensionMismatch("points must be three-dimensional");
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (dist(points[i], points[j]) <= 1e-12)
                throw InvalidParameter("points must be distinct");

    const std::vector<PointN> pts(points.begin(), points.end());
    const std::vector<double> hs(4, 0.0);

    TetrahedronCheck out;
    out.constantFor2And4 = powered_sum_constant_even(pts, hs, sphere, 1) &&
                           powered_sum_constant_even(pts, hs, sphere, 2);

    std::vector<double> d;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) d.push_back(dist(points[i], points[j]));
    const auto [lo, hi] = std::minmax_element(d.begin(), d.end());
    out.regularTetrahedron = (*hi - *lo) <= 1e-9 * *hi;
    return out;
}

}  // namespace polysum
