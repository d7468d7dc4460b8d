#include <cmath>
#include <complex>

#include "doctest.h"
#include "polysum/moments.hpp"
#include "test_util.hpp"

using namespace polysum;
using namespace polysum::testutil;
using cplx = std::complex<double>;

namespace {

PlanarConfig regular_polygon(int n, double radius, double phase, cplx center = {0.0, 0.0},
                             double circle_radius = 1.0) {
    PlanarConfig cfg;
    for (int i = 0; i < n; ++i) {
        const double t = phase + 2.0 * 3.14159265358979323846 * i / n;
        cfg.points.push_back(center + radius * cplx(std::cos(t), std::sin(t)));
    }
    cfg.circle = SphereSpec{{center.real(), center.imag()}, circle_radius};
    return cfg;
}

}  // namespace

TEST_CASE("fourth roots of unity") {
    PlanarConfig cfg;
    cfg.points = {cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1)};
    const MomentReport rep = power_sums(cfg, 4);
    CHECK(std::abs(rep.powerSums[0]) < 1e-14);
    CHECK(std::abs(rep.powerSums[1]) < 1e-14);
    CHECK(std::abs(rep.powerSums[2]) < 1e-14);
    CHECK(std::abs(rep.powerSums[3] - cplx(4.0, 0.0)) < 1e-14);
    CHECK(rep.isRegular);
    CHECK(rep.residual < 1e-10);
}

TEST_CASE("perturbed square is not regular") {
    Rng rng(8);
    PlanarConfig cfg;
    cfg.points = {cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1)};
    for (auto& a : cfg.points)
        a += 1e-3 * cplx(rng.next_normal(), rng.next_normal());
    CHECK_FALSE(power_sums(cfg, 4).isRegular);
}

TEST_CASE("the two regularity criteria are independent") {
    // Vanishing power sums without a common circle: two equilateral triangles
    // at different radii (all p_k = 0 for k=1,2 but moduli differ).
    PlanarConfig mixed;
    for (int i = 0; i < 3; ++i) {
        const double t = 2.0 * 3.14159265358979323846 * i / 3.0;
        mixed.points.push_back(cplx(std::cos(t), std::sin(t)));
        mixed.points.push_back(0.5 * cplx(std::cos(t + 0.3), std::sin(t + 0.3)));
    }
    const MomentReport a = power_sums(mixed, 2);
    CHECK_FALSE(a.equalModuli);
    CHECK_FALSE(a.isRegular);

    // Common circle without vanishing power sums.
    PlanarConfig arc;
    for (double t : {0.1, 0.5, 1.4, 2.2}) arc.points.push_back(cplx(std::cos(t), std::sin(t)));
    const MomentReport b = power_sums(arc, 3);
    CHECK(b.equalModuli);
    CHECK_FALSE(b.powerSumsVanish);
    CHECK_FALSE(b.isRegular);
}

TEST_CASE("rotated and scaled regular polygons are regular") {
    Rng rng(44);
    for (int n = 3; n <= 12; ++n) {
        const PlanarConfig cfg =
            regular_polygon(n, 0.2 + 2.0 * rng.next_double(),
                            6.28 * rng.next_double());
        CHECK(power_sums(cfg, n).isRegular);
    }
}

TEST_CASE("newton residual stays at roundoff") {
    Rng rng(123);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 3 + static_cast<int>(rng.next_u64() % 8);
        PlanarConfig cfg;
        for (int i = 0; i < n; ++i)
            cfg.points.push_back(cplx(2.0 * rng.next_double() - 1.0,
                                      2.0 * rng.next_double() - 1.0));
        const MomentReport rep = power_sums(cfg, n);
        CHECK(rep.residual < 1e-10);
    }
}

TEST_CASE("translation shifts p_1 by n*t") {
    PlanarConfig cfg = regular_polygon(5, 1.0, 0.3);
    const cplx t(0.7, -1.2);
    PlanarConfig moved = cfg;
    for (auto& a : moved.points) a += t;
    const cplx p1 = power_sums(cfg, 1).powerSums[0];
    const cplx p1_moved = power_sums(moved, 1).powerSums[0];
    CHECK(std::abs(p1_moved - (p1 + 5.0 * t)) < 1e-12);
}

TEST_CASE("even-power constancy on circles") {
    const PlanarConfig square = regular_polygon(4, 1.0, 0.0);
    CHECK(constancy_even_on_circle(square, 3).isConstant);
    const CircleConstancy k4 = constancy_even_on_circle(square, 4);
    CHECK_FALSE(k4.isConstant);
    CHECK(k4.spread > 1e-3);

    // Prop-style radius sweep: the triangle k=2 sum is constant on every
    // concentric circle.
    for (double rr : {0.5, 1.0, 2.0}) {
        PlanarConfig tri = regular_polygon(3, 1.0, 0.4);
        tri.circle.radius = rr;
        CHECK(constancy_even_on_circle(tri, 2).isConstant);
    }
}

TEST_CASE("regularity from constancy") {
    Rng rng(2718);
    const PlanarConfig pent = regular_polygon(5, 0.8, 1.1);
    const RegularityCheck rc = regularity_from_constancy(pent, {1, 2, 3, 4});
    CHECK(rc.hypothesisConstant);
    CHECK(rc.conclusionRegular);

    // Single high power (Prop-style k > n/2) still does it.
    const PlanarConfig hex = regular_polygon(6, 1.3, 0.25);
    const RegularityCheck single = regularity_from_constancy(hex, {4});
    CHECK(single.hypothesisConstant);
    CHECK(single.conclusionRegular);

    // Polygon centered away from the origin, circle concentric with it.
    const PlanarConfig shifted = regular_polygon(5, 0.8, 0.9, cplx(2.0, -1.0), 1.4);
    const RegularityCheck rcs = regularity_from_constancy(shifted, {1, 2, 3, 4});
    CHECK(rcs.hypothesisConstant);
    CHECK(rcs.conclusionRegular);

    int hypothesis_hits = 0;
    for (int trial = 0; trial < 200; ++trial) {
        PlanarConfig cfg;
        for (int i = 0; i < 3; ++i)
            cfg.points.push_back(cplx(2.0 * rng.next_double() - 1.0,
                                      2.0 * rng.next_double() - 1.0));
        const RegularityCheck r = regularity_from_constancy(cfg, {2});
        if (r.hypothesisConstant) ++hypothesis_hits;
        CHECK_FALSE(r.conclusionRegular);
    }
    CHECK(hypothesis_hits == 0);
}

TEST_CASE("degenerate configurations are rejected") {
    PlanarConfig cfg;
    cfg.points = {cplx(0.5, 0.5), cplx(0.5, 0.5), cplx(-1.0, 0.0)};
    CHECK_THROWS_AS(power_sums(cfg, 2), InvalidParameter);
}

TEST_CASE("conjecture search keeps a spread floor for n=3") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const ConjectureSearchResult res = conjecture_search(3, 3000, seed);
        CAPTURE(seed);
        CHECK(res.bestSpread > 1e-4);
    }
}

TEST_CASE("conjecture search n=4 is exploratory") {
    const ConjectureSearchResult res = conjecture_search(4, 5000, 7);
    MESSAGE("n=4 best non-regular spread: ", res.bestSpread);
    CHECK(res.bestSpread > 0.0);
    CHECK(res.bestConfig.points.size() == 4);
}

TEST_CASE("conjecture search sanity without the penalty") {
    const ConjectureSearchResult res = conjecture_search(4, 10000, 5, false);
    CHECK(res.bestSpread < 1e-8);
}

TEST_CASE("tetrahedron detection") {
    const VertexSet tetra = generate(PolytopeFamily::simplex(3), 1.0);
    std::array<PointN, 4> pts = {tetra.vertices[0], tetra.vertices[1], tetra.vertices[2],
                                 tetra.vertices[3]};
    const TetrahedronCheck good = tetrahedron_from_constancy(pts, SphereSpec{origin(3), 1.4});
    CHECK(good.constantFor2And4);
    CHECK(good.regularTetrahedron);

    std::array<PointN, 4> doubled = pts;
    for (auto& p : doubled) p = scaled(p, 2.0);
    const TetrahedronCheck scaled_up =
        tetrahedron_from_constancy(doubled, SphereSpec{origin(3), 2.8});
    CHECK(scaled_up.constantFor2And4);
    CHECK(scaled_up.regularTetrahedron);

    Rng rng(31337);
    for (int trial = 0; trial < 25; ++trial) {
        std::array<PointN, 4> random_pts;
        for (auto& p : random_pts)
            p = {rng.next_normal(), rng.next_normal(), rng.next_normal()};
        const TetrahedronCheck r =
            tetrahedron_from_constancy(random_pts, SphereSpec{origin(3), 1.0});
        CHECK_FALSE(r.constantFor2And4);
    }
}
