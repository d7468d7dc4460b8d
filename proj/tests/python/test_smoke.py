"""Smoke tests for the polysum extension module."""

import math

import pytest

import polysum


def test_generate_square():
    out = polysum.generate("ngon", 4)
    assert out["dim"] == 2
    assert len(out["vertices"]) == 4
    for v in out["vertices"]:
        assert math.hypot(*v) == pytest.approx(1.0, abs=1e-12)


def test_generate_cross_polytope():
    out = polysum.generate("crosspolytope", 3)
    assert len(out["vertices"]) == 6


def test_evaluate_square_vertex():
    assert polysum.evaluate("ngon", 4, [1.0, 0.0], lam=2.0) == pytest.approx(8.0, abs=1e-12)
    assert polysum.evaluate("ngon", 4, [1.0, 0.0], lam=4.0) == pytest.approx(24.0, abs=1e-12)


def test_singular_evaluation_raises():
    with pytest.raises(polysum.SingularEvaluation):
        polysum.evaluate("ngon", 4, [1.0, 0.0], lam=-1.0)


def test_closed_form_anchors():
    assert polysum.closed_form_even(4, 1.0, 1.0, 2) == 24.0
    assert polysum.closed_form_even(4, 1.0, 1.0, 3) == 80.0


def test_constancy_set_pentagon():
    assert polysum.constancy_set_even("ngon", 5, 12) == [2, 4, 6, 8]


def test_constancy_set_dodecahedron():
    assert polysum.constancy_set_even("dodecahedron", 3, 14) == [2, 4, 6, 8, 10]


def test_spread_is_flat_inside_the_set():
    rep = polysum.spread_on_sphere("icosahedron", 3, lam=6.0, probes=2000, seed=1)
    assert rep["isConstant"]
    assert rep["spreadRel"] < 1e-10


def test_find_extrema_labels():
    rep = polysum.find_extrema("hypercube", 3, lam=7.0, sphere_radius=1.3, seed=2)
    assert rep["maxLabel"] == "vertexProjections"
    assert rep["minLabel"] == "faceCenterProjections"
    assert rep["converged"]


def test_predict_matches_search():
    pred = polysum.predict_regime("simplex", 4, 5.0)
    rep = polysum.find_extrema("simplex", 4, lam=5.0, h=0.1, seed=3)
    assert rep["maxLabel"] == pred["predictedMaxOrbit"]
    assert rep["minLabel"] == pred["predictedMinOrbit"]


def test_duality():
    assert polysum.verify_duality("hypercube", 3, lam=-1.0)


def test_grid_extrema_agrees():
    grid = polysum.grid_extrema("crosspolytope", 3, lam=3.0, sphere_radius=1.5,
                                grid_size=50000, seed=4)
    rep = polysum.find_extrema("crosspolytope", 3, lam=3.0, sphere_radius=1.5, seed=4)
    assert grid["maxValue"] == pytest.approx(rep["maxValue"], rel=1e-7)


def test_power_sums_roots_of_unity():
    rep = polysum.power_sums([1 + 0j, 1j, -1 + 0j, -1j], 4)
    assert rep["isRegular"]
    assert abs(rep["powerSums"][0]) < 1e-14
    assert rep["powerSums"][3] == pytest.approx(4.0)


def test_regularity_from_constancy():
    pts = [complex(math.cos(2 * math.pi * i / 5), math.sin(2 * math.pi * i / 5))
           for i in range(5)]
    hyp, concl = polysum.regularity_from_constancy(pts, [1, 2, 3, 4])
    assert hyp and concl


def test_count_sign_changes():
    assert polysum.count_sign_changes([(1.0, 1.0), (-1.0, 2.0)], -5.0, 5.0) == 1


def test_numpy_cross_check():
    """Independent numpy route: same vertices, fresh evaluation stack."""
    np = pytest.importorskip("numpy")
    out = polysum.generate("dodecahedron", 3)
    vertices = np.array(out["vertices"])
    rng = np.random.default_rng(0)
    probes = rng.normal(size=(4000, 3))
    probes /= np.linalg.norm(probes, axis=1, keepdims=True)
    d2 = ((probes[:, None, :] - vertices[None, :, :]) ** 2).sum(-1)
    for lam, expect_constant in [(10, True), (12, False)]:
        vals = (d2 ** (lam / 2)).sum(axis=1)
        rel = (vals.max() - vals.min()) / vals.mean()
        assert (rel < 1e-10) == expect_constant

    value = polysum.evaluate("dodecahedron", 3, list(probes[0]), lam=5.0)
    assert (d2[0] ** 2.5).sum() == pytest.approx(value, rel=1e-12)
