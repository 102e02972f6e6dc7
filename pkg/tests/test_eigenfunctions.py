import math

import numpy as np
import pytest

from tribilliard import (
    FULL,
    HALF,
    MINUS,
    PLUS,
    SPECIAL,
    BilliardConfig,
    QuantumNumbers,
    centroid,
    check_symmetry_relations,
    enumerate_levels,
    gram_matrix,
    inner_product,
    inside,
    psi,
    psi_special_product,
    triangle_quadrature,
)
from tribilliard.eigenfunctions import SQRT3, minus_form, plus_form, special_form

CFG = BilliardConfig()
CFG_HALF = BilliardConfig(variant=HALF)


def interior_points(n=400, seed=7):
    rng = np.random.default_rng(seed)
    y = rng.uniform(0.02, SQRT3 / 2 - 0.02, n)
    x = rng.uniform(-1.0, 1.0, n) * y / SQRT3 * 0.98
    return x, y


def wall_points(n=100):
    t = np.linspace(0.01, 0.99, n)
    top = (np.linspace(-0.49, 0.49, n), np.full(n, SQRT3 / 2))
    right = (t * 0.5, t * SQRT3 / 2)
    left = (-t * 0.5, t * SQRT3 / 2)
    return [top, right, left]


def test_minus_vanishes_on_bisector():
    y = np.linspace(0.0, SQRT3 / 2, 57)
    v = psi(QuantumNumbers(5, 2, MINUS), np.zeros_like(y), y, CFG)
    assert np.max(np.abs(v)) < 1e-12


@pytest.mark.parametrize("qn", [
    QuantumNumbers(2, 1, SPECIAL),
    QuantumNumbers(3, 1, MINUS),
    QuantumNumbers(3, 1, PLUS),
    QuantumNumbers(7, 2, MINUS),
    QuantumNumbers(40, 19, PLUS),
    QuantumNumbers(40, 20, SPECIAL),
])
def test_dirichlet_boundary(qn):
    for x, y in wall_points():
        assert np.max(np.abs(psi(qn, x, y, CFG))) < 1e-10


def test_parity_relations():
    x, y = interior_points()
    assert np.allclose(minus_form(7, 3, -x, y), -minus_form(7, 3, x, y), atol=1e-13)
    assert np.allclose(plus_form(7, 3, -x, y), plus_form(7, 3, x, y), atol=1e-13)
    assert np.allclose(special_form(3, -x, y), special_form(3, x, y), atol=1e-13)


def test_special_plus_is_sqrt2_times_special():
    x, y = interior_points()
    for n in (1, 2, 5):
        lhs = plus_form(2 * n, n, x, y)
        rhs = math.sqrt(2.0) * special_form(n, x, y)
        assert np.max(np.abs(lhs - rhs)) < 1e-12


def test_special_minus_vanishes_identically():
    x, y = interior_points()
    for n in (1, 3, 8):
        assert np.max(np.abs(minus_form(2 * n, n, x, y))) < 1e-12


def test_product_form_equals_special_form():
    rng = np.random.default_rng(11)
    y = rng.uniform(0.02, SQRT3 / 2 - 0.02, 1000)
    x = rng.uniform(-1.0, 1.0, 1000) * y / SQRT3 * 0.98
    for n in (1, 2, 4, 9):
        a = psi(QuantumNumbers(2 * n, n, SPECIAL), x, y, CFG)
        b = psi_special_product(n, x, y, CFG)
        scale = np.max(np.abs(a))
        assert np.max(np.abs(a - b)) < 1e-12 * scale


def test_product_form_c3_invariance():
    x, y = interior_points(200)
    cx, cy = centroid(CFG)
    c, s = math.cos(2 * math.pi / 3), math.sin(2 * math.pi / 3)
    xr = cx + c * (x - cx) - s * (y - cy)
    yr = cy + s * (x - cx) + c * (y - cy)
    for n in (1, 3):
        v0 = psi_special_product(n, x, y, CFG)
        v1 = psi_special_product(n, xr, yr, CFG)
        assert np.max(np.abs(v0 - v1)) < 1e-11


def test_product_form_centroid_regression():
    # n = 1 value at the centroid is sqrt(2) * 3^(3/4), frozen from the closed form
    cx, cy = centroid(CFG)
    val = float(psi_special_product(1, cx, cy, CFG))
    assert val == pytest.approx(3.2237097954706081, rel=1e-13)
    assert val == pytest.approx(math.sqrt(2.0) * 3.0 ** 0.75, rel=1e-13)


def test_ground_state_normalization():
    assert inner_product(QuantumNumbers(2, 1, SPECIAL), QuantumNumbers(2, 1, SPECIAL), CFG) \
        == pytest.approx(1.0, abs=1e-8)


def test_opposite_parity_orthogonality():
    v = inner_product(QuantumNumbers(3, 1, MINUS), QuantumNumbers(3, 1, PLUS), CFG)
    assert abs(v) < 1e-12


def test_gram_matrix_first_20_states():
    levels = enumerate_levels(CFG, 20)
    G = gram_matrix(levels, CFG, order=64)
    assert np.max(np.abs(G - np.eye(20))) < 1e-8


def test_half_variant_normalization():
    for qn in (QuantumNumbers(3, 1, MINUS), QuantumNumbers(5, 2, MINUS)):
        assert inner_product(qn, qn, CFG_HALF) == pytest.approx(1.0, abs=1e-8)


def test_quadrature_area():
    _, _, w = triangle_quadrature(CFG, 32)
    assert w.sum() == pytest.approx(CFG.area, rel=1e-12)
    _, _, wh = triangle_quadrature(CFG_HALF, 32)
    assert wh.sum() == pytest.approx(CFG_HALF.area, rel=1e-12)


def test_symmetry_relations_report():
    for (m, n) in [(3, 1), (5, 2), (7, 3)]:
        dev = check_symmetry_relations(m, n, CFG)
        worst = max(dev.values())
        assert worst < 1e-10, f"({m},{n}): {dev}"


def test_fold_relation_examples():
    # doubling: 2 * psi_(6,2)(x, y; a) == psi_(3,1)(x, y; a/2)
    x, y = interior_points(300)
    assert np.max(np.abs(2 * minus_form(6, 2, x, y, 1.0) - minus_form(3, 1, x, y, 0.5))) < 1e-12
    # three-fold: sqrt3 * psi_(5,1)(x, y; a) == psi_(3,1)(y, x; a/sqrt3)
    lhs = SQRT3 * minus_form(5, 1, x, y, 1.0)
    rhs = minus_form(3, 1, y, x, 1.0 / SQRT3)
    assert np.max(np.abs(lhs - rhs)) < 1e-12


def test_index_reflection_example():
    x, y = interior_points(300)
    assert np.max(np.abs(minus_form(5, 3, x, y) + minus_form(5, 2, x, y))) < 1e-12


def test_schroedinger_residual():
    # 8th-order central difference laplacian at interior points
    h = 1e-3
    c = np.array([-1 / 560, 8 / 315, -1 / 5, 8 / 5, -205 / 72, 8 / 5, -1 / 5, 8 / 315, -1 / 560])
    offs = np.arange(-4, 5)
    rng = np.random.default_rng(3)
    y = rng.uniform(0.15, SQRT3 / 2 - 0.15, 40)
    x = rng.uniform(-1.0, 1.0, 40) * (y / SQRT3 - 0.15)
    for qn in (QuantumNumbers(3, 1, MINUS), QuantumNumbers(9, 4, PLUS), QuantumNumbers(6, 3, SPECIAL)):
        v = psi(qn, x, y, CFG)
        lap = np.zeros_like(v)
        for ci, oi in zip(c, offs):
            lap += ci * (psi(qn, x + oi * h, y, CFG) + psi(qn, x, y + oi * h, CFG))
        lap /= h * h
        k2 = (4 * math.pi / 3) ** 2 * qn.epsilon
        resid = np.abs(-lap - k2 * v) / (k2 * np.max(np.abs(v)))
        assert np.max(resid) < 1e-6


def test_inside_mask():
    assert inside(0.0, 0.5, CFG)
    assert not inside(0.4, 0.1, CFG)
    assert not inside(-0.1, 0.5, CFG_HALF)
    assert inside(0.1, 0.5, CFG_HALF)
