import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tribilliard import (
    BilliardConfig,
    QNTransform,
    apply_transform,
    canonicalize,
    epsilon,
    epsilon_multiplicativity_check,
    in_wedge,
    levels_below,
)


def wedge_pairs():
    return st.tuples(st.integers(1, 40), st.integers(1, 40)).map(
        lambda t: (t[0] + 2 * t[1], t[1])   # m = 2n + k >= 2n + 1
    )


def transforms():
    return st.tuples(st.integers(1, 12), st.integers(1, 12)).map(
        lambda t: QNTransform(2 * t[1] + t[0], t[1])
    )


def test_transform_validation():
    with pytest.raises(ValueError):
        QNTransform(4, 2)   # p = 2q not allowed
    with pytest.raises(ValueError):
        QNTransform(3, 0)
    QNTransform(3, 1)


def test_worked_example():
    rep = epsilon_multiplicativity_check(QNTransform(3, 1), 2, 1)
    assert rep["image"] == (5, 1)
    assert rep["factor"] == 7
    assert rep["epsilon_out"] == 21 == 7 * 3
    assert epsilon(5, 1) == 21


def test_threefold_map_is_t21():
    # (2m - n, m - 2n) is the transformation with label (2, 1)... which is not
    # admissible as a QNTransform (p = 2q); check the raw arithmetic instead
    for (m, n) in [(3, 1), (5, 2), (7, 3), (9, 2)]:
        mp, np_ = 2 * m - n, m - 2 * n
        assert epsilon(mp, np_) == 3 * epsilon(m, n)


def test_scale_map_quadruples_energy():
    assert epsilon(6, 2) == 4 * epsilon(3, 1) == 28
    for f in range(1, 7):
        assert epsilon(f * 5, f * 2) == f * f * epsilon(5, 2)


@settings(max_examples=300, deadline=None)
@given(transforms(), wedge_pairs())
def test_epsilon_multiplicativity_exact(t, mn):
    m, n = mn
    rep = epsilon_multiplicativity_check(t, m, n)
    assert rep["epsilon_out"] == rep["factor"] * rep["epsilon_in"]


@settings(max_examples=200, deadline=None)
@given(transforms(), wedge_pairs())
def test_double_application_is_scalar(t, mn):
    m, n = mn
    m1, n1 = t.raw(m, n)
    m2, n2 = t.raw(m1, n1)
    f = epsilon(t.p, t.q)
    assert (m2, n2) == (f * m, f * n)


@settings(max_examples=200, deadline=None)
@given(transforms(), transforms(), wedge_pairs())
def test_composition_commutes_in_energy(t1, t2, mn):
    m, n = mn
    a = canonicalize(*t1.raw(*t2.raw(m, n)))[:2]
    b = canonicalize(*t2.raw(*t1.raw(m, n)))[:2]
    assert epsilon(*a) == epsilon(*b) == epsilon(t1.p, t1.q) * epsilon(t2.p, t2.q) * epsilon(m, n)


def test_composition_orders_identified_by_reflection():
    # raw images differ between orders but one reflection identifies them here
    t1, t2 = QNTransform(3, 1), QNTransform(4, 1)
    a = t1.raw(*t2.raw(2, 1))
    b = t2.raw(*t1.raw(2, 1))
    assert a == (19, 8)
    assert b == (19, 11)
    assert canonicalize(*b)[:2] == a
    assert canonicalize(*b)[2] == ("reflect",)


def test_composition_orders_can_split_index_classes():
    # with a squareful combined factor the two orders can land in genuinely
    # different index classes of the same energy: eps = 931 = 7^2 * 19
    t1, t2 = QNTransform(3, 1), QNTransform(5, 2)
    a = canonicalize(*t1.raw(*t2.raw(3, 1)))[:2]
    b = canonicalize(*t2.raw(*t1.raw(3, 1)))[:2]
    assert (a, b) == ((35, 14), (34, 9))
    assert epsilon(*a) == epsilon(*b) == 931


def test_canonicalize_wedge_fixed_points():
    assert canonicalize(7, 2) == (7, 2, ())
    mc, nc, chain = canonicalize(20, 11)   # outside: m < 2n
    assert (mc, nc) == (20, 9)
    assert chain == ("reflect",)
    assert in_wedge(mc, nc)


def test_canonicalize_preserves_epsilon():
    rng = np.random.default_rng(0)
    for _ in range(500):
        m, n = int(rng.integers(-30, 31)), int(rng.integers(-30, 31))
        if m == 0 and n == 0:
            continue
        mc, nc, _ = canonicalize(m, n)
        assert in_wedge(mc, nc)
        assert epsilon(mc, nc) == epsilon(m, n)


def test_vanishing_image_flagged():
    # the threefold fold applied to a (2n, n) state leaves the physical wedge
    rep = epsilon_multiplicativity_check(QNTransform(5, 1), 2, 1)
    assert not rep["vanishing_image"]
    mc, nc, _ = canonicalize(2 * 2 - 1, 2 - 2)   # (3, 0)
    assert nc == 0


def test_images_appear_in_spectrum():
    eps_set = {lv.epsilon for lv in levels_below(BilliardConfig(), 100000)}
    rng = np.random.default_rng(1)
    for _ in range(200):
        q = int(rng.integers(1, 5))
        p = 2 * q + int(rng.integers(1, 5))
        n = int(rng.integers(1, 8))
        m = 2 * n + int(rng.integers(1, 8))
        mi, ni = apply_transform(QNTransform(p, q), m, n)
        if epsilon(mi, ni) <= 100000 and ni >= 1:
            assert epsilon(mi, ni) in eps_set
