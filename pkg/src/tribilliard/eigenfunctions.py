"""Closed-form eigenfunctions of the triangle billiard.

The billiard has vertices (0, 0), (a/2, sqrt3 a/2), (-a/2, sqrt3 a/2); the
half variant keeps the x >= 0 part.  All three closed forms are sums of
products of one trig factor in x (argument an integer multiple of
2 pi x / 3a) and one sine in y (argument an integer multiple of
2 pi y / sqrt3 a).  The integer multipliers are factored out once per (m, n)
so that large quantum numbers do not lose phase accuracy.

Evaluation is defined for any integer index pair and at any point of the
plane (the trigonometric expression is its own analytic continuation); use
`inside` to mask to the physical domain.
"""

from __future__ import annotations

import math

import numpy as np

from .spectrum import FULL, HALF, MINUS, PLUS, SPECIAL, BilliardConfig, QuantumNumbers

SQRT3 = math.sqrt(3.0)


def _norm_pair(a: float) -> float:
    return math.sqrt(16.0 / (3.0 * SQRT3 * a * a))


def _norm_special(a: float) -> float:
    return math.sqrt(8.0 / (3.0 * SQRT3 * a * a))


def minus_form(m: int, n: int, x, y, a: float = 1.0):
    """Odd-parity closed form, valid for any integer (m, n)."""
    X = 2.0 * np.pi * np.asarray(x, dtype=float) / (3.0 * a)
    Y = 2.0 * np.pi * np.asarray(y, dtype=float) / (SQRT3 * a)
    return _norm_pair(a) * (
        np.sin((2 * m - n) * X) * np.sin(n * Y)
        - np.sin((2 * n - m) * X) * np.sin(m * Y)
        - np.sin((m + n) * X) * np.sin((m - n) * Y)
    )


def plus_form(m: int, n: int, x, y, a: float = 1.0):
    """Even-parity closed form, valid for any integer (m, n)."""
    X = 2.0 * np.pi * np.asarray(x, dtype=float) / (3.0 * a)
    Y = 2.0 * np.pi * np.asarray(y, dtype=float) / (SQRT3 * a)
    return _norm_pair(a) * (
        np.cos((2 * m - n) * X) * np.sin(n * Y)
        - np.cos((2 * n - m) * X) * np.sin(m * Y)
        + np.cos((m + n) * X) * np.sin((m - n) * Y)
    )


def special_form(n: int, x, y, a: float = 1.0):
    """Non-degenerate m = 2n closed form."""
    x = np.asarray(x, dtype=float)
    Y = 2.0 * np.pi * np.asarray(y, dtype=float) / (SQRT3 * a)
    return _norm_special(a) * (
        2.0 * np.cos(2.0 * np.pi * n * x / a) * np.sin(n * Y) - np.sin(2 * n * Y)
    )


def psi(qn: QuantumNumbers, x, y, cfg: BilliardConfig):
    """Normalized eigenfunction of the configured variant at points (x, y).

    Half-variant states are the odd-parity functions scaled by sqrt(2) so
    that they are unit-normalized on the half domain.
    """
    if cfg.variant == HALF and qn.sym != MINUS:
        raise ValueError(f"half variant admits only 'minus' states, got {qn.sym!r}")
    if qn.sym == MINUS:
        v = minus_form(qn.m, qn.n, x, y, cfg.a)
    elif qn.sym == PLUS:
        v = plus_form(qn.m, qn.n, x, y, cfg.a)
    else:
        v = special_form(qn.n, x, y, cfg.a)
    if cfg.variant == HALF:
        v = math.sqrt(2.0) * v
    return v


def psi_special_product(n: int, x, y, cfg: BilliardConfig):
    """Triple-sine product form of the m = 2n states.

    Equals `special_form` pointwise; the factorization makes the three-fold
    rotational symmetry about the centroid explicit.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    a = cfg.a
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    pre = 8.0 * math.sqrt(2.0) / (3.0**0.75 * a)
    return (
        pre
        * np.sin(2.0 * np.pi * n * y / (SQRT3 * a))
        * np.sin(np.pi * n * (y - SQRT3 * x) / (SQRT3 * a))
        * np.sin(np.pi * n * (y + SQRT3 * x) / (SQRT3 * a))
    )


def inside(x, y, cfg: BilliardConfig, tol: float = 0.0):
    """Boolean mask of points inside the configured billiard domain."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    ok = (y >= -tol) & (y <= SQRT3 * cfg.a / 2.0 + tol) & (np.abs(x) <= y / SQRT3 + tol)
    if cfg.variant == HALF:
        ok = ok & (x >= -tol)
    return ok


def centroid(cfg: BilliardConfig) -> tuple[float, float]:
    return (0.0, SQRT3 * cfg.a / 3.0)


def wall_distance(x, y, cfg: BilliardConfig):
    """Distance from interior points to the nearest wall (negative outside).

    Walls: y = sqrt3 x, y = -sqrt3 x, y = sqrt3 a / 2, and for the half
    variant additionally x = 0.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    d = np.minimum((y - SQRT3 * x) / 2.0, (y + SQRT3 * x) / 2.0)
    d = np.minimum(d, SQRT3 * cfg.a / 2.0 - y)
    if cfg.variant == HALF:
        d = np.minimum(d, x)
    return d


def triangle_quadrature(cfg: BilliardConfig, order: int = 64):
    """Tensor Gauss-Legendre nodes/weights over the billiard domain.

    The triangle is integrated as strips y in [0, sqrt3 a/2] with
    x in [-y/sqrt3, y/sqrt3] (half: [0, y/sqrt3]); each strip is mapped to
    [-1, 1] so the rule is exact for smooth integrands at high order.
    Returns flat arrays (x, y, w).
    """
    u, wu = np.polynomial.legendre.leggauss(order)
    ymax = SQRT3 * cfg.a / 2.0
    yv = (u + 1.0) / 2.0 * ymax
    wy = wu * ymax / 2.0
    half_width = yv / SQRT3
    if cfg.variant == FULL:
        xs = np.outer(half_width, u)
        ws = np.outer(wy * half_width, wu)
    else:
        xs = np.outer(half_width, (u + 1.0) / 2.0)
        ws = np.outer(wy * half_width / 2.0, wu)
    ys = np.broadcast_to(yv[:, None], xs.shape)
    return xs.ravel(), ys.ravel().copy(), ws.ravel()


def inner_product(qn1: QuantumNumbers, qn2: QuantumNumbers, cfg: BilliardConfig, order: int = 64) -> float:
    """Quadrature inner product of two eigenfunctions over the domain."""
    x, y, w = triangle_quadrature(cfg, order)
    return float(np.sum(w * psi(qn1, x, y, cfg) * psi(qn2, x, y, cfg)))


def gram_matrix(levels, cfg: BilliardConfig, order: int = 64) -> np.ndarray:
    """Gram matrix of a list of levels (or quantum numbers)."""
    x, y, w = triangle_quadrature(cfg, order)
    qns = [lv.qn if hasattr(lv, "qn") else lv for lv in levels]
    vals = np.array([psi(qn, x, y, cfg) for qn in qns])
    return (vals * w) @ vals.T


def _check_grid(a: float, npts_side: int = 24):
    # deterministic interior lattice, strictly inside the full triangle
    ys = np.linspace(0.06, SQRT3 * a / 2.0 * 0.97, npts_side)
    xs = []
    yy = []
    for y in ys:
        half = y / SQRT3 * 0.95
        x = np.linspace(-half, half, npts_side)
        xs.append(x)
        yy.append(np.full_like(x, y))
    return np.concatenate(xs), np.concatenate(yy)


def check_symmetry_relations(m: int, n: int, cfg: BilliardConfig, f: int = 2) -> dict[str, float]:
    """Max pointwise deviation of the index/parity/fold identities.

    The fold identities are checked in their exact form: the index-doubling
    map (fm, fn) reproduces the (m, n) state of the f-times smaller billiard
    up to a factor 1/f, and the (2m - n, m - 2n) map reproduces the swapped-
    coordinate state of the sqrt(3)-times smaller billiard up to 1/sqrt(3).
    Any value above ~1e-10 indicates a failure.
    """
    if n < 1 or m <= 2 * n:
        raise ValueError("need a two-fold degenerate pair, m > 2n >= 2")
    a = cfg.a
    x, y = _check_grid(a)
    dev = {}

    def _max(u):
        return float(np.max(np.abs(u)))

    dev["parity_minus"] = _max(minus_form(m, n, -x, y, a) + minus_form(m, n, x, y, a))
    dev["parity_plus"] = _max(plus_form(m, n, -x, y, a) - plus_form(m, n, x, y, a))
    dev["parity_special"] = _max(special_form(n, -x, y, a) - special_form(n, x, y, a))
    dev["index_reflection_minus"] = _max(minus_form(m, m - n, x, y, a) + minus_form(m, n, x, y, a))
    dev["index_reflection_plus"] = _max(plus_form(m, m - n, x, y, a) - plus_form(m, n, x, y, a))
    dev["index_swap_minus"] = _max(minus_form(n, m, x, y, a) + minus_form(m, n, x, y, a))
    dev["index_swap_plus"] = _max(plus_form(n, m, x, y, a) + plus_form(m, n, x, y, a))
    dev["special_degenerate_minus"] = _max(minus_form(2 * n, n, x, y, a))
    dev["special_plus_sqrt2"] = _max(
        plus_form(2 * n, n, x, y, a) - math.sqrt(2.0) * special_form(n, x, y, a)
    )
    dev["scale_fold_minus"] = _max(
        f * minus_form(f * m, f * n, x, y, a) - minus_form(m, n, x, y, a / f)
    )
    dev["scale_fold_plus"] = _max(
        f * plus_form(f * m, f * n, x, y, a) - plus_form(m, n, x, y, a / f)
    )
    dev["triple_fold_minus"] = _max(
        SQRT3 * minus_form(2 * m - n, m - 2 * n, x, y, a) - minus_form(m, n, y, x, a / SQRT3)
    )
    return dev
