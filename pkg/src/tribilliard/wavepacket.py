"""Gaussian wave packets in the triangle billiard: expansion, evolution, revivals.

A packet is a product of 1D Gaussians, per axis

    (1 / sqrt(b sqrt(pi))) exp(i p0 (x - x0) / hbar) exp(-(x - x0)^2 / 2 b^2),

with width Delta x = b / sqrt2 per axis.  Because every eigenfunction term is
a product of a trig factor in x and a sine in y, the expansion coefficients
reduce to closed-form Gaussian-times-trig integrals once the integration is
extended from the triangle to the whole plane, which is accurate to an
exponentially small wall-clipping error for packets a few widths away from
every wall.

The dimensionless energies eps are integers, so the autocorrelation
A(t) = sum |a|^2 exp(+i E t / hbar) is exactly periodic with the revival
time T_rev = 9 mu a^2 / (4 hbar pi) = 2 pi hbar / E0, for every packet.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field, replace

import numpy as np

from .eigenfunctions import SQRT3, wall_distance
from .spectrum import (
    FULL,
    HALF,
    MINUS,
    PLUS,
    SPECIAL,
    BilliardConfig,
    _wedge_pairs,
    k_of_epsilon,
)

_SYM_CODE = {MINUS: 0, PLUS: 1, SPECIAL: 2}


def revival_time(cfg: BilliardConfig) -> float:
    """Common revival time 9 mu a^2 / (4 hbar pi)."""
    return 9.0 * cfg.mu * cfg.a**2 / (4.0 * cfg.hbar * math.pi)


@dataclass(frozen=True)
class GaussianPacket:
    x0: float
    y0: float
    p0x: float
    p0y: float
    b: float

    def __post_init__(self):
        if self.b <= 0:
            raise ValueError("width parameter b must be positive")

    @classmethod
    def from_polar(cls, x0, y0, p0, theta_deg, b) -> "GaussianPacket":
        th = math.radians(theta_deg)
        return cls(x0, y0, p0 * math.cos(th), p0 * math.sin(th), b)

    @property
    def sigma_x(self) -> float:
        """Per-axis position spread Delta x0 = b / sqrt2."""
        return self.b / math.sqrt(2.0)

    @property
    def p0(self) -> float:
        return math.hypot(self.p0x, self.p0y)

    @property
    def theta_deg(self) -> float:
        return math.degrees(math.atan2(self.p0y, self.p0x))

    def wall_clearance(self, cfg: BilliardConfig) -> float:
        return float(wall_distance(self.x0, self.y0, cfg))


def gaussian_trig_integral(kind: str, c, x0: float, p0: float, b: float, hbar: float = 1.0):
    """Closed form of integral exp(i p0 (x-x0)/hbar) exp(-(x-x0)^2/2b^2) trig(c x) dx.

    kind is 'cos' or 'sin'; c is the trig wavenumber (may be an array).  The
    two plane-wave halves of the trig factor give

        (b sqrt(2 pi) / 2) [ e^{+i c x0} e^{-b^2 (c + p0/hbar)^2 / 2}
                            +/- e^{-i c x0} e^{-b^2 (-c + p0/hbar)^2 / 2} ],

    with '+' and a real prefactor for cos, '-' and a 1/i prefactor for sin.
    """
    c = np.asarray(c, dtype=float)
    pre = b * math.sqrt(2.0 * math.pi) / 2.0
    plus = np.exp(1j * c * x0) * np.exp(-(b**2) * (c + p0 / hbar) ** 2 / 2.0)
    minus = np.exp(-1j * c * x0) * np.exp(-(b**2) * (-c + p0 / hbar) ** 2 / 2.0)
    if kind == "cos":
        return pre * (plus + minus)
    if kind == "sin":
        return pre * (plus - minus) / 1j
    raise ValueError(f"kind must be 'cos' or 'sin', got {kind!r}")


@dataclass
class ExpansionTable:
    """Spectral fingerprint of a packet: coefficient per (m, n, sym) level."""

    m: np.ndarray
    n: np.ndarray
    sym: np.ndarray          # int codes, see _SYM_CODE
    eps: np.ndarray
    coeff: np.ndarray
    variant: str
    packet: GaussianPacket
    eps_max: int

    @property
    def weights(self) -> np.ndarray:
        return np.abs(self.coeff) ** 2

    @property
    def captured_norm(self) -> float:
        return float(np.sum(self.weights))

    def __len__(self) -> int:
        return len(self.coeff)

    def coefficient(self, m: int, n: int, sym: str) -> complex:
        code = _SYM_CODE[sym]
        hit = np.flatnonzero((self.m == m) & (self.n == n) & (self.sym == code))
        if len(hit) != 1:
            raise KeyError(f"no coefficient for ({m}, {n}, {sym})")
        return complex(self.coeff[hit[0]])

    def as_dict(self) -> dict:
        names = {v: k for k, v in _SYM_CODE.items()}
        return {
            (int(mm), int(nn), names[int(ss)]): complex(cc)
            for mm, nn, ss, cc in zip(self.m, self.n, self.sym, self.coeff)
        }

    def prune(self, tail: float = 1e-12) -> "ExpansionTable":
        """Drop the smallest coefficients carrying at most `tail` of the weight.

        Any subset of the integer-eps support keeps the exact revival
        arithmetic; pruning only biases |A| by at most `tail`.
        """
        w = self.weights
        order = np.argsort(w)
        cum = np.cumsum(w[order])
        keep = np.sort(order[cum > tail * w.sum()])
        return replace(
            self,
            m=self.m[keep], n=self.n[keep], sym=self.sym[keep],
            eps=self.eps[keep], coeff=self.coeff[keep],
        )


def default_eps_max(packet: GaussianPacket, cfg: BilliardConfig) -> int:
    """Truncation from k <= |p0|/hbar + 10/b (coefficient tails below e^-50)."""
    k_max = packet.p0 / cfg.hbar + 10.0 / packet.b
    return int((3.0 * k_max * cfg.a / (4.0 * math.pi)) ** 2) + 1


def expand(packet: GaussianPacket, cfg: BilliardConfig, eps_max: int | None = None) -> ExpansionTable:
    """Expansion coefficients of the packet over all levels with eps <= eps_max.

    Each coefficient is the all-space overlap integral, one product of x- and
    y-axis `gaussian_trig_integral` values per trig term of the closed-form
    eigenfunction.  Warns (without refusing) when the packet sits closer than
    3 Delta x0 to a wall or when the captured norm falls short by more than
    1e-3.
    """
    if eps_max is None:
        eps_max = default_eps_max(packet, cfg)
    clear = packet.wall_clearance(cfg)
    if clear < 3.0 * packet.sigma_x:
        warnings.warn(
            f"packet center only {clear:.4g} from a wall "
            f"(< 3 Delta x0 = {3.0 * packet.sigma_x:.4g}); expansion will lose norm",
            stacklevel=2,
        )
    a = cfg.a
    m, n = _wedge_pairs(eps_max)
    eps = m * m + n * n - m * n

    def ix(kind, c):
        return gaussian_trig_integral(kind, c, packet.x0, packet.p0x, packet.b, cfg.hbar)

    def iy(kind, c):
        return gaussian_trig_integral(kind, c, packet.y0, packet.p0y, packet.b, cfg.hbar)

    # trig wavenumbers of the three terms (x: multiples of 2pi/3a, y: of 2pi/sqrt3 a)
    c1x = 2.0 * np.pi * (2 * m - n) / (3.0 * a)
    c1y = 2.0 * np.pi * n / (SQRT3 * a)
    c2x = 2.0 * np.pi * (2 * n - m) / (3.0 * a)
    c2y = 2.0 * np.pi * m / (SQRT3 * a)
    c3x = 2.0 * np.pi * (m + n) / (3.0 * a)
    c3y = 2.0 * np.pi * (m - n) / (SQRT3 * a)

    packet_norm = 1.0 / (packet.b * math.sqrt(math.pi))
    norm_pair = math.sqrt(16.0 / (3.0 * SQRT3 * a * a))
    norm_special = math.sqrt(8.0 / (3.0 * SQRT3 * a * a))
    if cfg.variant == HALF:
        norm_pair *= math.sqrt(2.0)

    a_minus = norm_pair * packet_norm * (
        ix("sin", c1x) * iy("sin", c1y)
        - ix("sin", c2x) * iy("sin", c2y)
        - ix("sin", c3x) * iy("sin", c3y)
    )
    parts = []
    special = m == 2 * n
    regular = ~special
    if cfg.variant == FULL:
        a_plus = norm_pair * packet_norm * (
            ix("cos", c1x) * iy("sin", c1y)
            - ix("cos", c2x) * iy("sin", c2y)
            + ix("cos", c3x) * iy("sin", c3y)
        )
        a_spec = norm_special * packet_norm * (
            2.0 * ix("cos", 2.0 * np.pi * n / a) * iy("sin", c1y)
            - ix("cos", np.zeros_like(c1x)) * iy("sin", 2.0 * c1y)
        )
        parts = [
            (m[special], n[special], SPECIAL, a_spec[special]),
            (m[regular], n[regular], MINUS, a_minus[regular]),
            (m[regular], n[regular], PLUS, a_plus[regular]),
        ]
    else:
        parts = [(m[regular], n[regular], MINUS, a_minus[regular])]

    mm = np.concatenate([p[0] for p in parts])
    nn = np.concatenate([p[1] for p in parts])
    sym = np.concatenate([np.full(len(p[0]), _SYM_CODE[p[2]], dtype=np.int8) for p in parts])
    coeff = np.concatenate([p[3] for p in parts])
    ee = mm * mm + nn * nn - mm * nn
    order = np.lexsort((sym, nn, mm, ee))
    table = ExpansionTable(
        m=mm[order], n=nn[order], sym=sym[order], eps=ee[order], coeff=coeff[order],
        variant=cfg.variant, packet=packet, eps_max=eps_max,
    )
    deficit = 1.0 - table.captured_norm
    if deficit > 1e-3:
        warnings.warn(
            f"captured norm {table.captured_norm:.6f} is short by {deficit:.2e} "
            f"(packet too close to a wall or truncation too tight)",
            stacklevel=2,
        )
    return table


def energy_expectation(table: ExpansionTable, cfg: BilliardConfig) -> float:
    """<E> = sum |a|^2 E(m, n); equals (p0^2 + hbar^2/b^2) / 2 mu for valid packets."""
    return float(np.sum(table.weights * table.eps) * cfg.energy_unit)


def packet_energy(packet: GaussianPacket, cfg: BilliardConfig) -> float:
    """Closed-form packet energy (p0x^2 + p0y^2 + hbar^2 / b^2) / 2 mu."""
    return (packet.p0x**2 + packet.p0y**2 + (cfg.hbar / packet.b) ** 2) / (2.0 * cfg.mu)


@dataclass
class AutocorrSeries:
    t: np.ndarray
    A: np.ndarray
    tau: float | None                      # a / v0, None for p0 = 0
    t_rev: float
    markers: tuple[tuple[float, float], ...] = ()   # (theta_deg, T_po) overlay

    @property
    def abs_A(self) -> np.ndarray:
        return np.abs(self.A)


def autocorrelation_at(table: ExpansionTable, cfg: BilliardConfig, times) -> np.ndarray:
    """A(t) = sum |a|^2 exp(+i E t / hbar) at arbitrary times."""
    t = np.atleast_1d(np.asarray(times, dtype=float))
    w = table.weights
    rate = cfg.energy_unit / cfg.hbar
    out = np.empty(t.shape, dtype=complex)
    chunk = max(1, int(4e6 / max(len(w), 1)))
    for i in range(0, len(t), chunk):
        ph = np.exp(1j * rate * np.outer(t[i : i + chunk], table.eps))
        out[i : i + chunk] = ph @ w
    return out


def autocorrelation(
    table: ExpansionTable,
    cfg: BilliardConfig,
    t_grid,
    markers: tuple[tuple[float, float], ...] = (),
) -> AutocorrSeries:
    """Autocorrelation series on a time grid, with optional closed-orbit markers."""
    t = np.asarray(t_grid, dtype=float)
    v0 = table.packet.p0 / cfg.mu
    return AutocorrSeries(
        t=t,
        A=autocorrelation_at(table, cfg, t),
        tau=(cfg.a / v0 if v0 > 0 else None),
        t_rev=revival_time(cfg),
        markers=tuple(markers),
    )


@dataclass
class TimescaleSet:
    t_rev: float
    t_cl_m: float | None = None       # |2 pi hbar / dE/dm|
    t_cl_n: float | None = None       # absent when m = 2n
    t_cl_po: float | None = None      # L(p, q) / v0
    t0: float | None = None           # spreading time mu b^2 / hbar
    v0: float | None = None
    m_central: float | None = None
    n_central: float | None = None


def timescales_for_qn(cfg: BilliardConfig, m: float, n: float) -> TimescaleSet:
    """Classical periods of the two index directions at (m, n), plus T_rev."""
    base = 9.0 * cfg.mu * cfg.a**2 / (4.0 * cfg.hbar * math.pi)
    t_m = base / abs(2.0 * m - n) if 2.0 * m != n else None
    t_n = base / abs(2.0 * n - m) if 2.0 * n != m else None
    return TimescaleSet(t_rev=revival_time(cfg), t_cl_m=t_m, t_cl_n=t_n)


def timescales_for_packet(
    cfg: BilliardConfig,
    packet: GaussianPacket,
    p: int | None = None,
    q: int | None = None,
) -> TimescaleSet:
    """Packet timescales; with a closed-orbit label (p, q) also the orbit period.

    The central indices follow from matching the packet's kinetic energy to
    the spectrum along the orbit direction:

        m, n = sqrt3 (mu v0 a / 4 pi hbar) (2p + q, 2q + p) / sqrt(p^2+pq+q^2),

    under which p * t_cl_m = q * t_cl_n = L(p, q) / v0 exactly.
    """
    v0 = packet.p0 / cfg.mu
    t0 = cfg.mu * packet.b**2 / cfg.hbar
    ts = TimescaleSet(t_rev=revival_time(cfg), t0=t0, v0=v0)
    if p is None or q is None:
        return ts
    if v0 <= 0:
        return ts
    S = p * p + p * q + q * q
    K = SQRT3 * (cfg.mu * v0 * cfg.a / (4.0 * math.pi * cfg.hbar)) / math.sqrt(S)
    mc, nc = K * (2 * p + q), K * (2 * q + p)
    sub = timescales_for_qn(cfg, mc, nc)
    ts.m_central, ts.n_central = mc, nc
    ts.t_cl_m, ts.t_cl_n = sub.t_cl_m, sub.t_cl_n
    ts.t_cl_po = cfg.a * SQRT3 * math.sqrt(S) / v0
    return ts


def revival_scan(
    table: ExpansionTable,
    cfg: BilliardConfig,
    fractions=(1, 4, 9),
    threshold: float = 0.9,
) -> dict:
    """|A| at every multiple k T_rev / f within one revival, per fraction f.

    A fraction is flagged revived when every such sample reaches
    threshold * |A(0)|.
    """
    T = revival_time(cfg)
    A0 = float(np.abs(autocorrelation_at(table, cfg, [0.0]))[0])
    report = {"abs_A0": A0, "t_rev": T, "threshold": threshold, "fractions": {}}
    for f in fractions:
        times = [k * T / f for k in range(1, f + 1)]
        vals = np.abs(autocorrelation_at(table, cfg, times))
        report["fractions"][int(f)] = {
            "times": [float(t) for t in times],
            "abs_A": [float(v) for v in vals],
            "revived": bool(np.all(vals >= threshold * A0)),
        }
    return report


def _grid_matrices(table: ExpansionTable, cfg: BilliardConfig, t: float):
    """Factorized coefficient matrices C[kind][mu, nu] for product-grid evaluation.

    Every eigenfunction term is trig(mu * 2 pi x / 3a) * sin(nu * 2 pi y / sqrt3 a)
    with integer mu, nu, so the evolved field on a product grid is two dense
    matrix products regardless of how many levels contribute.
    """
    a = cfg.a
    rate = cfg.energy_unit / cfg.hbar
    amp = table.coeff * np.exp(-1j * rate * table.eps * t)
    norm_pair = math.sqrt(16.0 / (3.0 * SQRT3 * a * a))
    norm_special = math.sqrt(8.0 / (3.0 * SQRT3 * a * a))
    if table.variant == HALF:
        norm_pair *= math.sqrt(2.0)
    m, n, sym = table.m, table.n, table.sym

    # in the wedge every x-multiplier (2m-n, m-2n, m+n, 3n_special) is >= 0
    # and bounded by 2m-n; every y-multiplier (n, m, m-n, 2n_special) by m
    mu_max = int(np.max(2 * m - n)) if len(m) else 0
    nu_max = int(np.max(m)) if len(m) else 0
    c_sin = np.zeros((mu_max + 1, nu_max + 1), dtype=complex)
    c_cos = np.zeros((mu_max + 1, nu_max + 1), dtype=complex)

    def add(mat, mus, nus, vals):
        np.add.at(mat, (mus, nus), vals)

    for code, mat, sign2 in ((_SYM_CODE[MINUS], c_sin, -1), (_SYM_CODE[PLUS], c_cos, +1)):
        rows = sym == code
        if not rows.any():
            continue
        mr, nr, ar = m[rows], n[rows], norm_pair * amp[rows]
        if mat is c_sin:
            # sin((2n-m) X) = -sin((m-2n) X): second term flips sign once more
            add(mat, 2 * mr - nr, nr, ar)
            add(mat, mr - 2 * nr, mr, ar)
            add(mat, mr + nr, mr - nr, -ar)
        else:
            add(mat, 2 * mr - nr, nr, ar)
            add(mat, mr - 2 * nr, mr, -ar)
            add(mat, mr + nr, mr - nr, ar)
    rows = sym == _SYM_CODE[SPECIAL]
    if rows.any():
        nr, ar = n[rows], norm_special * amp[rows]
        add(c_cos, 3 * nr, nr, 2.0 * ar)
        add(c_cos, np.zeros_like(nr), 2 * nr, -ar)
    return c_sin, c_cos


def evolve_on_grid(table: ExpansionTable, cfg: BilliardConfig, t: float, x, y) -> np.ndarray:
    """Evolved wavefunction sum a psi exp(-i E t / hbar) on the product grid x (x) y.

    Returns an array of shape (len(x), len(y)) with [i, j] = psi(x[i], y[j], t).
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    y = np.atleast_1d(np.asarray(y, dtype=float))
    c_sin, c_cos = _grid_matrices(table, cfg, t)
    mu = np.arange(c_sin.shape[0])
    nu = np.arange(c_sin.shape[1])
    X = 2.0 * np.pi * x / (3.0 * cfg.a)
    Y = 2.0 * np.pi * y / (SQRT3 * cfg.a)
    sy = np.sin(np.outer(nu, Y))
    out = np.zeros((len(x), len(y)), dtype=complex)
    if np.any(c_sin):
        out += np.sin(np.outer(X, mu)) @ (c_sin @ sy)
    if np.any(c_cos):
        out += np.cos(np.outer(X, mu)) @ (c_cos @ sy)
    return out


def evolve_at_points(table: ExpansionTable, cfg: BilliardConfig, t: float, x, y) -> np.ndarray:
    """Evolved wavefunction at scattered points (level-chunked direct sum)."""
    from .eigenfunctions import minus_form, plus_form, special_form

    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    rate = cfg.energy_unit / cfg.hbar
    amp = table.coeff * np.exp(-1j * rate * table.eps * t)
    if table.variant == HALF:
        amp = amp * math.sqrt(2.0)
    out = np.zeros(np.broadcast(x, y).shape, dtype=complex)
    for mm, nn, ss, aa in zip(table.m, table.n, table.sym, amp):
        if ss == _SYM_CODE[MINUS]:
            out += aa * minus_form(int(mm), int(nn), x, y, cfg.a)
        elif ss == _SYM_CODE[PLUS]:
            out += aa * plus_form(int(mm), int(nn), x, y, cfg.a)
        else:
            out += aa * special_form(int(nn), x, y, cfg.a)
    return out


def density_snapshot(table: ExpansionTable, cfg: BilliardConfig, t: float, x, y) -> np.ndarray:
    """Probability density |psi(t)|^2 on the product grid x (x) y."""
    if t < 0:
        raise ValueError("t must be >= 0")
    return np.abs(evolve_on_grid(table, cfg, t, x, y)) ** 2
