"""Exact energy spectrum of the equilateral-triangle billiard and its half fold.

States are labeled by integer pairs (m, n) with m >= 2n >= 2.  The
dimensionless energy is the integer eps = m^2 + n^2 - m*n, the physical
energy E = E0 * eps with E0 = (hbar^2 / 2 mu a^2) (4 pi / 3)^2, and the
wavenumber satisfies k * a = (4 pi / 3) sqrt(eps).  For m > 2n the level is
two-fold degenerate (one even-parity and one odd-parity state); for m = 2n
there is a single state.  The half (30-60-90) billiard keeps only one copy
of each m > 2n level (the odd-parity state).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

FULL = "full"
HALF = "half"

MINUS = "minus"
PLUS = "plus"
SPECIAL = "special"

_SYM_ORDER = {MINUS: 0, PLUS: 1, SPECIAL: 2}


@dataclass(frozen=True)
class BilliardConfig:
    """Billiard geometry and units.

    Defaults give the dimensionless mode hbar = 1, 2*mu = 1, a = 1 in which
    every reference number of this package is quoted.
    """

    a: float = 1.0
    mu: float = 0.5
    hbar: float = 1.0
    variant: str = FULL

    def __post_init__(self):
        if self.a <= 0 or self.mu <= 0 or self.hbar <= 0:
            raise ValueError("a, mu and hbar must all be positive")
        if self.variant not in (FULL, HALF):
            raise ValueError(f"unknown variant {self.variant!r}")

    @property
    def area(self) -> float:
        s = math.sqrt(3.0) * self.a**2 / 4.0
        return s if self.variant == FULL else s / 2.0

    @property
    def perimeter(self) -> float:
        if self.variant == FULL:
            return 3.0 * self.a
        return (1.5 + math.sqrt(3.0) / 2.0) * self.a

    @property
    def energy_unit(self) -> float:
        """E0 such that E(m, n) = E0 * (m^2 + n^2 - m n)."""
        return (self.hbar**2 / (2.0 * self.mu * self.a**2)) * (4.0 * math.pi / 3.0) ** 2


@dataclass(frozen=True)
class QuantumNumbers:
    m: int
    n: int
    sym: str

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.m < 2 * self.n:
            raise ValueError(f"m >= 2n required, got (m, n) = ({self.m}, {self.n})")
        if self.sym not in _SYM_ORDER:
            raise ValueError(f"unknown symmetry tag {self.sym!r}")
        if (self.sym == SPECIAL) != (self.m == 2 * self.n):
            raise ValueError(
                f"sym={self.sym!r} inconsistent with (m, n) = ({self.m}, {self.n}); "
                f"m = 2n states are 'special', m > 2n states are 'minus'/'plus'"
            )

    @property
    def epsilon(self) -> int:
        return epsilon(self.m, self.n)


@dataclass(frozen=True)
class EnergyLevel:
    qn: QuantumNumbers
    epsilon: int
    energy: float
    k: float
    degeneracy: int


def epsilon(m: int, n: int) -> int:
    """Dimensionless energy m^2 + n^2 - m n (valid for any integer pair)."""
    return m * m + n * n - m * n


def k_of_epsilon(eps, cfg: BilliardConfig):
    """Wavenumber of a level: k = (4 pi / 3) sqrt(eps) / a."""
    return (4.0 * math.pi / 3.0) * np.sqrt(eps) / cfg.a


def energy(qn: QuantumNumbers, cfg: BilliardConfig) -> EnergyLevel:
    """Energy level for valid quantum numbers under the given configuration."""
    if cfg.variant == HALF and qn.sym != MINUS:
        raise ValueError(f"half variant admits only 'minus' states, got {qn.sym!r}")
    eps = qn.epsilon
    deg = 2 if (cfg.variant == FULL and qn.m > 2 * qn.n) else 1
    return EnergyLevel(
        qn=qn,
        epsilon=eps,
        energy=cfg.energy_unit * eps,
        k=float(k_of_epsilon(eps, cfg)),
        degeneracy=deg,
    )


def _wedge_pairs(eps_cutoff: int):
    """All (m, n) with m >= 2n >= 2 and eps <= eps_cutoff, as integer arrays.

    Bound: in the wedge eps >= 3 n^2 and, for fixed n,
    eps = m^2 - m n + n^2 <= cutoff gives m <= (n + sqrt(4*cutoff - 3 n^2)) / 2.
    """
    ms, ns = [], []
    n = 1
    while 3 * n * n <= eps_cutoff:
        m_hi = int((n + math.isqrt(4 * eps_cutoff - 3 * n * n)) // 2) + 1
        m = np.arange(2 * n, m_hi + 1, dtype=np.int64)
        e = m * m + n * n - m * n
        m = m[e <= eps_cutoff]
        if len(m):
            ms.append(m)
            ns.append(np.full(m.shape, n, dtype=np.int64))
        n += 1
    if not ms:
        return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
    return np.concatenate(ms), np.concatenate(ns)


def levels_below(cfg: BilliardConfig, eps_cutoff: int) -> list[EnergyLevel]:
    """Every level with eps <= eps_cutoff, multiplicity-expanded and sorted.

    Sort order: eps, then m, then n, then sym (minus before plus).  Full-well
    m > 2n levels contribute a minus and a plus entry; the half well keeps
    only the minus entry.
    """
    m, n = _wedge_pairs(eps_cutoff)
    out: list[EnergyLevel] = []
    for mi, ni in zip(m.tolist(), n.tolist()):
        if mi == 2 * ni:
            if cfg.variant == FULL:
                out.append(energy(QuantumNumbers(mi, ni, SPECIAL), cfg))
        else:
            out.append(energy(QuantumNumbers(mi, ni, MINUS), cfg))
            if cfg.variant == FULL:
                out.append(energy(QuantumNumbers(mi, ni, PLUS), cfg))
    out.sort(key=lambda lv: (lv.epsilon, lv.qn.m, lv.qn.n, _SYM_ORDER[lv.qn.sym]))
    return out


def enumerate_levels(cfg: BilliardConfig, count: int) -> list[EnergyLevel]:
    """The `count` lowest levels, counted with multiplicity.

    The enumeration cutoff is grown until at least `count` entries exist, so
    no level below the cut can be missed.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    # Smooth count is ~ 0.6 eps (full) resp. ~ 0.3 eps (half); start generous.
    factor = 2.0 if cfg.variant == FULL else 4.0
    cutoff = max(16, int(factor * count + 8.0 * math.sqrt(count) + 32))
    while True:
        lv = levels_below(cfg, cutoff)
        if len(lv) >= count:
            return lv[:count]
        cutoff = int(cutoff * 1.5) + 16


def weyl_count(cfg: BilliardConfig, E: float) -> float:
    """Smooth cumulative level count N0(E) from the area and perimeter terms.

    N0(E) = (A / 4 pi)(2 mu / hbar^2) E - (P / 4 pi) sqrt(2 mu E / hbar^2).
    """
    if E <= 0:
        raise ValueError("E must be positive")
    two_mu = 2.0 * cfg.mu
    area_term = cfg.area / (4.0 * math.pi) * (two_mu / cfg.hbar**2) * E
    perim_term = cfg.perimeter / (4.0 * math.pi) * math.sqrt(two_mu * E / cfg.hbar**2)
    return area_term - perim_term
