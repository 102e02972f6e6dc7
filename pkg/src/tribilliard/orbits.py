"""Closed-orbit families of the triangle billiard from the tiling construction.

Unfolding the triangle tiles the plane; closed orbits connect a point to one
of its lattice images, which sit at (i 3a/2, j sqrt3 a/2) with i and j both
even or both odd.  A family is labeled by that integer pair (i, j) reduced
to a primitive representative, or equivalently by (p, q) = ((i+j)/2, (i-j)/2);
its length is d = (a/2) sqrt(9 i^2 + 3 j^2) = a sqrt3 sqrt(p^2 + p q + q^2)
and its launch angle satisfies tan(theta) = j / (i sqrt3).  Directions reduce
to theta in [0, 30] degrees, i.e. 0 <= j <= i.

Two isolated single orbits exist outside this construction and are added
explicitly: the full well has one of primitive length 3a/2 along theta = 0,
the half well additionally one of primitive length sqrt3 a/2 along theta = 30;
both produce new features only at odd multiples of the primitive length
(even multiples coincide with the parent family's features).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .spectrum import FULL, HALF

SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class OrbitClass:
    i_bar: int
    j_bar: int
    p: int
    q: int
    length: float          # primitive length
    angle_deg: float
    isolated: bool
    variant: str
    recurrences: tuple[float, ...]   # feature lengths <= L_max (odd multiples only if isolated)


def _parity_ok(i: int, j: int) -> bool:
    return (i - j) % 2 == 0


def orbit_length(i_bar: int, j_bar: int, a: float = 1.0) -> float:
    """Primitive-image distance d = (a/2) sqrt(9 i^2 + 3 j^2)."""
    if i_bar == 0 and j_bar == 0:
        raise ValueError("(0, 0) is not an orbit")
    if not _parity_ok(i_bar, j_bar):
        raise ValueError(f"({i_bar}, {j_bar}) violates the both-even/both-odd constraint")
    return 0.5 * a * math.sqrt(9.0 * i_bar**2 + 3.0 * j_bar**2)


def orbit_length_pq(p: int, q: int, a: float = 1.0) -> float:
    """Equivalent (p, q) form, d = a sqrt3 sqrt(p^2 + p q + q^2)."""
    return a * SQRT3 * math.sqrt(p * p + p * q + q * q)


def to_pq(i_bar: int, j_bar: int) -> tuple[int, int]:
    if not _parity_ok(i_bar, j_bar):
        raise ValueError(f"({i_bar}, {j_bar}) violates the parity constraint")
    return (i_bar + j_bar) // 2, (i_bar - j_bar) // 2


def from_pq(p: int, q: int) -> tuple[int, int]:
    return p + q, p - q


def orbit_angle(i_bar: int, j_bar: int) -> float:
    """Launch angle in degrees, tan(theta) = j / (i sqrt3)."""
    if i_bar == 0 and j_bar == 0:
        raise ValueError("(0, 0) is not an orbit")
    return math.degrees(math.atan2(j_bar, i_bar * SQRT3))


def is_primitive(i_bar: int, j_bar: int) -> bool:
    """True if no k >= 2 divides (i, j) with a parity-valid quotient.

    gcd reduction must preserve the both-even/both-odd rule: (4, 2) cannot
    reduce to (2, 1), so it is primitive even though gcd = 2.
    """
    g = math.gcd(i_bar, j_bar)
    for k in range(2, g + 1):
        if g % k == 0 and _parity_ok(i_bar // k, j_bar // k):
            return False
    return True


def _recurrences(primitive: float, l_max: float, odd_only: bool = False) -> tuple[float, ...]:
    out = []
    k = 1
    while k * primitive < l_max:
        out.append(k * primitive)
        k += 2 if odd_only else 1
    return tuple(out)


def enumerate_orbits(l_max: float, variant: str = FULL, a: float = 1.0) -> list[OrbitClass]:
    """Catalog of primitive families (and isolated orbits) with features below l_max.

    Families whose primitive length is below l_max are listed once, with all
    integer recurrences below l_max attached.  The half well inherits every
    full-well family and the isolated 3a/2 orbit, and adds the isolated
    sqrt3 a/2 orbit.
    """
    if l_max <= 0:
        raise ValueError("l_max must be positive")
    if variant not in (FULL, HALF):
        raise ValueError(f"unknown variant {variant!r}")
    out = []
    i_hi = int(2.0 * l_max / (3.0 * a)) + 1
    for i in range(1, i_hi + 1):
        for j in range(0, i + 1):
            if not _parity_ok(i, j) or not is_primitive(i, j):
                continue
            d = orbit_length(i, j, a)
            if d >= l_max:
                continue
            p, q = to_pq(i, j)
            out.append(
                OrbitClass(
                    i_bar=i, j_bar=j, p=p, q=q,
                    length=d, angle_deg=orbit_angle(i, j),
                    isolated=False, variant=variant,
                    recurrences=_recurrences(d, l_max),
                )
            )
    iso = [(2, 0, 1.5 * a, 0.0)]
    if variant == HALF:
        iso.append((1, 1, SQRT3 * a / 2.0, 30.0))
    for i, j, d, ang in iso:
        if d < l_max:
            p, q = to_pq(i, j)
            out.append(
                OrbitClass(
                    i_bar=i, j_bar=j, p=p, q=q,
                    length=d, angle_deg=ang,
                    isolated=True, variant=variant,
                    recurrences=_recurrences(d, l_max, odd_only=True),
                )
            )
    out.sort(key=lambda o: (o.length, o.angle_deg, o.isolated))
    return out


def orbit_features(catalog: list[OrbitClass]) -> list[tuple[float, OrbitClass, int]]:
    """Flattened (length, family, multiple) features, sorted by length.

    For isolated orbits the multiple counts odd recurrences (1, 3, 5, ...).
    """
    feats = []
    for orb in catalog:
        step = 2 if orb.isolated else 1
        for idx, L in enumerate(orb.recurrences):
            feats.append((L, orb, 1 + step * idx))
    feats.sort(key=lambda t: (t[0], t[1].angle_deg))
    return feats
