"""Integer quantum-number transformations with multiplicative energy algebra.

T_(p,q)[m, n] = (p m - q n, (p - q) m - p n) maps allowed index pairs to
higher ones with eps(m', n') = eps(p, q) * eps(m, n) exactly.  Raw images can
leave the canonical wedge m >= 2n >= 0; they are brought back using the
symmetry group of eps generated by (m, n) -> (m, m - n) and (m, n) -> (n, m),
and the generator chain used is reported.  All arithmetic is exact integers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .spectrum import epsilon


@dataclass(frozen=True)
class QNTransform:
    p: int
    q: int

    def __post_init__(self):
        if self.q < 1 or self.p <= 2 * self.q:
            raise ValueError(f"need p > 2q >= 2, got (p, q) = ({self.p}, {self.q})")

    def raw(self, m: int, n: int) -> tuple[int, int]:
        return (self.p * m - self.q * n, (self.p - self.q) * m - self.p * n)


_GENERATORS = (
    ("reflect", lambda m, n: (m, m - n)),
    ("swap", lambda m, n: (n, m)),
)


def in_wedge(m: int, n: int) -> bool:
    return m >= 2 * n >= 0


def canonicalize(m: int, n: int) -> tuple[int, int, tuple[str, ...]]:
    """Wedge representative of (m, n) and the generator chain reaching it.

    Breadth-first search over the (order <= 12) symmetry orbit; every orbit
    contains a representative with m >= 2n >= 0.  A representative with
    n = 0 labels an identically vanishing wavefunction and is returned as is.
    """
    seen = {(m, n): ()}
    frontier = [(m, n)]
    while frontier:
        best = [pair for pair in seen if in_wedge(*pair)]
        if best:
            pair = min(best)
            return pair[0], pair[1], seen[pair]
        nxt = []
        for mm, nn in frontier:
            for name, gen in _GENERATORS:
                img = gen(mm, nn)
                if img not in seen:
                    seen[img] = seen[(mm, nn)] + (name,)
                    nxt.append(img)
        frontier = nxt
    raise AssertionError(f"orbit of ({m}, {n}) contains no wedge representative")


def apply_transform(t: QNTransform, m: int, n: int) -> tuple[int, int]:
    """Canonicalized image of (m, n) under T_(p,q)."""
    mi, ni = t.raw(m, n)
    mc, nc, _ = canonicalize(mi, ni)
    return mc, nc


def epsilon_multiplicativity_check(t: QNTransform, m: int, n: int) -> dict:
    """Exact-integer check that eps factorizes through the transformation."""
    if not in_wedge(m, n) or n < 1:
        raise ValueError(f"({m}, {n}) is not in the canonical wedge")
    mi, ni = t.raw(m, n)
    mc, nc, chain = canonicalize(mi, ni)
    eps_in = epsilon(m, n)
    eps_factor = epsilon(t.p, t.q)
    eps_out = epsilon(mc, nc)
    ok = eps_out == eps_factor * eps_in and epsilon(mi, ni) == eps_out
    if not ok:
        raise AssertionError(
            f"multiplicativity failed for T_({t.p},{t.q})[{m},{n}]: "
            f"{eps_out} != {eps_factor} * {eps_in}"
        )
    return {
        "input": (m, n),
        "raw_image": (mi, ni),
        "image": (mc, nc),
        "chain": chain,
        "epsilon_in": eps_in,
        "epsilon_out": eps_out,
        "factor": eps_factor,
        "vanishing_image": nc == 0,
    }
