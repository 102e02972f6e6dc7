"""Truncated Fourier length spectrum of the quantized wavenumbers.

rho_N(L) = sum_{n=1}^{N} exp(i k_n L) over the N lowest levels, counted with
degeneracy.  |rho_N|^2 develops sharp peaks at the lengths of classical
closed orbits; the smooth part of the level density shows up only as a large
feature at L = 0, which peak detection excludes.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .orbits import enumerate_orbits, orbit_features
from .spectrum import FULL, HALF, BilliardConfig, enumerate_levels

_CHUNK = 2048


@dataclass
class LengthSpectrum:
    L: np.ndarray
    rho: np.ndarray
    n_levels: int
    variant: str
    a: float

    @property
    def power(self) -> np.ndarray:
        return np.abs(self.rho) ** 2

    @property
    def power_normalized(self) -> np.ndarray:
        return self.power / self.n_levels**2


def default_grid(cfg: BilliardConfig, l_max: float = 20.0, dl: float = 0.002) -> np.ndarray:
    """L grid in physical units; defaults resolve neighbors 0.05 a apart."""
    n = int(round(l_max / dl))
    return np.arange(n + 1) * dl * cfg.a


def _thread_count() -> int:
    try:
        return max(1, int(os.environ.get("TRIBILLIARD_THREADS", "1")))
    except ValueError:
        return 1


def compute_rho(
    cfg: BilliardConfig,
    n_levels: int,
    L_grid: np.ndarray,
    window_sigma: float = 0.0,
) -> LengthSpectrum:
    """Sum exp(i k L) over the n_levels lowest levels on the given grid.

    window_sigma > 0 applies the optional smoothing weight exp(-k^2 sigma^2)
    to each term; the default reproduces the raw sum.  Each grid point is an
    independent pairwise-summed reduction, so results do not depend on the
    thread count (set via TRIBILLIARD_THREADS).
    """
    if n_levels < 1:
        raise ValueError("n_levels must be >= 1")
    L = np.asarray(L_grid, dtype=float)
    if L.ndim != 1 or len(L) > 1 and np.any(np.diff(L) <= 0):
        raise ValueError("L_grid must be strictly increasing")
    k = np.array([lv.k for lv in enumerate_levels(cfg, n_levels)])
    wt = np.exp(-(k**2) * window_sigma**2) if window_sigma > 0 else None

    def _block(sl: slice) -> np.ndarray:
        ph = np.exp(1j * np.outer(L[sl], k))
        return ph @ wt if wt is not None else ph.sum(axis=1)

    slices = [slice(i, min(i + _CHUNK, len(L))) for i in range(0, len(L), _CHUNK)]
    nthreads = _thread_count()
    if nthreads > 1 and len(slices) > 1:
        with ThreadPoolExecutor(max_workers=nthreads) as ex:
            blocks = list(ex.map(_block, slices))
    else:
        blocks = [_block(sl) for sl in slices]
    rho = np.concatenate(blocks)
    return LengthSpectrum(L=L, rho=rho, n_levels=n_levels, variant=cfg.variant, a=cfg.a)


def detect_peaks(
    spec: LengthSpectrum,
    min_prominence: float = 5.0,
    exclusion: float | None = None,
) -> list[tuple[float, float]]:
    """Local maxima of |rho|^2 above min_prominence times the median power.

    The L = 0 feature from the smooth level density is removed by the
    exclusion window (default L < 0.5 a).  Returns (L_peak, power) pairs;
    an empty list just means the threshold was not reached.
    """
    if len(spec.L) > 1:
        dl = np.diff(spec.L).max()
        if dl > 0.005 * spec.a + 1e-12:
            raise ValueError(f"grid spacing {dl:.4g} too coarse for sub-peak resolution")
    if exclusion is None:
        exclusion = 0.5 * spec.a
    P = spec.power
    floor = min_prominence * float(np.median(P))
    mask = (P[1:-1] > P[:-2]) & (P[1:-1] >= P[2:]) & (P[1:-1] >= floor)
    idx = np.where(mask)[0] + 1
    return [(float(spec.L[i]), float(P[i])) for i in idx if spec.L[i] >= exclusion]


def match_features(
    peaks: list[tuple[float, float]],
    features: list[tuple],
    window: float = 0.05,
) -> list[dict]:
    """Associate each predicted feature with the nearest detected peak."""
    pl = np.array([p[0] for p in peaks]) if peaks else np.empty(0)
    out = []
    for L_pred, orb, mult in features:
        rec = {
            "i_bar": orb.i_bar,
            "j_bar": orb.j_bar,
            "multiple": mult,
            "isolated": orb.isolated,
            "theta_deg": round(orb.angle_deg, 4),
            "L_pred": round(L_pred, 6),
            "L_detected": None,
            "residual": None,
            "matched": False,
        }
        if len(pl):
            i = int(np.argmin(np.abs(pl - L_pred)))
            resid = float(pl[i] - L_pred)
            if abs(resid) <= window:
                rec.update(L_detected=round(float(pl[i]), 6), residual=round(resid, 6), matched=True)
        out.append(rec)
    return out


def compare_variants(
    cfg: BilliardConfig,
    n_levels: int,
    l_max: float = 20.0,
    dl: float = 0.002,
    min_prominence: float = 5.0,
    window: float = 0.05,
) -> tuple[dict, dict[str, LengthSpectrum]]:
    """Full-well vs half-well peak sets on a shared grid.

    Shared features are the non-isolated families (identical path lengths in
    both wells) plus the isolated 3a/2 orbit; the half well alone shows the
    odd multiples of sqrt3 a/2.  Returns the match report and the two
    aligned spectra keyed by variant.
    """
    full_cfg = BilliardConfig(cfg.a, cfg.mu, cfg.hbar, FULL)
    half_cfg = BilliardConfig(cfg.a, cfg.mu, cfg.hbar, HALF)
    grid = default_grid(cfg, l_max, dl)
    report: dict = {"n_levels": n_levels, "l_max": l_max, "dl": dl}
    spectra = {}
    for sub in (full_cfg, half_cfg):
        spec = compute_rho(sub, n_levels, grid)
        peaks = detect_peaks(spec, min_prominence)
        feats = orbit_features(enumerate_orbits(l_max * cfg.a, sub.variant, cfg.a))
        report[sub.variant] = {
            "matches": match_features(peaks, feats, window * cfg.a),
            "n_peaks": len(peaks),
        }
        spectra[sub.variant] = spec
    full_only_iso = [m for m in report[FULL]["matches"] if m["isolated"]]
    half_only = [
        m for m in report[HALF]["matches"]
        if m["isolated"] and (m["i_bar"], m["j_bar"]) == (1, 1)
    ]
    shared = [m for m in report[FULL]["matches"] if not m["isolated"]]
    report["summary"] = {
        "shared_all_matched": all(m["matched"] for m in shared),
        "half_new_all_matched": all(m["matched"] for m in half_only),
        "isolated_3a2_in_both": (
            all(m["matched"] for m in full_only_iso if m["multiple"] == 1)
            and any(
                m["matched"] and (m["i_bar"], m["j_bar"]) == (2, 0) and m["multiple"] == 1
                for m in report[HALF]["matches"]
            )
        ),
    }
    return report, spectra
