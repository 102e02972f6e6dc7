import numpy as np
import pytest

from tribilliard import (
    FULL,
    HALF,
    BilliardConfig,
    LengthSpectrum,
    compute_rho,
    default_grid,
    detect_peaks,
    enumerate_orbits,
    match_features,
    orbit_features,
)

CFG = BilliardConfig()


@pytest.fixture(scope="module")
def spec_500():
    return compute_rho(CFG, 500, default_grid(CFG, 12.0, 0.002))


def test_rho_at_zero_is_level_count(spec_500):
    assert spec_500.rho[0] == pytest.approx(500 + 0j)
    assert np.all(np.abs(spec_500.rho) <= 500 + 1e-9)


def test_rho_conjugate_symmetry():
    k_grid = np.array([0.5, 1.0, 2.5])
    spec_pos = compute_rho(CFG, 50, k_grid)
    spec_neg_rho = np.exp(-1j * np.outer(k_grid, [lv.k for lv in
                                                  __import__("tribilliard").enumerate_levels(CFG, 50)])).sum(axis=1)
    assert np.allclose(spec_pos.rho.conj(), spec_neg_rho, atol=1e-12)


def test_synthetic_two_cosine_peak():
    # two wavenumbers only: |rho|^2 peaks where both phases align, at L = 3
    k = np.array([2 * np.pi / 3, 4 * np.pi / 3])
    L = np.arange(0.0, 6.0, 0.002)
    rho = np.exp(1j * np.outer(L, k)).sum(axis=1)
    spec = LengthSpectrum(L=L, rho=rho, n_levels=2, variant=FULL, a=1.0)
    peaks = detect_peaks(spec, min_prominence=1.5)
    assert any(abs(L - 3.0) <= 0.002 for L, _ in peaks)


def test_detect_peaks_rejects_coarse_grid():
    L = np.arange(0.0, 6.0, 0.01)
    rho = np.exp(1j * np.outer(L, [1.0, 2.0])).sum(axis=1)
    spec = LengthSpectrum(L=L, rho=rho, n_levels=2, variant=FULL, a=1.0)
    with pytest.raises(ValueError):
        detect_peaks(spec)


def test_detect_peaks_empty_when_threshold_too_high(spec_500):
    assert detect_peaks(spec_500, min_prominence=1e9) == []


def test_strong_peaks_at_shortest_orbits(spec_500):
    peaks = detect_peaks(spec_500, min_prominence=5.0)
    pl = np.array([p[0] for p in peaks])
    for target in (np.sqrt(3.0), 3.0, 2 * np.sqrt(3.0), 6.0):
        assert np.min(np.abs(pl - target)) <= 0.05


def test_peak_positions_stable_in_level_count():
    grid = default_grid(CFG, 7.0, 0.002)
    positions = {}
    for n in (500, 1000, 2000):
        peaks = detect_peaks(compute_rho(CFG, n, grid), min_prominence=5.0)
        pl = np.array([p[0] for p in peaks])
        positions[n] = {t: pl[np.argmin(np.abs(pl - t))] for t in (np.sqrt(3.0), 3.0, 4.583)}
    for t in positions[500]:
        vals = [positions[n][t] for n in (500, 1000, 2000)]
        assert max(vals) - min(vals) <= 0.02


def test_peak_width_shrinks_with_level_count():
    grid = default_grid(CFG, 4.0, 0.002)

    def fwhm_at_3(n):
        spec = compute_rho(CFG, n, grid)
        P = spec.power
        i0 = np.argmin(np.abs(spec.L - 3.0))
        j = np.argmax(P[i0 - 25 : i0 + 25]) + i0 - 25
        half = P[j] / 2
        lo = j
        while lo > 0 and P[lo] > half:
            lo -= 1
        hi = j
        while hi < len(P) - 1 and P[hi] > half:
            hi += 1
        return spec.L[hi] - spec.L[lo]

    widths = [fwhm_at_3(n) for n in (250, 500, 1000)]
    assert widths[0] > widths[1] > widths[2]


def test_window_sigma_damps_high_levels():
    grid = np.array([0.0, 1.0])
    raw = compute_rho(CFG, 100, grid)
    damped = compute_rho(CFG, 100, grid, window_sigma=0.05)
    assert abs(damped.rho[0]) < abs(raw.rho[0])


def test_match_features_reports_residuals():
    catalog = enumerate_orbits(6.0, FULL)
    feats = orbit_features(catalog)
    peaks = [(1.74, 100.0), (3.001, 400.0)]
    matches = match_features(peaks, feats, window=0.05)
    by_len = {m["L_pred"]: m for m in matches}
    assert by_len[round(np.sqrt(3.0), 6)]["matched"]
    assert by_len[3.0]["matched"]
    assert by_len[3.0]["residual"] == pytest.approx(0.001, abs=1e-9)
    assert not by_len[round(2 * np.sqrt(3.0), 6)]["matched"]
