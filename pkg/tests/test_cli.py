import csv
import json
import math
from pathlib import Path

import numpy as np
import pytest

from tribilliard.cli import main


def read_artifact(path):
    text = Path(path).read_text().splitlines()
    assert text[0].startswith("# ")
    meta = json.loads(text[0][2:])
    rows = list(csv.DictReader(text[1:]))
    return meta, rows


def test_spectrum_csv_matches_reference_list(tmp_path):
    out = tmp_path / "spec.csv"
    assert main(["spectrum", "--count", "6", "--variant", "full", "--out", str(out)]) == 0
    meta, rows = read_artifact(out)
    assert meta["command"] == "spectrum"
    ka = [float(r["k_a"]) for r in rows]
    assert np.allclose(ka, [7.255, 11.082, 11.082, 14.510, 15.102, 15.102], atol=1e-3)
    assert [r["sym"] for r in rows[:3]] == ["special", "minus", "plus"]


def test_spectrum_json_format(tmp_path):
    out = tmp_path / "spec.json"
    assert main(["spectrum", "--count", "3", "--variant", "half",
                 "--format", "json", "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert [lv["epsilon"] for lv in payload["levels"]] == [7, 13, 19]


def test_spectrum_determinism(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    main(["spectrum", "--count", "50", "--out", str(a)])
    main(["spectrum", "--count", "50", "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_orbits_primitive_catalog(tmp_path):
    out = tmp_path / "orbits.csv"
    assert main(["orbits", "--lmax", "20", "--out", str(out)]) == 0
    meta, rows = read_artifact(out)
    families = [r for r in rows if r["isolated"] == "0"]
    assert len(families) == 27
    iso = [r for r in rows if r["isolated"] == "1"]
    assert len(iso) == 1
    assert float(iso[0]["primitive_length_over_a"]) == pytest.approx(1.5)


def test_orbits_expanded_features(tmp_path):
    out = tmp_path / "features.csv"
    assert main(["orbits", "--lmax", "10", "--expand-recurrences", "--out", str(out)]) == 0
    _, rows = read_artifact(out)
    lengths = [float(r["L_over_a"]) for r in rows]
    assert lengths == sorted(lengths)
    assert any(abs(L - 1.5) < 1e-9 and r["isolated"] == "1" for L, r in zip(lengths, rows))


def test_weyl_artifact(tmp_path):
    out = tmp_path / "weyl.csv"
    assert main(["weyl", "--levels", "100", "--out", str(out)]) == 0
    _, rows = read_artifact(out)
    assert len(rows) == 100
    for r in rows[::10]:
        assert abs(float(r["diff"])) <= 3 * math.sqrt(float(r["staircase"])) + 5


def test_eigfun_grid(tmp_path):
    out = tmp_path / "eig.csv"
    assert main(["eigfun", "--m", "3", "--n", "1", "--sym", "minus",
                 "--grid", "21", "--out", str(out)]) == 0
    _, rows = read_artifact(out)
    assert len(rows) == 21 * 21
    on_axis = [r for r in rows if abs(float(r["x"])) < 1e-12]
    assert all(abs(float(r["psi"])) < 1e-10 for r in on_axis)


def test_transform_stdout(capsys):
    assert main(["transform", "--p", "3", "--q", "1", "--m", "2", "--n", "1"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["image"] == [5, 1]
    assert payload["factor"] == 7


def test_symcheck_passes(capsys):
    assert main(["symcheck", "--m", "5", "--n", "2"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["all_below_1e-10"]


def test_expand_coefficients(tmp_path):
    out = tmp_path / "coef.csv"
    y_c = repr(math.sqrt(3.0) / 3.0)
    assert main(["expand", "--x0", "0", "--y0", y_c, "--p0", "0", "--theta", "0",
                 "--b", "0.070711", "--out", str(out)]) == 0
    meta, rows = read_artifact(out)
    assert meta["captured_norm"] >= 0.999
    assert abs(meta["energy_expectation"] - 200.0) / 200.0 < 1e-3
    bad = [r for r in rows if (int(r["m"]) + int(r["n"])) % 3 != 0 and float(r["abs2"]) > 1e-12]
    assert not bad


def test_autocorr_trace_and_revival(tmp_path):
    out = tmp_path / "A.csv"
    assert main(["autocorr", "--x0", "0", "--y0", "0.5774", "--p0", "0", "--theta", "0",
                 "--b", "0.070711", "--tmax-trev", "1.0", "--points", "257",
                 "--out", str(out)]) == 0
    meta, rows = read_artifact(out)
    absA = [float(r["abs_A"]) for r in rows]
    norm = meta["captured_norm"]["trace"]
    assert absA[0] == pytest.approx(norm, abs=1e-9)
    assert absA[-1] == pytest.approx(absA[0], abs=1e-6)   # t = T_rev
    assert meta["t_rev"] == pytest.approx(9 / (8 * math.pi))


def test_autocorr_needs_momentum_for_tau_units(tmp_path):
    rc = main(["autocorr", "--x0", "0", "--y0", "0.5774", "--p0", "0", "--theta", "0",
               "--b", "0.070711", "--tmax-tau", "12", "--out", str(tmp_path / "A.csv")])
    assert rc == 2


def test_revivals_report(tmp_path):
    out = tmp_path / "rev.json"
    assert main(["revivals", "--x0", "0", "--y0", "0.5774", "--p0", "0", "--theta", "0",
                 "--b", "0.070711", "--fractions", "1,9", "--threshold", "0.95",
                 "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["report"]["fractions"]["9"]["revived"]


def test_density_snapshot_artifact(tmp_path):
    out = tmp_path / "rho.csv"
    assert main(["density", "--x0", "0", "--y0", "0.5774", "--p0", "0", "--theta", "0",
                 "--b", "0.070711", "--t", "0.0", "--grid", "41", "--out", str(out)]) == 0
    meta, rows = read_artifact(out)
    best = max(rows, key=lambda r: float(r["rho"]))
    assert abs(float(best["x"])) < 0.03
    assert abs(float(best["y"]) - 0.5774) < 0.03
    outside = [r for r in rows if r["inside"] == "0"]
    assert all(float(r["rho"]) == 0.0 for r in outside)


def test_preset_fig9_centroid(tmp_path):
    out = tmp_path / "A.csv"
    assert main(["autocorr", "--preset", "paper-fig9-centroid", "--points", "65",
                 "--out", str(out)]) == 0
    meta, rows = read_artifact(out)
    assert meta["params"]["preset"] == "paper-fig9-centroid"
    assert rows[0]["y0"] == repr(math.sqrt(3) / 3)


def test_preset_belongs_to_command(tmp_path):
    rc = main(["length-spectrum", "--preset", "paper-fig5", "--levels", "100",
               "--dl", "0.002", "--lmax", "4",
               "--out", str(tmp_path / "s.csv"), "--peaks", str(tmp_path / "p.json")])
    assert rc == 0
    meta, rows = read_artifact(tmp_path / "s.csv")
    assert meta["params"]["levels"] == 100   # explicit flag beats preset


def test_length_spectrum_compare(tmp_path):
    out, peaks = tmp_path / "c.csv", tmp_path / "c.json"
    assert main(["length-spectrum", "--compare", "--levels", "150", "--lmax", "4",
                 "--dl", "0.002", "--out", str(out), "--peaks", str(peaks)]) == 0
    _, rows = read_artifact(out)
    variants = {r["variant"] for r in rows}
    assert variants == {"full", "half"}
    report = json.loads(peaks.read_text())["report"]
    assert "full" in report and "half" in report


def test_si_units_validation(tmp_path):
    rc = main(["spectrum", "--count", "3", "--a", "2.0", "--out", str(tmp_path / "x.csv")])
    assert rc == 2
    rc = main(["spectrum", "--count", "3", "--si", "--a", "2.0", "--mu", "1.0",
               "--hbar", "1.0", "--out", str(tmp_path / "y.csv")])
    assert rc == 0


def test_io_error_exit_code(tmp_path):
    rc = main(["spectrum", "--count", "3", "--out", str(tmp_path / "no" / "dir" / "x.csv")])
    assert rc == 3


def test_unknown_flag_rejected():
    with pytest.raises(SystemExit) as exc:
        main(["spectrum", "--count", "3", "--frobnicate"])
    assert exc.value.code == 2
