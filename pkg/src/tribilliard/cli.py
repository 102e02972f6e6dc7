"""Command-line interface: every operation as a subcommand with CSV/JSON artifacts.

Each artifact starts with a '#'-prefixed JSON metadata line echoing the full
parameter set (version included, no timestamps), so identical invocations
produce byte-identical files.  All numbers are in the dimensionless mode
hbar = 1, 2 mu = 1, a = 1 unless --si is given together with explicit
--a/--mu/--hbar values.  TRIBILLIARD_THREADS controls internal
data-parallelism; outputs do not depend on it.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys

import numpy as np

from . import __version__
from .eigenfunctions import SQRT3, check_symmetry_relations, inside, psi
from .length_spectrum import compare_variants, compute_rho, default_grid, detect_peaks, match_features
from .orbits import enumerate_orbits, orbit_features
from .spectrum import FULL, HALF, MINUS, PLUS, SPECIAL, BilliardConfig, QuantumNumbers, enumerate_levels, weyl_count
from .transforms import QNTransform, epsilon_multiplicativity_check
from .wavepacket import (
    GaussianPacket,
    autocorrelation,
    density_snapshot,
    expand,
    energy_expectation,
    revival_scan,
    revival_time,
    timescales_for_packet,
)

B_REFERENCE = 1.0 / (10.0 * math.sqrt(2.0))   # Delta x0 = 0.05
P0_REFERENCE = 1500.0
CENTROID_Y = SQRT3 / 3.0
QUARTER_Y = SQRT3 / 4.0

FIG8_THETAS = (0.0, 4.7, 6.6, 10.9, 16.1, 21.1, 25.3, 30.0)
FIG9_Y0S = (0.35, QUARTER_Y, 0.5, CENTROID_Y, 0.65)

PRESETS = {
    "paper-fig2": {"command": "eigfun"},
    "paper-fig5": {
        "command": "length-spectrum",
        "levels": 1000, "variant": FULL, "lmax": 20.0, "dl": 0.002,
    },
    "paper-fig7": {
        "command": "length-spectrum",
        "levels": 1000, "lmax": 20.0, "dl": 0.002, "compare": True,
    },
    "paper-fig8": {
        "command": "autocorr",
        "p0": P0_REFERENCE, "b": B_REFERENCE, "tmax_tau": 12.0, "points": 2000,
        "prune_tail": 1e-12,
    },
    "paper-fig9": {
        "command": "autocorr",
        "p0": 0.0, "b": B_REFERENCE, "tmax_trev": 1.0, "points": 4096,
    },
    "paper-fig9-centroid": {
        "command": "autocorr",
        "x0": 0.0, "y0": CENTROID_Y, "p0": 0.0, "theta": 0.0,
        "b": B_REFERENCE, "tmax_trev": 1.0, "points": 4096,
    },
    "paper-fig9-quarter": {
        "command": "autocorr",
        "x0": 0.0, "y0": QUARTER_Y, "p0": 0.0, "theta": 0.0,
        "b": B_REFERENCE, "tmax_trev": 1.0, "points": 4096,
    },
}


def _fmt(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "1" if v else "0"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    return str(v)


def write_csv(path, meta: dict, header: list[str], rows) -> None:
    with open(path, "w", newline="") as fh:
        fh.write("# " + json.dumps(meta, sort_keys=True) + "\n")
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([_fmt(v) for v in row])


def write_json(path, payload: dict) -> None:
    with open(path, "w") as fh:
        json.dump(payload, fh, sort_keys=True, indent=2)
        fh.write("\n")


def _meta(command: str, params: dict, **extra) -> dict:
    md = {"tool": "tribilliard", "version": __version__, "command": command,
          "params": {k: v for k, v in sorted(params.items())}}
    md.update(extra)
    return md


def _add_config_args(sp) -> None:
    sp.add_argument("--variant", choices=[FULL, HALF], default=FULL)
    sp.add_argument("--si", action="store_true",
                    help="use explicit units; requires --a, --mu and --hbar")
    sp.add_argument("--a", type=float, default=None)
    sp.add_argument("--mu", type=float, default=None)
    sp.add_argument("--hbar", type=float, default=None)


def _config(args) -> BilliardConfig:
    if args.si:
        if args.a is None or args.mu is None or args.hbar is None:
            raise ValueError("--si requires explicit --a, --mu and --hbar")
        return BilliardConfig(args.a, args.mu, args.hbar, args.variant)
    if args.a is not None or args.mu is not None or args.hbar is not None:
        raise ValueError("--a/--mu/--hbar need --si; default mode is dimensionless")
    return BilliardConfig(variant=args.variant)


def _apply_preset(args, command: str) -> dict:
    """Fill unset (None) arguments from the preset; return the preset dict."""
    name = getattr(args, "preset", None)
    if not name:
        return {}
    if name not in PRESETS:
        raise ValueError(f"unknown preset {name!r}")
    preset = PRESETS[name]
    if preset["command"] != command:
        raise ValueError(f"preset {name!r} belongs to subcommand {preset['command']!r}")
    for key, val in preset.items():
        if key == "command":
            continue
        if getattr(args, key, None) is None:
            setattr(args, key, val)
    return preset


def _packet_args(sp) -> None:
    sp.add_argument("--x0", type=float, default=None)
    sp.add_argument("--y0", type=float, default=None)
    sp.add_argument("--p0", type=float, default=None, help="momentum magnitude")
    sp.add_argument("--theta", type=float, default=None, help="launch angle, degrees")
    sp.add_argument("--b", type=float, default=None, help="width parameter")
    sp.add_argument("--eps-max", type=int, default=None, dest="eps_max")
    sp.add_argument("--prune-tail", type=float, default=None, dest="prune_tail",
                    help="drop smallest coefficients carrying at most this weight")


def _packet(args) -> GaussianPacket:
    vals = {"x0": args.x0, "y0": args.y0, "p0": args.p0, "theta": args.theta, "b": args.b}
    missing = [k for k, v in vals.items() if v is None]
    if missing:
        raise ValueError(f"missing packet parameters: {', '.join('--' + m for m in missing)}")
    return GaussianPacket.from_polar(args.x0, args.y0, args.p0, args.theta, args.b)


def _expand(args, cfg):
    table = expand(_packet(args), cfg, args.eps_max)
    if args.prune_tail:
        table = table.prune(args.prune_tail)
    return table


def _sym_name(code: int) -> str:
    return (MINUS, PLUS, SPECIAL)[code]


# ---------------------------------------------------------------- subcommands

def cmd_spectrum(args) -> int:
    cfg = _config(args)
    levels = enumerate_levels(cfg, args.count)
    params = dict(count=args.count, variant=cfg.variant, format=args.format)
    rows = [
        (i, lv.qn.m, lv.qn.n, lv.qn.sym, lv.epsilon, lv.k * cfg.a, lv.epsilon, lv.degeneracy)
        for i, lv in enumerate(levels)
    ]
    if args.format == "json":
        payload = _meta("spectrum", params)
        payload["levels"] = [
            dict(index=r[0], m=r[1], n=r[2], sym=r[3], epsilon=r[4],
                 k_a=r[5], E_over_E0=r[6], degeneracy=r[7])
            for r in rows
        ]
        write_json(args.out or "spectrum.json", payload)
    else:
        write_csv(args.out or "spectrum.csv", _meta("spectrum", params),
                  ["index", "m", "n", "sym", "epsilon", "k_a", "E_over_E0", "degeneracy"],
                  rows)
    return 0


def cmd_weyl(args) -> int:
    cfg = _config(args)
    levels = enumerate_levels(cfg, args.levels)
    eps = np.array([lv.epsilon for lv in levels], dtype=float)
    rows = []
    for i, lv in enumerate(levels):
        stair = int(np.searchsorted(eps, lv.epsilon, side="right"))
        smooth = weyl_count(cfg, lv.energy)
        rows.append((i, lv.epsilon, lv.epsilon, stair, smooth, stair - smooth))
    write_csv(args.out or "weyl.csv",
              _meta("weyl", dict(levels=args.levels, variant=cfg.variant)),
              ["index", "epsilon", "E_over_E0", "staircase", "smooth", "diff"],
              rows)
    return 0


def _eigfun_grid(cfg, k):
    xmax = cfg.a / 2.0
    xmin = 0.0 if cfg.variant == HALF else -xmax
    x = np.linspace(xmin, xmax, k)
    y = np.linspace(0.0, SQRT3 * cfg.a / 2.0, k)
    return x, y


def _eigfun_rows(qn, cfg, k, extra=()):
    x, y = _eigfun_grid(cfg, k)
    X, Y = np.meshgrid(x, y, indexing="ij")
    vals = psi(qn, X, Y, cfg)
    ins = inside(X, Y, cfg)
    for i in range(k):
        for j in range(k):
            yield (*extra, X[i, j], Y[i, j], vals[i, j], ins[i, j])


def cmd_eigfun(args) -> int:
    _apply_preset(args, "eigfun")
    if getattr(args, "preset", None) == "paper-fig2":
        args.variant = HALF
        cfg = _config(args)
        k = args.grid or 121
        base = [(3, 1), (4, 1), (5, 2)]
        panels = []
        for col, (m, n) in enumerate(base):
            panels.append(("base", col, m, n))
            panels.append(("triple", col, 2 * m - n, m - 2 * n))
            panels.append(("doubled", col, 2 * m, 2 * n))
        rows = []
        for rowname, col, m, n in panels:
            qn = QuantumNumbers(m, n, MINUS)
            rows.extend(_eigfun_rows(qn, cfg, k, extra=(rowname, col, m, n, MINUS)))
        write_csv(args.out or "eigfun.csv",
                  _meta("eigfun", dict(preset="paper-fig2", grid=k, variant=cfg.variant)),
                  ["panel_row", "panel_col", "m", "n", "sym", "x", "y", "psi", "inside"],
                  rows)
        return 0
    cfg = _config(args)
    if args.m is None or args.n is None or args.sym is None:
        raise ValueError("eigfun needs --m, --n and --sym (or --preset paper-fig2)")
    qn = QuantumNumbers(args.m, args.n, args.sym)
    k = args.grid or 201
    write_csv(args.out or "eigfun.csv",
              _meta("eigfun", dict(m=args.m, n=args.n, sym=args.sym, grid=k, variant=cfg.variant)),
              ["x", "y", "psi", "inside"],
              _eigfun_rows(qn, cfg, k))
    return 0


def cmd_orbits(args) -> int:
    cfg = _config(args)
    catalog = enumerate_orbits(args.lmax * cfg.a, cfg.variant, cfg.a)
    params = dict(lmax=args.lmax, variant=cfg.variant, expand_recurrences=bool(args.expand_recurrences))
    if args.expand_recurrences:
        rows = [
            (o.i_bar, o.j_bar, o.p, o.q, o.angle_deg, mult, L / cfg.a, o.isolated, o.length / cfg.a)
            for (L, o, mult) in orbit_features(catalog)
        ]
        header = ["i_bar", "j_bar", "p", "q", "theta_deg", "multiple",
                  "L_over_a", "isolated", "primitive_length_over_a"]
    else:
        rows = [
            (o.i_bar, o.j_bar, o.p, o.q, o.angle_deg, o.length / cfg.a,
             ";".join(repr(L / cfg.a) for L in o.recurrences), o.isolated)
            for o in catalog
        ]
        header = ["i_bar", "j_bar", "p", "q", "theta_deg",
                  "primitive_length_over_a", "recurrences", "isolated"]
    write_csv(args.out or "orbits.csv", _meta("orbits", params), header, rows)
    return 0


def cmd_length_spectrum(args) -> int:
    _apply_preset(args, "length-spectrum")
    compare = args.compare or getattr(args, "preset", None) == "paper-fig7"
    levels = args.levels or 1000
    lmax = args.lmax if args.lmax is not None else 20.0
    dl = args.dl if args.dl is not None else 0.002
    prom = args.prominence if args.prominence is not None else 5.0
    params = dict(levels=levels, lmax=lmax, dl=dl, prominence=prom,
                  window_sigma=args.window_sigma or 0.0)
    if compare:
        cfg = _config(args)
        report, spectra = compare_variants(cfg, levels, lmax, dl, prom)
        rows = []
        for variant in (FULL, HALF):
            spec = spectra[variant]
            pn = spec.power_normalized
            for i, L in enumerate(spec.L):
                rows.append((variant, L / cfg.a, spec.rho[i].real, spec.rho[i].imag, pn[i]))
        write_csv(args.out or "length_spectrum.csv",
                  _meta("length-spectrum", {**params, "compare": True}),
                  ["variant", "L_over_a", "re_rho", "im_rho", "power_norm"], rows)
        write_json(args.peaks or "length_spectrum.peaks.json",
                   {**_meta("length-spectrum", {**params, "compare": True}), "report": report})
        return 0
    cfg = _config(args)
    params["variant"] = cfg.variant
    spec = compute_rho(cfg, levels, default_grid(cfg, lmax, dl), args.window_sigma or 0.0)
    pn = spec.power_normalized
    rows = [
        (L / cfg.a, spec.rho[i].real, spec.rho[i].imag, pn[i])
        for i, L in enumerate(spec.L)
    ]
    write_csv(args.out or "length_spectrum.csv", _meta("length-spectrum", params),
              ["L_over_a", "re_rho", "im_rho", "power_norm"], rows)
    peaks = detect_peaks(spec, prom)
    feats = orbit_features(enumerate_orbits(lmax * cfg.a, cfg.variant, cfg.a))
    payload = _meta("length-spectrum", params)
    payload["peaks"] = [{"L": round(L, 6), "power": p} for L, p in peaks]
    payload["matches"] = match_features(peaks, feats, 0.05 * cfg.a)
    write_json(args.peaks or "length_spectrum.peaks.json", payload)
    return 0


def _trace_rows(label_cols, series, tau, t_rev):
    for i, t in enumerate(series.t):
        t_tau = t / tau if tau else float("nan")
        yield (*label_cols, t, t_tau, t / t_rev, abs(series.A[i]),
               series.A[i].real, series.A[i].imag)


def cmd_autocorr(args) -> int:
    preset_name = getattr(args, "preset", None)
    _apply_preset(args, "autocorr")
    cfg = _config(args)
    t_rev = revival_time(cfg)
    points = args.points or 2000
    header = ["trace", "theta_deg", "x0", "y0", "t", "t_over_tau", "t_over_trev",
              "abs_A", "re_A", "im_A"]

    def one_trace(x0, y0, theta):
        pk = GaussianPacket.from_polar(x0, y0, args.p0, theta, args.b)
        table = expand(pk, cfg, args.eps_max)
        if args.prune_tail:
            table = table.prune(args.prune_tail)
        tau = cfg.a / (pk.p0 / cfg.mu) if pk.p0 > 0 else None
        if args.tmax_tau is not None:
            if tau is None:
                raise ValueError("--tmax-tau needs a nonzero momentum; use --tmax-trev")
            tmax = args.tmax_tau * tau
        else:
            tmax = (args.tmax_trev if args.tmax_trev is not None else 1.0) * t_rev
        t = np.linspace(0.0, tmax, points)
        series = autocorrelation(table, cfg, t)
        return pk, table, series, tau

    rows = []
    norms = {}
    if preset_name == "paper-fig8":
        sweeps = [(f"center-{th}", 0.0, CENTROID_Y, th) for th in FIG8_THETAS]
        sweeps.append(("offcenter-0.0", 0.0, QUARTER_Y, 0.0))
    elif preset_name == "paper-fig9":
        sweeps = [(f"y0-{round(y0, 6)}", 0.0, y0, 0.0) for y0 in FIG9_Y0S]
    else:
        pk0 = _packet(args)
        sweeps = [("trace", pk0.x0, pk0.y0, args.theta)]
    for label, x0, y0, theta in sweeps:
        pk, table, series, tau = one_trace(x0, y0, theta)
        norms[label] = table.captured_norm
        rows.extend(_trace_rows((label, theta, x0, y0), series, tau, t_rev))
    ts = timescales_for_packet(cfg, GaussianPacket.from_polar(0.0, CENTROID_Y, args.p0, 0.0, args.b))
    params = dict(p0=args.p0, b=args.b, points=points, variant=cfg.variant,
                  preset=preset_name, prune_tail=args.prune_tail,
                  tmax_tau=args.tmax_tau, tmax_trev=args.tmax_trev,
                  x0=args.x0, y0=args.y0, theta=args.theta)
    meta = _meta("autocorr", params, t_rev=t_rev, t0=ts.t0,
                 tau=(cfg.a * cfg.mu / args.p0 if args.p0 else None),
                 captured_norm={k: norms[k] for k in sorted(norms)})
    write_csv(args.out or "autocorr.csv", meta, header, rows)
    return 0


def cmd_expand(args) -> int:
    cfg = _config(args)
    table = _expand(args, cfg)
    packet = table.packet
    meta = _meta("expand", dict(
        x0=packet.x0, y0=packet.y0, p0=args.p0, theta=args.theta, b=args.b,
        eps_max=table.eps_max, variant=cfg.variant, prune_tail=args.prune_tail,
    ), captured_norm=table.captured_norm,
       energy_expectation=energy_expectation(table, cfg))
    rows = [
        (int(m), int(n), _sym_name(int(s)), int(e), c.real, c.imag, abs(c) ** 2)
        for m, n, s, e, c in zip(table.m, table.n, table.sym, table.eps, table.coeff)
    ]
    write_csv(args.out or "coefficients.csv", meta,
              ["m", "n", "sym", "epsilon", "re_a", "im_a", "abs2"], rows)
    return 0


def cmd_revivals(args) -> int:
    cfg = _config(args)
    table = _expand(args, cfg)
    fractions = tuple(int(f) for f in args.fractions.split(","))
    report = revival_scan(table, cfg, fractions, args.threshold)
    packet = table.packet
    payload = _meta("revivals", dict(
        x0=packet.x0, y0=packet.y0, p0=args.p0, theta=args.theta, b=args.b,
        fractions=list(fractions), threshold=args.threshold, variant=cfg.variant,
    ), captured_norm=table.captured_norm)
    payload["report"] = report
    write_json(args.out or "revivals.json", payload)
    return 0


def cmd_density(args) -> int:
    cfg = _config(args)
    table = _expand(args, cfg)
    k = args.grid or 200
    xmax = cfg.a / 2.0
    x = np.linspace(0.0 if cfg.variant == HALF else -xmax, xmax, k)
    y = np.linspace(0.0, SQRT3 * cfg.a / 2.0, k)
    rho = density_snapshot(table, cfg, args.t, x, y)
    X, Y = np.meshgrid(x, y, indexing="ij")
    ins = inside(X, Y, cfg)
    rho = np.where(ins, rho, 0.0)
    rows = []
    for i in range(k):
        for j in range(k):
            rows.append((X[i, j], Y[i, j], rho[i, j], ins[i, j]))
    packet = table.packet
    meta = _meta("density", dict(
        x0=packet.x0, y0=packet.y0, p0=args.p0, theta=args.theta, b=args.b,
        t=args.t, grid=k, variant=cfg.variant, prune_tail=args.prune_tail,
    ), captured_norm=table.captured_norm, t_rev=revival_time(cfg))
    write_csv(args.out or "density.csv", meta, ["x", "y", "rho", "inside"], rows)
    return 0


def cmd_transform(args) -> int:
    t = QNTransform(args.p, args.q)
    report = epsilon_multiplicativity_check(t, args.m, args.n)
    payload = _meta("transform", dict(p=args.p, q=args.q, m=args.m, n=args.n))
    payload.update(
        input=list(report["input"]),
        raw_image=list(report["raw_image"]),
        image=list(report["image"]),
        chain=list(report["chain"]),
        epsilon_in=report["epsilon_in"],
        epsilon_out=report["epsilon_out"],
        factor=report["factor"],
        vanishing_image=report["vanishing_image"],
    )
    if args.out:
        write_json(args.out, payload)
    else:
        json.dump(payload, sys.stdout, sort_keys=True, indent=2)
        sys.stdout.write("\n")
    return 0


def cmd_symcheck(args) -> int:
    cfg = _config(args)
    dev = check_symmetry_relations(args.m, args.n, cfg, args.f)
    payload = _meta("symcheck", dict(m=args.m, n=args.n, f=args.f, variant=cfg.variant))
    payload["max_deviation"] = dev
    payload["all_below_1e-10"] = bool(all(v < 1e-10 for v in dev.values()))
    if args.out:
        write_json(args.out, payload)
    else:
        json.dump(payload, sys.stdout, sort_keys=True, indent=2)
        sys.stdout.write("\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="tribilliard",
        description="Exact spectra, closed orbits and wave-packet dynamics "
                    "of the equilateral-triangle billiard and its 30-60-90 half",
    )
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="lowest levels with degeneracies")
    sp.add_argument("--count", type=int, required=True)
    sp.add_argument("--format", choices=["csv", "json"], default="csv")
    sp.add_argument("--out")
    _add_config_args(sp)
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("weyl", help="staircase count vs smooth area+perimeter rule")
    sp.add_argument("--levels", type=int, default=1000)
    sp.add_argument("--out")
    _add_config_args(sp)
    sp.set_defaults(func=cmd_weyl)

    sp = sub.add_parser("eigfun", help="eigenfunction values on a grid")
    sp.add_argument("--m", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--sym", choices=[MINUS, PLUS, SPECIAL])
    sp.add_argument("--grid", type=int, default=None)
    sp.add_argument("--preset", choices=["paper-fig2"])
    sp.add_argument("--out")
    _add_config_args(sp)
    sp.set_defaults(func=cmd_eigfun)

    sp = sub.add_parser("orbits", help="closed-orbit catalog with recurrences")
    sp.add_argument("--lmax", type=float, default=20.0)
    sp.add_argument("--expand-recurrences", action="store_true", dest="expand_recurrences")
    sp.add_argument("--out")
    _add_config_args(sp)
    sp.set_defaults(func=cmd_orbits)

    sp = sub.add_parser("length-spectrum", help="Fourier length spectrum and peak report")
    sp.add_argument("--levels", type=int, default=None)
    sp.add_argument("--lmax", type=float, default=None)
    sp.add_argument("--dl", type=float, default=None)
    sp.add_argument("--window-sigma", type=float, default=None, dest="window_sigma")
    sp.add_argument("--prominence", type=float, default=None)
    sp.add_argument("--compare", action="store_true",
                    help="aligned full vs half run with shared/extra peak report")
    sp.add_argument("--preset", choices=["paper-fig5", "paper-fig7"])
    sp.add_argument("--out")
    sp.add_argument("--peaks", help="peak/match report path (JSON)")
    _add_config_args(sp)
    sp.set_defaults(func=cmd_length_spectrum)

    sp = sub.add_parser("expand", help="packet expansion coefficients")
    _packet_args(sp)
    sp.add_argument("--out")
    _add_config_args(sp)
    sp.set_defaults(func=cmd_expand)

    sp = sub.add_parser("autocorr", help="autocorrelation |A(t)| traces")
    _packet_args(sp)
    sp.add_argument("--tmax-tau", type=float, default=None, dest="tmax_tau",
                    help="trace length in units of tau = a/v0")
    sp.add_argument("--tmax-trev", type=float, default=None, dest="tmax_trev",
                    help="trace length in units of the revival time")
    sp.add_argument("--points", type=int, default=None)
    sp.add_argument("--preset", choices=["paper-fig8", "paper-fig9",
                                         "paper-fig9-centroid", "paper-fig9-quarter"])
    sp.add_argument("--out")
    _add_config_args(sp)
    sp.set_defaults(func=cmd_autocorr)

    sp = sub.add_parser("revivals", help="|A| at fractional-revival times")
    _packet_args(sp)
    sp.add_argument("--fractions", default="1,4,9")
    sp.add_argument("--threshold", type=float, default=0.9)
    sp.add_argument("--out")
    _add_config_args(sp)
    sp.set_defaults(func=cmd_revivals)

    sp = sub.add_parser("density", help="probability density snapshot on a grid")
    _packet_args(sp)
    sp.add_argument("--t", type=float, required=True)
    sp.add_argument("--grid", type=int, default=None)
    sp.add_argument("--out")
    _add_config_args(sp)
    sp.set_defaults(func=cmd_density)

    sp = sub.add_parser("transform", help="integer index transformation with energy factor")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_transform)

    sp = sub.add_parser("symcheck", help="verify eigenfunction symmetry/fold identities")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--f", type=int, default=2)
    sp.add_argument("--out")
    _add_config_args(sp)
    sp.set_defaults(func=cmd_symcheck)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
