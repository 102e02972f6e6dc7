"""Stacked autocorrelation traces with closed-orbit star markers.

Input: an `autocorr --preset paper-fig8` CSV (one trace per launch angle plus
the off-center trace) and an orbit feature CSV.  Each trace is offset
vertically; a star is drawn at (t/tau = L/a, trace offset) for every catalog
feature whose launch angle matches the trace angle, since the classical
return time of a closed orbit in units of tau = a/v0 is its length in units
of a.  The off-center trace is dotted and additionally carries the
isolated-orbit stars.
"""

import argparse

import matplotlib.pyplot as plt

from common import finish, load_artifact, run_main, save_figure

TRACE_COLUMNS = ["trace", "theta_deg", "x0", "y0", "t", "t_over_tau",
                 "abs_A", "re_A", "im_A"]
ORBIT_COLUMNS = ["i_bar", "j_bar", "theta_deg", "multiple", "L_over_a", "isolated"]
ANGLE_TOL = 0.3   # preset angles are table values rounded to 0.1 degree
SPACING = 0.9


def render(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--in", dest="traces", required=True)
    ap.add_argument("--orbits", required=True)
    ap.add_argument("--out", required=True)
    ap.add_argument("--dpi", type=int, default=150)
    ap.add_argument("--no-markers", action="store_true")
    args = ap.parse_args(argv)

    meta, rows = load_artifact(args.traces, TRACE_COLUMNS)
    _, orows = load_artifact(args.orbits, ORBIT_COLUMNS)

    traces = {}
    for r in rows:
        traces.setdefault(r["trace"], []).append(r)

    def sort_key(item):
        label, trs = item
        return (label.startswith("offcenter"), float(trs[0]["theta_deg"]))

    ordered = sorted(traces.items(), key=sort_key, reverse=True)

    fig, ax = plt.subplots(figsize=(7, 9))
    n_stars = 0
    tmax = 0.0
    for idx, (label, trs) in enumerate(ordered):
        off = idx * SPACING
        tt = [float(r["t_over_tau"]) for r in trs]
        aa = [float(r["abs_A"]) + off for r in trs]
        offcenter = label.startswith("offcenter")
        ax.plot(tt, aa, lw=0.7, color="k", ls=":" if offcenter else "-")
        tmax = max(tmax, max(tt))
        theta = float(trs[0]["theta_deg"])
        ax.text(-0.4, off + 0.25, f"{theta:.1f}" + (r"$^\circ$" if not offcenter else r"$^\circ\,\prime$"),
                ha="right", va="center", fontsize=8)
        if args.no_markers:
            continue
        for orow in orows:
            iso = orow["isolated"] == "1"
            if iso and not offcenter:
                continue
            if abs(float(orow["theta_deg"]) - theta) > ANGLE_TOL:
                continue
            L = float(orow["L_over_a"])
            if L <= tmax:
                ax.plot([L], [off + 1.02], marker="*", ms=7, color="0.2", ls="none")
                n_stars += 1
    ax.set_xlim(0, tmax)
    ax.set_xlabel(r"$t/\tau$")
    ax.set_ylabel(r"$|A(t)|$ (offset per trace)")
    ax.set_yticks([])
    fig.tight_layout()
    files = save_figure(fig, args.out, args.dpi)
    return finish({
        "figure": "fig8", "n_traces": len(traces), "markers_stars": n_stars,
        **files,
    })


if __name__ == "__main__":
    raise SystemExit(run_main(render))
