"""Zero-momentum revival traces with fractional-revival tick marks.

Input: an `autocorr --preset paper-fig9` CSV (one trace per start position on
the bisector).  |A(t)|^2 is plotted against t/T_rev, one offset trace per
position; the traces at the two special symmetry points get tick marks at
multiples of T_rev/9 (geometric center) and T_rev/4 (half way down the
bisector), where their shorter exact revivals occur.
"""

import argparse
import math

import matplotlib.pyplot as plt

from common import finish, load_artifact, run_main, save_figure

TRACE_COLUMNS = ["trace", "y0", "t", "t_over_trev", "abs_A", "re_A", "im_A"]
SPACING = 1.1
Y_CENTROID = math.sqrt(3.0) / 3.0
Y_QUARTER = math.sqrt(3.0) / 4.0


def render(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--in", dest="traces", required=True)
    ap.add_argument("--out", required=True)
    ap.add_argument("--dpi", type=int, default=150)
    ap.add_argument("--no-markers", action="store_true")
    args = ap.parse_args(argv)

    meta, rows = load_artifact(args.traces, TRACE_COLUMNS)
    traces = {}
    for r in rows:
        traces.setdefault(r["trace"], []).append(r)
    ordered = sorted(traces.items(), key=lambda kv: float(kv[1][0]["y0"]))

    fig, ax = plt.subplots(figsize=(7, 8))
    n_ticks = 0
    for idx, (label, trs) in enumerate(ordered):
        off = idx * SPACING
        y0 = float(trs[0]["y0"])
        tt = [float(r["t_over_trev"]) for r in trs]
        a2 = [float(r["abs_A"]) ** 2 + off for r in trs]
        ax.plot(tt, a2, lw=0.7, color="k")
        marker = ""
        if abs(y0 - Y_CENTROID) < 1e-9:
            marker, frac = r"$\blacksquare$", 9
        elif abs(y0 - Y_QUARTER) < 1e-9:
            marker, frac = r"$\bullet$", 4
        ax.text(-0.03, off + 0.45, f"$y_0$={y0:.4f} {marker}",
                ha="right", va="center", fontsize=8)
        if marker and not args.no_markers:
            for k in range(1, frac + 1):
                ax.plot([k / frac], [off + 1.04], marker="|", ms=8, color="0.2")
                n_ticks += 1
    ax.set_xlim(0, 1.0)
    ax.set_xlabel(r"$t/T_{rev}$")
    ax.set_ylabel(r"$|A(t)|^2$ (offset per trace)")
    ax.set_yticks([])
    fig.tight_layout()
    files = save_figure(fig, args.out, args.dpi)
    return finish({
        "figure": "fig9", "n_traces": len(traces), "markers_ticks": n_ticks,
        **files,
    })


if __name__ == "__main__":
    raise SystemExit(run_main(render))
