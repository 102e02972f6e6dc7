"""Full-well vs half-well length-spectrum comparison.

Input: a `length-spectrum --compare` CSV (stacked by variant) and a
half-variant `orbits --expand-recurrences` CSV, whose catalog carries both
the shared families and the two isolated orbits.  Curves are rescaled to
their own interior maxima to emphasize the common shape; the full curve is
dashed, the half curve solid, markers as in the single-variant plot.
"""

import argparse

import matplotlib.pyplot as plt

from common import finish, load_artifact, run_main, save_figure
from fig5 import ORBIT_COLUMNS, add_feature_markers

SPEC_COLUMNS = ["variant", "L_over_a", "re_rho", "im_rho", "power_norm"]


def render(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--in", dest="spec", required=True)
    ap.add_argument("--orbits", required=True, help="half-variant feature table")
    ap.add_argument("--out", required=True)
    ap.add_argument("--dpi", type=int, default=150)
    ap.add_argument("--no-markers", action="store_true")
    args = ap.parse_args(argv)

    meta, rows = load_artifact(args.spec, SPEC_COLUMNS)
    _, orows = load_artifact(args.orbits, ORBIT_COLUMNS)

    fig, ax = plt.subplots(figsize=(8, 4))
    styles = {"full": dict(ls="--", color="0.45", lw=0.7),
              "half": dict(ls="-", color="k", lw=0.7)}
    lmax = 0.0
    for variant, style in styles.items():
        sel = [r for r in rows if r["variant"] == variant]
        L = [float(r["L_over_a"]) for r in sel]
        P = [float(r["power_norm"]) for r in sel]
        scale = max(p for l, p in zip(L, P) if l >= 0.5)
        ax.plot(L, [p / scale for p in P], label=variant, **style)
        lmax = max(lmax, max(L))
    ax.set_xlim(0, lmax)
    ax.set_ylim(0, 1.3)
    ax.set_xlabel(r"$L/a$")
    ax.set_ylabel(r"$|\rho_N(L)|^2$ (rescaled)")
    ax.legend(loc="upper right", frameon=False)
    n_lines = n_arrows = 0
    if not args.no_markers:
        n_lines, n_arrows = add_feature_markers(ax, orows, 1.3, lmax)
    fig.tight_layout()
    files = save_figure(fig, args.out, args.dpi)
    return finish({
        "figure": "fig7",
        "markers_vlines": n_lines, "markers_arrows": n_arrows,
        "markers_total": n_lines + n_arrows, "orbit_rows": len(orows),
        **files,
    })


if __name__ == "__main__":
    raise SystemExit(run_main(render))
