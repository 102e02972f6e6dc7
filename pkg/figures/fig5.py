"""Length-spectrum power plot with closed-orbit markers.

Input: a `length-spectrum` CSV and an `orbits --expand-recurrences` CSV.
Non-isolated features become vertical dotted lines; isolated-orbit features
become downward arrows, matching the reference layout.
"""

import argparse

import matplotlib.pyplot as plt

from common import column, finish, load_artifact, run_main, save_figure

SPEC_COLUMNS = ["L_over_a", "re_rho", "im_rho", "power_norm"]
ORBIT_COLUMNS = ["i_bar", "j_bar", "theta_deg", "multiple", "L_over_a", "isolated"]


def add_feature_markers(ax, rows, ymax, lmax):
    n_lines = n_arrows = 0
    for r in rows:
        L = float(r["L_over_a"])
        if L > lmax:
            continue
        if r["isolated"] == "1":
            ax.annotate("", xy=(L, 0.02 * ymax), xytext=(L, 0.22 * ymax),
                        arrowprops=dict(arrowstyle="->", lw=1.0))
            n_arrows += 1
        else:
            ax.axvline(L, ls=":", lw=0.7, color="0.4", zorder=0)
            n_lines += 1
    return n_lines, n_arrows


def render(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--in", dest="spec", required=True)
    ap.add_argument("--orbits", required=True)
    ap.add_argument("--out", required=True)
    ap.add_argument("--dpi", type=int, default=150)
    ap.add_argument("--no-markers", action="store_true")
    args = ap.parse_args(argv)

    meta, rows = load_artifact(args.spec, SPEC_COLUMNS)
    L = column(rows, "L_over_a")
    P = column(rows, "power_norm")
    _, orows = load_artifact(args.orbits, ORBIT_COLUMNS)

    fig, ax = plt.subplots(figsize=(8, 4))
    ax.plot(L, P, lw=0.6, color="k")
    interior = [p for l, p in zip(L, P) if l >= 0.5]
    ymax = 1.2 * max(interior) if interior else 1.0
    ax.set_xlim(0, max(L))
    ax.set_ylim(0, ymax)
    ax.set_xlabel(r"$L/a$")
    ax.set_ylabel(r"$|\rho_N(L)|^2 / N^2$")
    n_lines = n_arrows = 0
    if not args.no_markers:
        n_lines, n_arrows = add_feature_markers(ax, orows, ymax, max(L))
    fig.tight_layout()
    files = save_figure(fig, args.out, args.dpi)
    return finish({
        "figure": "fig5", "n_points": len(L),
        "markers_vlines": n_lines, "markers_arrows": n_arrows,
        "markers_total": n_lines + n_arrows, "orbit_rows": len(orows),
        **files,
    })


if __name__ == "__main__":
    raise SystemExit(run_main(render))
