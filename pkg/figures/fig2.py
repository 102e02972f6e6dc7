"""Nodal-pattern panels for the half-well states and their folded images.

Input: an `eigfun --preset paper-fig2` CSV (nine panels: three states on the
top row, their energy-tripled images in the middle, their energy-quadrupled
images at the bottom).  White marks positive wavefunction values, black
negative, gray outside the domain.
"""

import argparse

import numpy as np
from matplotlib import colors
import matplotlib.pyplot as plt

from common import finish, load_artifact, run_main, save_figure

COLUMNS = ["panel_row", "panel_col", "m", "n", "sym", "x", "y", "psi", "inside"]
ROW_ORDER = ["base", "triple", "doubled"]


def render(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--in", dest="grid", required=True)
    ap.add_argument("--out", required=True)
    ap.add_argument("--dpi", type=int, default=150)
    args = ap.parse_args(argv)

    meta, rows = load_artifact(args.grid, COLUMNS)
    panels = {}
    for r in rows:
        panels.setdefault((r["panel_row"], int(r["panel_col"])), []).append(r)

    ncols = 1 + max(c for _, c in panels)
    fig, axes = plt.subplots(len(ROW_ORDER), ncols, figsize=(2.2 * ncols, 7.2))
    cmap = colors.ListedColormap(["black", "0.75", "white"])
    for (rowname, colidx), prs in sorted(panels.items(), key=lambda kv: (ROW_ORDER.index(kv[0][0]), kv[0][1])):
        ax = axes[ROW_ORDER.index(rowname)][colidx]
        xs = np.array([float(r["x"]) for r in prs])
        ys = np.array([float(r["y"]) for r in prs])
        ps = np.array([float(r["psi"]) for r in prs])
        ins = np.array([r["inside"] == "1" for r in prs])
        xu, yu = np.unique(xs), np.unique(ys)
        sign = np.zeros((len(xu), len(yu)))
        ix = np.searchsorted(xu, xs)
        iy = np.searchsorted(yu, ys)
        sign[ix, iy] = np.where(ins, np.where(ps >= 0, 1.0, -1.0), 0.0)
        ax.pcolormesh(xu, yu, sign.T, cmap=cmap, vmin=-1, vmax=1, shading="nearest")
        ax.set_aspect("equal")
        ax.set_xticks([])
        ax.set_yticks([])
        m, n = prs[0]["m"], prs[0]["n"]
        ax.set_title(f"({m},{n})", fontsize=9)
    fig.tight_layout()
    files = save_figure(fig, args.out, args.dpi)
    return finish({"figure": "fig2", "n_panels": len(panels), **files})


if __name__ == "__main__":
    raise SystemExit(run_main(render))
