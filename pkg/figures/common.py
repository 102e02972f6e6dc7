"""Shared plumbing for the figure scripts: artifact loading and deterministic output.

Every script reads CSV artifacts produced by the `tribilliard` CLI (first line
is a '#'-prefixed JSON metadata record), validates the column schema before
rendering, and never recomputes physics: marker positions come from the orbit
and autocorrelation artifacts themselves.
"""

from __future__ import annotations

import csv
import json
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "tribilliard-figures"

import matplotlib.pyplot as plt  # noqa: E402


class SchemaError(Exception):
    pass


def load_artifact(path, required: list[str]):
    """Parse a CLI artifact; returns (meta, list of row dicts).

    Raises SchemaError with the column diff when the header does not carry
    every required column.
    """
    lines = Path(path).read_text().splitlines()
    if not lines or not lines[0].startswith("# "):
        raise SchemaError(f"{path}: missing '# ' JSON metadata line")
    meta = json.loads(lines[0][2:])
    reader = csv.DictReader(lines[1:])
    have = reader.fieldnames or []
    missing = [c for c in required if c not in have]
    if missing:
        raise SchemaError(
            f"{path}: missing columns {missing}; found {have}"
        )
    return meta, list(reader)


def column(rows, name, cast=float):
    return [cast(r[name]) for r in rows]


def save_figure(fig, out_base: str, dpi: int) -> dict:
    """Write out_base.png and out_base.svg; the SVG is byte-stable across runs."""
    out = {}
    svg = f"{out_base}.svg"
    png = f"{out_base}.png"
    fig.savefig(svg, metadata={"Date": None})
    fig.savefig(png, dpi=dpi)
    out["svg"] = svg
    out["png"] = png
    plt.close(fig)
    return out


def finish(stats: dict) -> int:
    json.dump(stats, sys.stdout, sort_keys=True)
    sys.stdout.write("\n")
    return 0


def run_main(render, argv=None) -> int:
    try:
        return render(argv)
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3
