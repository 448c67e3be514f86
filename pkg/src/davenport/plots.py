"""Figure rendering for bound tables: one bounds-vs-m figure and one
normalized-ratio figure per (shape, d), written as PNG files next to the
delimited output."""

from __future__ import annotations

import os
from collections import defaultdict

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def render_bounds_plots(rows: list, outdir: str) -> list:
    """Render the bound rows grouped by (shape, d); returns written paths."""
    os.makedirs(outdir, exist_ok=True)
    groups = defaultdict(lambda: defaultdict(dict))
    for r in rows:
        groups[(r["shape"], r["d"])][r["bound_name"]][r["m"]] = r["value"]
    written = []
    for (shape, d), series in sorted(groups.items()):
        fig, (ax, axr) = plt.subplots(1, 2, figsize=(11, 4.2))
        for name, by_m in sorted(series.items()):
            ms = sorted(by_m)
            vals = [by_m[m] for m in ms]
            style = "--" if name.startswith("asym") else "-"
            ax.plot(ms, vals, style, marker=".", label=name)
            axr.plot(ms, [v / m ** d for m, v in zip(ms, vals)], style,
                     marker=".", label=name)
        ax.set_xlabel("m")
        ax.set_ylabel("bound value")
        ax.set_yscale("log")
        ax.set_title(f"{shape} d={d}")
        ax.legend(fontsize=7)
        axr.set_xlabel("m")
        axr.set_ylabel(f"value / m^{d}")
        axr.set_title(f"{shape} d={d}, normalized")
        axr.legend(fontsize=7)
        fig.tight_layout()
        path = os.path.join(outdir, f"bounds_{shape}{d}.png")
        fig.savefig(path, dpi=130)
        plt.close(fig)
        written.append(path)
    return written
