"""Deterministic SVG drawings of torus colorings.

Cells are laid out like the figures they come from: row 0 at the bottom,
column 0 on the left. Wraparound edges are drawn as arcs, row wraps on the
left of the grid and column wraps under it.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib as mpl
from matplotlib.backends.backend_svg import FigureCanvasSVG
from matplotlib.figure import Figure
from matplotlib.patches import FancyArrowPatch, Rectangle

# Okabe-Ito, minus black; one entry per color id 1..6.
PALETTE = ("#E69F00", "#56B4E9", "#009E73", "#F0E442", "#0072B2", "#D55E00")

SVG_RC = {
    "svg.hashsalt": "star-torus",
    "svg.fonttype": "none",
    "font.family": "DejaVu Sans",
    "font.size": 9,
    "path.simplify": False,
}

CELL = 0.42  # inches per grid step


def fill_for(color_id: int) -> str:
    if not 1 <= color_id <= len(PALETTE):
        raise ValueError(f"no fill for color id {color_id} (palette has {len(PALETTE)})")
    return PALETTE[color_id - 1]


def draw_torus(grid: Sequence[Sequence[int]], title: str | None = None) -> Figure:
    m, n = len(grid), len(grid[0])
    top = 0.8 if title else 0.3
    fig = Figure(figsize=(CELL * (n + 0.6), CELL * (m + 0.3 + top)))
    FigureCanvasSVG(fig)
    ax = fig.add_axes((0, 0, 1, 1))
    ax.set_xlim(-0.3, n + 0.3)
    ax.set_ylim(-0.3, m + top)
    ax.set_aspect("equal")
    ax.axis("off")

    grid_style = dict(color="#444444", lw=0.8, zorder=1)
    for r in range(m):
        ax.plot([0.5, n - 0.5], [r + 0.5, r + 0.5], **grid_style)
    for c in range(n):
        ax.plot([c + 0.5, c + 0.5], [0.5, m - 0.5], **grid_style)

    # bend each wrap arc by half a step so it runs in the gap between cells
    arc_style = dict(arrowstyle="-", color="#888888", lw=0.8, ls="--", zorder=1)
    for r in range(m):
        ax.add_patch(FancyArrowPatch((0.5, r + 0.5), (n - 0.5, r + 0.5),
                                     connectionstyle=f"arc3,rad={0.5 / (n - 1):.4f}", **arc_style))
    for c in range(n):
        ax.add_patch(FancyArrowPatch((c + 0.5, 0.5), (c + 0.5, m - 0.5),
                                     connectionstyle=f"arc3,rad={-0.5 / (m - 1):.4f}", **arc_style))

    for r, row in enumerate(grid):
        for c, color_id in enumerate(row):
            cell = Rectangle((c + 0.2, r + 0.2), 0.6, 0.6, facecolor=fill_for(color_id),
                             edgecolor="black", lw=0.8, zorder=2)
            cell.set_gid(f"cell-{r}-{c}")
            ax.add_patch(cell)
            ax.text(c + 0.5, r + 0.5, str(color_id), ha="center", va="center", zorder=3)
    if title:
        ax.text(n / 2, m + top / 2 - 0.05, title, ha="center", va="center", fontsize=11)
    return fig


def render_svg(grid: Sequence[Sequence[int]], out: str | Path, title: str | None = None) -> Path:
    """Write the drawing to ``out``; identical input gives identical bytes."""
    out = Path(out)
    with mpl.rc_context(SVG_RC):
        fig = draw_torus(grid, title)
        fig.savefig(out, format="svg", metadata={"Date": None})
    return out
