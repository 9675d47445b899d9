"""Figures for constructions and sweep reports (written to files, never shown)."""

from __future__ import annotations

import math
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .graph import EdgeColouring  # noqa: E402

RED = "#c0392b"
BLUE = "#2471a3"


def _layout(n: int, parts: Sequence[Sequence[int]] | None) -> dict[int, tuple[float, float]]:
    """Vertices on a circle; each part occupies a contiguous arc with a gap."""
    order = [v for p in parts for v in p] if parts else list(range(n))
    order += [v for v in range(n) if v not in set(order)]
    gaps = len(parts) if parts else 0
    slots = n + gaps
    pos, slot = {}, 0
    boundaries = set()
    if parts:
        acc = 0
        for p in parts:
            acc += len(p)
            boundaries.add(acc)
    for idx, v in enumerate(order):
        angle = 2 * math.pi * slot / max(slots, 1)
        pos[v] = (math.cos(angle), math.sin(angle))
        slot += 1
        if idx + 1 in boundaries:
            slot += 1
    return pos


def draw_colouring(
    colouring: EdgeColouring,
    path: str | Path,
    parts: Sequence[Sequence[int]] | None = None,
    title: str = "",
    highlight: Sequence[int] | None = None,
) -> Path:
    g = colouring.graph
    pos = _layout(g.n, parts)
    fig, ax = plt.subplots(figsize=(5, 5))
    for u, v in g.edges():
        red = colouring.is_red(u, v)
        ax.plot(
            [pos[u][0], pos[v][0]],
            [pos[u][1], pos[v][1]],
            color=RED if red else BLUE,
            lw=0.8 if red else 1.6,
            alpha=0.55 if red else 0.9,
            zorder=1,
        )
    hl = set(highlight or ())
    xs = [pos[v][0] for v in range(g.n)]
    ys = [pos[v][1] for v in range(g.n)]
    ax.scatter(xs, ys, s=140, c=["#f4d03f" if v in hl else "white" for v in range(g.n)],
               edgecolors="black", zorder=2)
    for v in range(g.n):
        ax.annotate(str(v), pos[v], ha="center", va="center", fontsize=7, zorder=3)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title, fontsize=10)
    path = Path(path)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def plot_sweep(report, path: str | Path) -> Path:
    """Min degree against edge count for every candidate graph, with the
    threshold and the extremal construction marked."""
    fig, ax = plt.subplots(figsize=(6, 4))
    rows = report.per_graph
    ok = [row for row in rows if row["arrows"]]
    bad = [row for row in rows if not row["arrows"]]
    if ok:
        ax.scatter([r["edges"] for r in ok], [r["min_degree"] for r in ok],
                   marker="o", color=BLUE, label="arrows")
    if bad:
        ax.scatter([r["edges"] for r in bad], [r["min_degree"] for r in bad],
                   marker="x", color=RED, s=60, label="does not arrow")
    c_edges = None
    if report.construction_graph6:
        from .graph import parse_graph6

        c_edges = parse_graph6(report.construction_graph6).num_edges
        ax.scatter([c_edges], [report.construction_min_degree], marker="s", color=RED,
                   facecolors="none", s=90, label="extremal construction")
    ax.axhline(report.threshold - 0.5, color="grey", ls="--", lw=0.8)
    ax.set_xlabel("edges")
    ax.set_ylabel("minimum degree")
    ax.set_title(f"r={report.r}, t={report.t}, n={report.n} ({report.mode})", fontsize=10)
    ax.legend(fontsize=8, loc="lower right")
    path = Path(path)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path
