"""Figure rendering for the report outputs.

Each renderer draws the chart matching one of the delimited report files
and writes a PNG next to it. The Agg backend is forced so rendering works
headless, and nothing time- or host-dependent goes into the files: the
same data renders the same bytes.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .analysis import CommonStudentsHistogram, CoOccurrenceHistogram, LinkageMatrix

_BAR_COLOR = "#4878a8"
_CURVE_COLOR = "#d2691e"


def _save(fig, path: str | Path) -> None:
    fig.savefig(path, dpi=100)
    plt.close(fig)


def render_common_students_figure(hist: CommonStudentsHistogram, path: str | Path) -> None:
    """Bar chart of pair counts per common-student bin with the cumulative
    maintained-fraction curve on a secondary axis."""
    labels = [
        f"{b.low}+" if b.high is None else f"{b.low}-{b.high - 1}" if b.high - b.low > 1 else str(b.low)
        for b in hist.bins
    ]
    counts = [b.count for b in hist.bins]
    maintained = [fraction for _, fraction in hist.maintained]
    fig, ax = plt.subplots(figsize=(8, 4.5))
    positions = range(len(labels))
    ax.bar(positions, counts, color=_BAR_COLOR, label="course pairs")
    ax.set_xticks(list(positions))
    ax.set_xticklabels(labels, rotation=45, ha="right", fontsize=8)
    ax.set_xlabel("common students")
    ax.set_ylabel("course pairs")
    twin = ax.twinx()
    twin.plot(list(positions), [100 * m for m in maintained], color=_CURVE_COLOR, marker="o", label="maintained")
    twin.set_ylabel("% of pairs maintained at threshold")
    twin.set_ylim(0, 100)
    ax.set_title("Common students per course pair")
    fig.tight_layout()
    _save(fig, path)


def render_co_occurrence_figure(hist: CoOccurrenceHistogram, path: str | Path) -> None:
    """Bar chart of pair counts per co-occurrence rate bin with the
    cumulative discarded-fraction curve on a secondary axis."""
    centers = [(b.low + b.high) / 2 for b in hist.bins]
    width = hist.bins[0].high - hist.bins[0].low if hist.bins else 0.01
    counts = [b.count for b in hist.bins]
    discarded = [fraction for _, fraction in hist.discarded]
    fig, ax = plt.subplots(figsize=(8, 4.5))
    ax.bar(centers, counts, width=width * 0.9, color=_BAR_COLOR, label="course pairs")
    ax.set_xlabel("co-occurrence rate")
    ax.set_ylabel("course pairs")
    twin = ax.twinx()
    twin.plot([b.low for b in hist.bins], [100 * d for d in discarded], color=_CURVE_COLOR, label="discarded")
    twin.set_ylabel("% of pairs discarded at rate threshold")
    twin.set_ylim(0, 100)
    ax.set_title("Co-occurrence rate distribution")
    fig.tight_layout()
    _save(fig, path)


def render_linkage_heatmap(matrix: LinkageMatrix, path: str | Path) -> None:
    """Row-wise percent heatmap of hub edge linkage between categories."""
    categories = list(matrix.categories)
    grid = [[matrix.percent(row, col) for col in categories] for row in categories]
    fig, ax = plt.subplots(figsize=(1.2 * len(categories) + 3, 1.0 * len(categories) + 2))
    image = ax.imshow(grid, cmap="RdYlGn_r", vmin=0, vmax=max((max(r) for r in grid), default=1))
    ax.set_xticks(range(len(categories)))
    ax.set_xticklabels(categories, rotation=45, ha="right", fontsize=8)
    ax.set_yticks(range(len(categories)))
    ax.set_yticklabels(categories, fontsize=8)
    for i in range(len(categories)):
        for j in range(len(categories)):
            ax.text(j, i, str(grid[i][j]), ha="center", va="center", fontsize=8)
    ax.set_xlabel("neighbor category")
    ax.set_ylabel("hub category")
    ax.set_title("Hub edge linkage (% of row)")
    fig.colorbar(image, ax=ax, shrink=0.8)
    fig.tight_layout()
    _save(fig, path)
