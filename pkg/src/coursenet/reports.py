"""CSV writers for the analysis outputs.

Every writer emits exactly one documented header plus data rows in a
deterministic order, so identical inputs always produce byte-identical
files. Numbers are written losslessly: counts and integral medians as
integers, everything else with repr precision.
"""

from __future__ import annotations

import csv
import re
from pathlib import Path
from typing import Sequence

from .analysis import (
    CommonStudentsHistogram,
    CoOccurrenceHistogram,
    LinkageMatrix,
    SubnetworkStatsRow,
    top_hubs,
)
from .graph import CourseNetwork
from .metrics import CentralityReport, write_centrality_report

STATS_FIELDS = ("label", "level", "nodes", "edges", "density", "diameter", "acc")
STATS_DUAL_FIELDS = (
    "label",
    "level",
    "nodes",
    "static_edges",
    "static_density",
    "static_diameter",
    "static_acc",
    "dynamic_edges",
    "dynamic_density",
    "dynamic_diameter",
    "dynamic_acc",
)
HUB_METRIC_FIELDS = ("rank", "degree", "betweenness", "eigenvector")
COMMON_HIST_FIELDS = ("bin_low", "bin_high", "pair_count", "maintained_fraction")
RATE_HIST_FIELDS = ("rate_low", "rate_high", "pair_count", "discarded_fraction")


def _num(value: float | int | None) -> str:
    """Counts and integral medians render as integers; None as empty."""
    if value is None:
        return ""
    as_float = float(value)
    if as_float.is_integer():
        return str(int(as_float))
    return repr(as_float)


def _open_writer(path: str | Path):
    handle = open(path, "w", encoding="utf-8", newline="")
    return handle, csv.writer(handle, lineterminator="\n")


def write_stats_csv(rows: Sequence[SubnetworkStatsRow], path: str | Path) -> None:
    handle, writer = _open_writer(path)
    with handle:
        writer.writerow(STATS_FIELDS)
        for row in rows:
            writer.writerow(
                (
                    row.label,
                    row.level,
                    _num(row.nodes),
                    _num(row.edges),
                    repr(row.density),
                    _num(row.diameter),
                    repr(row.avg_clustering),
                )
            )


def write_stats_csv_dual(
    static_rows: Sequence[SubnetworkStatsRow],
    dynamic_rows: Sequence[SubnetworkStatsRow],
    path: str | Path,
) -> None:
    """Side-by-side stats for the two threshold modes; row labels must align
    (node sets are threshold-invariant, so they do for one dataset)."""
    if [r.label for r in static_rows] != [r.label for r in dynamic_rows]:
        raise ValueError("static and dynamic stats tables cover different labels")
    handle, writer = _open_writer(path)
    with handle:
        writer.writerow(STATS_DUAL_FIELDS)
        for s, d in zip(static_rows, dynamic_rows):
            writer.writerow(
                (
                    s.label,
                    s.level,
                    _num(s.nodes),
                    _num(s.edges),
                    repr(s.density),
                    _num(s.diameter),
                    repr(s.avg_clustering),
                    _num(d.edges),
                    repr(d.density),
                    _num(d.diameter),
                    repr(d.avg_clustering),
                )
            )


def _course_label(net: CourseNetwork, row_key) -> str:
    title = net.node_info(row_key).title if net.has_node(row_key) else ""
    return title if title else f"{row_key.department} {row_key.course_number}"


def write_hub_metric_table(report: CentralityReport, net: CourseNetwork, n: int, path: str | Path) -> None:
    """Top-n course labels per centrality metric, one metric per column."""
    columns = {
        metric: top_hubs(report, metric, n) for metric in ("degree", "betweenness", "eigenvector")
    }
    depth = max((len(rows) for rows in columns.values()), default=0)
    handle, writer = _open_writer(path)
    with handle:
        writer.writerow(HUB_METRIC_FIELDS)
        for i in range(depth):
            writer.writerow(
                (
                    i + 1,
                    _course_label(net, columns["degree"][i].key) if i < len(columns["degree"]) else "",
                    _course_label(net, columns["betweenness"][i].key) if i < len(columns["betweenness"]) else "",
                    _course_label(net, columns["eigenvector"][i].key) if i < len(columns["eigenvector"]) else "",
                )
            )


def write_hub_combined_table(report: CentralityReport, net: CourseNetwork, n: int, path: str | Path) -> None:
    """Top-n rows of the centrality report, combined-rank order."""
    top = CentralityReport(rows=tuple(top_hubs(report, "combined", n)))
    write_centrality_report(top, net, path)


def category_slug(category: str) -> str:
    slug = re.sub(r"[^a-z0-9]+", "_", category.lower()).strip("_")
    return slug or "category"


def linkage_fields(categories: Sequence[str]) -> tuple[str, ...]:
    slugs = [category_slug(c) for c in categories]
    return (
        "category",
        *(f"pct_{slug}" for slug in slugs),
        *(f"frac_{slug}" for slug in slugs),
        "edges",
        "pct_edges",
        "frac_edges",
    )


def write_linkage_csv(matrix: LinkageMatrix, path: str | Path) -> None:
    """Hub linkage matrix: integer percents, raw fractions, row edge totals."""
    handle, writer = _open_writer(path)
    with handle:
        writer.writerow(linkage_fields(matrix.categories))
        for row in matrix.categories:
            writer.writerow(
                (
                    row,
                    *(matrix.percent(row, col) for col in matrix.categories),
                    *(repr(matrix.fraction(row, col)) for col in matrix.categories),
                    matrix.row_total(row),
                    round(100.0 * matrix.row_share(row)),
                    repr(matrix.row_share(row)),
                )
            )


def write_common_hist_csv(hist: CommonStudentsHistogram, path: str | Path) -> None:
    handle, writer = _open_writer(path)
    with handle:
        writer.writerow(COMMON_HIST_FIELDS)
        for hist_bin, (threshold, fraction) in zip(hist.bins, hist.maintained):
            assert hist_bin.low == threshold
            writer.writerow(
                (
                    hist_bin.low,
                    "" if hist_bin.high is None else hist_bin.high,
                    hist_bin.count,
                    repr(fraction),
                )
            )


def write_rate_hist_csv(hist: CoOccurrenceHistogram, path: str | Path) -> None:
    handle, writer = _open_writer(path)
    with handle:
        writer.writerow(RATE_HIST_FIELDS)
        for hist_bin, (_, fraction) in zip(hist.bins, hist.discarded):
            writer.writerow(
                (
                    format(hist_bin.low, ".10g"),
                    format(hist_bin.high, ".10g"),
                    hist_bin.count,
                    repr(fraction),
                )
            )
