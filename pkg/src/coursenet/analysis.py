"""Department/category subnetwork statistics, hub tables, hub linkage, and
histogram data for the two distribution figures.

Category rows are interpolated medians over their member departments:
odd member counts take the middle value, even counts the mean of the two
middle values. Hub linkage attributes one incidence per hub endpoint, so
an edge between two hubs shows up in both hubs' rows.
"""

from __future__ import annotations

import csv
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Literal, Mapping, Sequence

from .errors import ConfigError
from .graph import CourseNetwork, induced_subgraph
from .ingest import CourseKey, _checked_reader
from .metrics import CentralityReport, CentralityRow, graph_stats
from .pairing import PairDataset, co_occurrence_rate

DEFAULT_HUB_DEGREE = 200
DEFAULT_TOP_N = 20

# Common-student bins for the distribution report; the last bin is open-ended.
DEFAULT_COMMON_BIN_EDGES = (1, 5, 10, 15, 20, 30, 40, 50, 75, 100, 150, 200, 300, 500, 1000)
DEFAULT_RATE_BIN_WIDTH = 0.01

CATEGORY_MAP_FIELDS = ("department", "category")

StatsLevel = Literal["all", "category", "department"]


@dataclass(frozen=True, slots=True)
class CategoryMap:
    """Assignment of every department to one high-level course category."""

    mapping: Mapping[str, str]
    categories: tuple[str, ...]

    def __post_init__(self) -> None:
        unknown = sorted({cat for cat in self.mapping.values() if cat not in self.categories})
        if unknown:
            raise ConfigError("categories not in the declared list: " + ", ".join(unknown))

    def category_for(self, department: str) -> str:
        try:
            return self.mapping[department]
        except KeyError:
            raise ConfigError(f"department not mapped to a category: {department!r}") from None

    def departments_in(self, category: str) -> list[str]:
        return sorted(d for d, c in self.mapping.items() if c == category)


def load_category_map(path: str | Path, categories: Sequence[str] | None = None) -> CategoryMap:
    """Read the department,category CSV.

    When no category list is declared, the file's own distinct categories
    are accepted; passing one restricts the file to it.
    """
    mapping: dict[str, str] = {}
    with open(path, encoding="utf-8", newline="") as handle:
        for row in _checked_reader(handle, CATEGORY_MAP_FIELDS, str(path)):
            dept, cat = row[0].strip(), row[1].strip()
            if dept in mapping and mapping[dept] != cat:
                raise ConfigError(f"{path}: department {dept!r} mapped to two categories")
            mapping[dept] = cat
    declared = tuple(categories) if categories is not None else tuple(sorted(set(mapping.values())))
    return CategoryMap(mapping=mapping, categories=declared)


def write_category_map(cat_map: CategoryMap, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(CATEGORY_MAP_FIELDS)
        for dept in sorted(cat_map.mapping):
            writer.writerow((dept, cat_map.mapping[dept]))


@dataclass(frozen=True, slots=True)
class SubnetworkStatsRow:
    """One row of the subnetwork statistics table.

    Category rows hold medians, so nodes/edges may be fractional there
    (e.g. the 41.5-node pattern from four member departments).
    """

    label: str
    level: StatsLevel
    nodes: float
    edges: float
    density: float
    diameter: float | None
    avg_clustering: float


def interpolated_median(values: Sequence[float]) -> float:
    """Median with even-count interpolation (mean of the two middle values)."""
    if not values:
        raise ValueError("median of no values")
    ordered = sorted(values)
    mid = len(ordered) // 2
    if len(ordered) % 2 == 1:
        return float(ordered[mid])
    return (ordered[mid - 1] + ordered[mid]) / 2.0


def whole_network_stats(net: CourseNetwork) -> SubnetworkStatsRow:
    stats = graph_stats(net)
    return SubnetworkStatsRow(
        label="ALL",
        level="all",
        nodes=stats.node_count,
        edges=stats.edge_count,
        density=stats.density,
        diameter=stats.diameter,
        avg_clustering=stats.avg_clustering,
    )


def department_stats(net: CourseNetwork) -> list[SubnetworkStatsRow]:
    """Stats of each department's induced subnetwork, sorted by department.

    Every course is a node of the full network, so node counts here are
    threshold-independent.
    """
    departments = sorted({key.department for key in net.nodes()})
    rows = []
    for dept in departments:
        sub = induced_subgraph(net, lambda key, d=dept: key.department == d)
        stats = graph_stats(sub)
        rows.append(
            SubnetworkStatsRow(
                label=dept,
                level="department",
                nodes=stats.node_count,
                edges=stats.edge_count,
                density=stats.density,
                diameter=stats.diameter,
                avg_clustering=stats.avg_clustering,
            )
        )
    return rows


def category_stats(dept_rows: Iterable[SubnetworkStatsRow], cat_map: CategoryMap) -> list[SubnetworkStatsRow]:
    """Interpolated medians of the member-department rows, per category.

    Departments whose subnetwork has no connected pair are skipped in the
    diameter median; a category whose members all lack one has none either.
    """
    members: dict[str, list[SubnetworkStatsRow]] = {}
    for row in dept_rows:
        members.setdefault(cat_map.category_for(row.label), []).append(row)
    rows = []
    for category in sorted(members):
        group = members[category]
        diameters = [row.diameter for row in group if row.diameter is not None]
        rows.append(
            SubnetworkStatsRow(
                label=category,
                level="category",
                nodes=interpolated_median([row.nodes for row in group]),
                edges=interpolated_median([row.edges for row in group]),
                density=interpolated_median([row.density for row in group]),
                diameter=interpolated_median(diameters) if diameters else None,
                avg_clustering=interpolated_median([row.avg_clustering for row in group]),
            )
        )
    return rows


def subnetwork_stats_table(net: CourseNetwork, cat_map: CategoryMap) -> list[SubnetworkStatsRow]:
    """Arrange ALL, category, and department rows the way the stats report
    prints them: ALL first, then each category followed by its members."""
    dept_rows = department_stats(net)
    cat_rows = {row.label: row for row in category_stats(dept_rows, cat_map)}
    by_dept = {row.label: row for row in dept_rows}
    table = [whole_network_stats(net)]
    for category in sorted(cat_rows):
        table.append(cat_rows[category])
        for dept in cat_map.departments_in(category):
            if dept in by_dept:
                table.append(by_dept[dept])
    return table


def identify_hubs(report: CentralityReport, degree_floor: int) -> set[CourseKey]:
    """Hub courses: degree at or above the floor."""
    if degree_floor < 0:
        raise ValueError(f"degree floor must be >= 0, got {degree_floor}")
    return {row.key for row in report.rows if row.degree >= degree_floor}


_METRIC_RANK = {
    "degree": lambda row: row.degree_rank,
    "betweenness": lambda row: row.betweenness_rank,
    "eigenvector": lambda row: row.eigenvector_rank,
}


def top_hubs(report: CentralityReport, metric: str, n: int) -> list[CentralityRow]:
    """First n rows by the chosen metric's rank (ties: canonical key).

    metric is one of degree, betweenness, eigenvector, or combined; the
    combined ordering is the report's own row order.
    """
    if n < 1:
        raise ValueError(f"top-n must be >= 1, got {n}")
    if metric == "combined":
        return list(report.rows[:n])
    try:
        rank_of = _METRIC_RANK[metric]
    except KeyError:
        raise ValueError(f"unknown hub metric: {metric!r}") from None
    ordered = sorted(report.rows, key=lambda row: (rank_of(row), row.key))
    return ordered[:n]


@dataclass(frozen=True, slots=True)
class LinkageMatrix:
    """Distribution of hub edge endpoints across categories.

    counts[row][col] is the number of hub-incidences from hubs of category
    row to neighbors of category col. An edge between two hubs contributes
    one incidence to each endpoint's row.
    """

    categories: tuple[str, ...]
    counts: Mapping[str, Mapping[str, int]]

    def row_total(self, row: str) -> int:
        return sum(self.counts[row].values())

    def grand_total(self) -> int:
        return sum(self.row_total(row) for row in self.categories)

    def fraction(self, row: str, col: str) -> float:
        total = self.row_total(row)
        return self.counts[row][col] / total if total else 0.0

    def percent(self, row: str, col: str) -> int:
        return round(100.0 * self.fraction(row, col))

    def row_share(self, row: str) -> float:
        grand = self.grand_total()
        return self.row_total(row) / grand if grand else 0.0


def category_linkage(net: CourseNetwork, hubs: Iterable[CourseKey], cat_map: CategoryMap) -> LinkageMatrix:
    """Tally hub edge endpoints by (hub's category, neighbor's category)."""
    hub_set = set(hubs)
    missing = sorted(h for h in hub_set if not net.has_node(h))
    if missing:
        raise ValueError(f"hub is not a network node: {missing[0]}")
    counts: dict[str, dict[str, int]] = {
        row: {col: 0 for col in cat_map.categories} for row in cat_map.categories
    }
    for hub in sorted(hub_set):
        row = cat_map.category_for(hub.department)
        for neighbor in net.neighbors(hub):
            col = cat_map.category_for(neighbor.department)
            counts[row][col] += 1
    return LinkageMatrix(categories=cat_map.categories, counts=counts)


@dataclass(frozen=True, slots=True)
class CountBin:
    low: int
    high: int | None  # None marks the open-ended last bin
    count: int


@dataclass(frozen=True, slots=True)
class CommonStudentsHistogram:
    """Pair counts binned by common students, plus the maintained curve:
    for each candidate threshold, the fraction of pairs that would keep
    their edge (common >= threshold)."""

    bins: tuple[CountBin, ...]
    maintained: tuple[tuple[int, float], ...]


def common_students_histogram(
    data: PairDataset,
    bin_edges: Sequence[int] = DEFAULT_COMMON_BIN_EDGES,
) -> CommonStudentsHistogram:
    edges = list(bin_edges)
    if not edges:
        raise ValueError("at least one bin edge is required")
    if edges != sorted(set(edges)):
        raise ValueError("bin edges must be strictly ascending")
    counts = [0] * len(edges)
    values = sorted(pair.common_students for pair in data.pairs)
    for value in values:
        if value < edges[0]:
            continue
        counts[bisect_right(edges, value) - 1] += 1
    total = len(values)
    bins = tuple(
        CountBin(low=edges[i], high=edges[i + 1] if i + 1 < len(edges) else None, count=counts[i])
        for i in range(len(edges))
    )
    maintained = tuple(
        (t, ((total - bisect_left(values, t)) / total) if total else 0.0) for t in edges
    )
    return CommonStudentsHistogram(bins=bins, maintained=maintained)


@dataclass(frozen=True, slots=True)
class RateBin:
    low: float
    high: float
    count: int


@dataclass(frozen=True, slots=True)
class CoOccurrenceHistogram:
    """Pair counts binned by co-occurrence rate over (0, 1], plus the
    discarded curve: for each candidate k, the fraction of pairs whose
    rate falls below it."""

    bins: tuple[RateBin, ...]
    discarded: tuple[tuple[float, float], ...]


def co_occurrence_histogram(
    data: PairDataset,
    bin_width: float = DEFAULT_RATE_BIN_WIDTH,
) -> CoOccurrenceHistogram:
    if not 0 < bin_width <= 1:
        raise ValueError(f"bin width must be in (0, 1], got {bin_width}")
    nbins = 1
    while nbins * bin_width < 1.0:
        nbins += 1
    edges = [i * bin_width for i in range(nbins + 1)]
    counts = [0] * nbins
    rates = sorted(co_occurrence_rate(pair, data.summaries) for pair in data.pairs)
    for rate in rates:
        # bins are half-open (low, high], so a rate sitting exactly on an
        # edge belongs to the bin below it
        idx = min(max(bisect_left(edges, rate) - 1, 0), nbins - 1)
        counts[idx] += 1
    total = len(rates)
    bins = tuple(RateBin(low=edges[i], high=edges[i + 1], count=counts[i]) for i in range(nbins))
    discarded = tuple(
        (edges[i], (bisect_left(rates, edges[i]) / total) if total else 0.0) for i in range(nbins)
    )
    return CoOccurrenceHistogram(bins=bins, discarded=discarded)
