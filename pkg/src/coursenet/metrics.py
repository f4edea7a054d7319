"""Whole-network statistics and per-node centrality metrics.

Everything here treats the network as unweighted and undirected. The three
centralities (degree, betweenness, eigenvector) feed a per-metric
competition ranking and a combined rank defined as the median of the three
ranks; rank 1 always marks the highest value.
"""

from __future__ import annotations

import csv
from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping

from .errors import ConvergenceError
from .graph import CourseNetwork
from .ingest import CourseKey

EIGENVECTOR_TOL = 1e-6
EIGENVECTOR_MAX_ITER = 100_000

CENTRALITY_FIELDS = (
    "dept",
    "number",
    "title",
    "degree",
    "degree_rank",
    "betweenness",
    "betweenness_rank",
    "eigenvector",
    "eigenvector_rank",
    "combined_rank",
)


@dataclass(frozen=True, slots=True)
class GraphStats:
    """Summary statistics of one network or subnetwork."""

    node_count: int
    edge_count: int
    density: float
    diameter: int | None
    avg_clustering: float


@dataclass(frozen=True, slots=True)
class CentralityRow:
    """Per-course centrality values, per-metric ranks, and the combined rank."""

    key: CourseKey
    degree: int
    betweenness: float
    eigenvector: float
    degree_rank: int
    betweenness_rank: int
    eigenvector_rank: int
    combined_rank: int


@dataclass(frozen=True, slots=True)
class CentralityReport:
    """Report rows ordered by combined rank (ties: degree rank, then key)."""

    rows: tuple[CentralityRow, ...]

    def by_key(self) -> dict[CourseKey, CentralityRow]:
        return {row.key: row for row in self.rows}


def density(net: CourseNetwork) -> float:
    """Fraction of all possible edges that are present (0 for < 2 nodes)."""
    n = net.node_count
    if n < 2:
        return 0.0
    return 2.0 * net.edge_count / (n * (n - 1))


def _bfs_distances(adj: list[list[int]], source: int) -> list[int]:
    dist = [-1] * len(adj)
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        dv = dist[v] + 1
        for w in adj[v]:
            if dist[w] < 0:
                dist[w] = dv
                queue.append(w)
    return dist


def diameter(net: CourseNetwork) -> int | None:
    """Longest shortest-path length over connected node pairs; None if no
    two distinct nodes are connected (disconnected pairs are skipped)."""
    _, adj = net.adjacency_lists()
    best = -1
    for source in range(len(adj)):
        if not adj[source]:
            continue
        ecc = max(d for d in _bfs_distances(adj, source) if d >= 0)
        if ecc > best:
            best = ecc
    return best if best >= 1 else None


def local_clustering(net: CourseNetwork, v: CourseKey) -> float:
    """Fraction of v's neighbor pairs that are themselves adjacent.

    Nodes with degree < 2 have no neighbor pairs and contribute 0.
    """
    if not net.has_node(v):
        raise KeyError(v)
    nbr_set = set(net.neighbors(v))
    deg = len(nbr_set)
    if deg < 2:
        return 0.0
    # each neighbor-neighbor edge is seen from both of its ends, which
    # cancels the factor 2 in C(deg, 2)
    links = sum(len(nbr_set & set(net.neighbors(u))) for u in nbr_set)
    return links / (deg * (deg - 1))


def average_clustering(net: CourseNetwork) -> float:
    """Mean local clustering over all nodes; 0 for an empty network."""
    n = net.node_count
    if n == 0:
        return 0.0
    _, adj = net.adjacency_lists()
    sets = [set(nbrs) for nbrs in adj]
    total = 0.0
    for v in range(n):
        deg = len(adj[v])
        if deg < 2:
            continue
        sv = sets[v]
        links = sum(len(sv & sets[u]) for u in adj[v])
        total += links / (deg * (deg - 1))
    return total / n


def graph_stats(net: CourseNetwork) -> GraphStats:
    return GraphStats(
        node_count=net.node_count,
        edge_count=net.edge_count,
        density=density(net),
        diameter=diameter(net),
        avg_clustering=average_clustering(net),
    )


def degree_centrality(net: CourseNetwork) -> dict[CourseKey, int]:
    """Raw degree counts (not normalized)."""
    return {v: net.degree(v) for v in net.nodes()}


def betweenness_centrality(net: CourseNetwork) -> dict[CourseKey, float]:
    """Shortest-path betweenness, endpoints excluded, normalized by
    2 / ((n - 1)(n - 2)).

    Accumulates pair dependencies over single-source shortest-path DAGs:
    one BFS per source records path counts and predecessors, then a
    reverse sweep folds sigma ratios back toward the source. Sources are
    processed in canonical node order, so the floating-point accumulation
    is deterministic.
    """
    keys, adj = net.adjacency_lists()
    n = len(keys)
    raw = [0.0] * n
    if n > 2:
        for s in range(n):
            dist = [-1] * n
            sigma = [0] * n
            preds: list[list[int]] = [[] for _ in range(n)]
            dist[s] = 0
            sigma[s] = 1
            order: list[int] = []
            queue = deque([s])
            while queue:
                v = queue.popleft()
                order.append(v)
                dv = dist[v] + 1
                sv = sigma[v]
                for w in adj[v]:
                    if dist[w] < 0:
                        dist[w] = dv
                        queue.append(w)
                    if dist[w] == dv:
                        sigma[w] += sv
                        preds[w].append(v)
            delta = [0.0] * n
            for w in reversed(order):
                coeff = (1.0 + delta[w]) / sigma[w]
                for v in preds[w]:
                    delta[v] += sigma[v] * coeff
                if w != s:
                    raw[w] += delta[w]
        # raw sums ordered pairs, i.e. each unordered pair twice: the
        # unordered sum scaled by 2 / ((n-1)(n-2)) is raw / ((n-1)(n-2)).
        scale = 1.0 / ((n - 1) * (n - 2))
        raw = [value * scale for value in raw]
    return dict(zip(keys, raw))


def eigenvector_centrality(
    net: CourseNetwork,
    tol: float = EIGENVECTOR_TOL,
    max_iter: int = EIGENVECTOR_MAX_ITER,
) -> dict[CourseKey, float]:
    """Dominant-eigenvector centrality by power iteration.

    Starts from a uniform positive vector and iterates x <- (A + I) x with
    L2 normalization each step. The identity shift leaves the eigenvectors
    of A unchanged while making the dominant eigenvalue strictly largest
    in modulus, so the iteration also converges on bipartite graphs (a
    star, for instance), where plain adjacency multiplication oscillates.

    The per-step change only bounds the remaining error when scaled by the
    convergence ratio, so the stop rule estimates that ratio from
    successive steps and exits once the implied error bound is below tol.
    Exceeding max_iter raises ConvergenceError.
    """
    keys, adj = net.adjacency_lists()
    n = len(keys)
    if net.edge_count == 0:
        raise ValueError("eigenvector centrality is undefined on a network with no edges")
    x = [1.0 / n**0.5] * n
    prev_change: float | None = None
    for _ in range(max_iter):
        nxt = [x[v] + sum(x[w] for w in adj[v]) for v in range(n)]
        norm = sum(value * value for value in nxt) ** 0.5
        nxt = [value / norm for value in nxt]
        change = max(abs(a - b) for a, b in zip(nxt, x))
        x = nxt
        if change < 1e-15:  # at the resolution of a unit-norm float64 vector
            return dict(zip(keys, x))
        if prev_change is not None and change < tol:
            # remaining error ~ change * r / (1 - r) for ratio r; the ratio
            # estimate is noisy, so demand an order-of-magnitude margin
            ratio = change / prev_change
            if ratio < 1.0 and change * ratio / (1.0 - ratio) < 0.1 * tol:
                return dict(zip(keys, x))
        prev_change = change
    raise ConvergenceError(
        f"eigenvector power iteration did not converge within {max_iter} iterations",
        iterations=max_iter,
    )


def competition_ranks(values: Mapping[CourseKey, float]) -> dict[CourseKey, int]:
    """Min/competition ranking, descending: rank 1 is the highest value and
    equal values share the smallest rank of their group."""
    ordered = sorted(values.items(), key=lambda item: (-item[1], item[0]))
    ranks: dict[CourseKey, int] = {}
    current_rank = 0
    previous = None
    for position, (key, value) in enumerate(ordered, start=1):
        if value != previous:
            current_rank = position
            previous = value
        ranks[key] = current_rank
    return ranks


def rank_and_combine(
    degree: Mapping[CourseKey, int],
    betweenness: Mapping[CourseKey, float],
    eigenvector: Mapping[CourseKey, float],
) -> CentralityReport:
    """Rank each metric and combine: the combined rank is the median
    (middle value) of a node's three per-metric ranks."""
    if not (degree.keys() == betweenness.keys() == eigenvector.keys()):
        raise ValueError("centrality maps must cover identical node sets")
    degree_ranks = competition_ranks(degree)
    betweenness_ranks = competition_ranks(betweenness)
    eigenvector_ranks = competition_ranks(eigenvector)
    rows = []
    for key in degree:
        triple = sorted((degree_ranks[key], betweenness_ranks[key], eigenvector_ranks[key]))
        rows.append(
            CentralityRow(
                key=key,
                degree=int(degree[key]),
                betweenness=float(betweenness[key]),
                eigenvector=float(eigenvector[key]),
                degree_rank=degree_ranks[key],
                betweenness_rank=betweenness_ranks[key],
                eigenvector_rank=eigenvector_ranks[key],
                combined_rank=triple[1],
            )
        )
    rows.sort(key=lambda row: (row.combined_rank, row.degree_rank, row.key))
    return CentralityReport(rows=tuple(rows))


def centrality_report(net: CourseNetwork) -> CentralityReport:
    """Compute all three centralities on a network and rank them."""
    return rank_and_combine(
        degree_centrality(net),
        betweenness_centrality(net),
        eigenvector_centrality(net),
    )


def write_centrality_report(report: CentralityReport, net: CourseNetwork, path: str | Path) -> None:
    """Write the centrality report CSV, sorted by combined rank ascending."""
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(CENTRALITY_FIELDS)
        for row in report.rows:
            title = net.node_info(row.key).title if net.has_node(row.key) else ""
            writer.writerow(
                (
                    row.key.department,
                    row.key.course_number,
                    title,
                    row.degree,
                    row.degree_rank,
                    repr(row.betweenness),
                    row.betweenness_rank,
                    repr(row.eigenvector),
                    row.eigenvector_rank,
                    row.combined_rank,
                )
            )
