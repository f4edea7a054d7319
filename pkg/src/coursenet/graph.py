"""Course network construction under static and dynamic edge thresholds.

A static threshold keeps a pair when its common-student count reaches a
fixed value. A dynamic threshold scales with course popularity: the pair
must reach max(floor, k * larger course's student total), so an edge to a
very popular course demands proportionally more overlap. The comparison
always uses the real-valued product; rounding is display-only.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Iterator, Mapping

from .errors import DatasetInconsistencyError
from .ingest import CourseKey, CourseSummary, _checked_reader
from .pairing import PairDataset

EDGE_FIELDS = ("dept1", "number1", "dept2", "number2", "common_students", "threshold_applied")


@dataclass(frozen=True, slots=True)
class StaticThreshold:
    """Fixed common-student minimum, identical for every pair."""

    t: int

    def __post_init__(self) -> None:
        if self.t < 1:
            raise ValueError(f"static threshold must be >= 1, got {self.t}")


@dataclass(frozen=True, slots=True)
class DynamicThreshold:
    """Per-pair minimum max(floor, k * larger course total)."""

    k: float
    floor: int

    def __post_init__(self) -> None:
        if not 0 < self.k < 1:
            raise ValueError(f"co-occurrence rate threshold k must be in (0, 1), got {self.k}")
        if self.floor < 1:
            raise ValueError(f"dynamic floor must be >= 1, got {self.floor}")


ThresholdPolicy = StaticThreshold | DynamicThreshold


def dynamic_threshold(c1: CourseSummary, c2: CourseSummary, k: float, floor: int) -> float:
    """Per-pair threshold: max(floor, k * the larger course's student total)."""
    return max(float(floor), k * max(c1.total_students, c2.total_students))


def display_threshold(value: float) -> int:
    """Nearest-integer rendering of a threshold, for reports only."""
    return round(value)


@dataclass(frozen=True, slots=True)
class NodeInfo:
    """Descriptive attributes attached to a network node."""

    title: str
    total_students: int


class CourseNetwork:
    """Undirected simple graph of courses; edges carry common-student weights.

    Immutable after construction. Node iteration and edge iteration are in
    canonical (sorted) order so downstream output is deterministic.
    """

    def __init__(
        self,
        nodes: Mapping[CourseKey, NodeInfo],
        edges: Iterable[tuple[CourseKey, CourseKey, int]],
        policy: ThresholdPolicy | None,
    ):
        self._nodes: dict[CourseKey, NodeInfo] = {key: nodes[key] for key in sorted(nodes)}
        self._adj: dict[CourseKey, dict[CourseKey, int]] = {key: {} for key in self._nodes}
        self.policy = policy
        count = 0
        for a, b, weight in sorted(edges):
            if a == b:
                raise ValueError(f"self-loop not allowed: {a}")
            if a not in self._nodes or b not in self._nodes:
                missing = a if a not in self._nodes else b
                raise ValueError(f"edge endpoint is not a node: {missing}")
            if b in self._adj[a]:
                raise ValueError(f"parallel edge not allowed: {a} -- {b}")
            self._adj[a][b] = weight
            self._adj[b][a] = weight
            count += 1
        self._edge_count = count

    @property
    def node_count(self) -> int:
        return len(self._nodes)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def nodes(self) -> Iterator[CourseKey]:
        return iter(self._nodes)

    def has_node(self, key: CourseKey) -> bool:
        return key in self._nodes

    def node_info(self, key: CourseKey) -> NodeInfo:
        return self._nodes[key]

    def neighbors(self, key: CourseKey) -> Iterator[CourseKey]:
        return iter(self._adj[key])

    def degree(self, key: CourseKey) -> int:
        return len(self._adj[key])

    def has_edge(self, a: CourseKey, b: CourseKey) -> bool:
        return b in self._adj.get(a, ())

    def edge_weight(self, a: CourseKey, b: CourseKey) -> int:
        return self._adj[a][b]

    def edges(self) -> Iterator[tuple[CourseKey, CourseKey, int]]:
        """Yield (course1, course2, weight) with course1 < course2, sorted."""
        for a, nbrs in self._adj.items():
            for b, weight in nbrs.items():
                if a < b:
                    yield a, b, weight

    def adjacency_lists(self) -> tuple[list[CourseKey], list[list[int]]]:
        """Integer-indexed adjacency view for the metric algorithms."""
        keys = list(self._nodes)
        index = {key: i for i, key in enumerate(keys)}
        adj = [[index[nbr] for nbr in self._adj[key]] for key in keys]
        return keys, adj


def edge_threshold(policy: ThresholdPolicy, s1: CourseSummary, s2: CourseSummary) -> float:
    if isinstance(policy, StaticThreshold):
        return float(policy.t)
    return dynamic_threshold(s1, s2, policy.k, policy.floor)


def build_network(data: PairDataset, policy: ThresholdPolicy) -> CourseNetwork:
    """Build the course network: every course becomes a node, an edge is kept
    iff its common-student count is >= the policy's (real-valued) threshold.

    Courses left isolated by thresholding stay in the network, so node
    counts do not depend on the policy.
    """
    nodes = {
        key: NodeInfo(title=s.title, total_students=s.total_students)
        for key, s in data.summaries.items()
    }
    edges = []
    for pair in data.pairs:
        try:
            s1 = data.summaries[pair.course1]
            s2 = data.summaries[pair.course2]
        except KeyError as missing:
            raise DatasetInconsistencyError(
                f"pair references a course without a summary: {missing.args[0]}"
            ) from None
        if pair.common_students >= edge_threshold(policy, s1, s2):
            edges.append((pair.course1, pair.course2, pair.common_students))
    return CourseNetwork(nodes=nodes, edges=edges, policy=policy)


def induced_subgraph(net: CourseNetwork, keep: Callable[[CourseKey], bool]) -> CourseNetwork:
    """Subgraph on the nodes satisfying keep, with all surviving internal edges."""
    nodes = {key: net.node_info(key) for key in net.nodes() if keep(key)}
    edges = [(a, b, w) for a, b, w in net.edges() if a in nodes and b in nodes]
    return CourseNetwork(nodes=nodes, edges=edges, policy=net.policy)


def write_edge_list(net: CourseNetwork, path: str | Path) -> None:
    """Write the edge-list CSV in canonical pair ordering.

    threshold_applied is the per-edge threshold the policy produced,
    written at full value (%.10g); requires a network built with a policy.
    """
    if net.policy is None:
        raise ValueError("cannot export thresholds for a network loaded without a policy")
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(EDGE_FIELDS)
        for a, b, weight in net.edges():
            ia, ib = net.node_info(a), net.node_info(b)
            s1 = CourseSummary(key=a, title=ia.title, total_students=ia.total_students)
            s2 = CourseSummary(key=b, title=ib.title, total_students=ib.total_students)
            threshold = edge_threshold(net.policy, s1, s2)
            writer.writerow(
                (a.department, a.course_number, b.department, b.course_number, weight, format(threshold, ".10g"))
            )


def read_edge_list(path: str | Path) -> list[tuple[CourseKey, CourseKey, int]]:
    edges = []
    with open(path, encoding="utf-8", newline="") as handle:
        for row in _checked_reader(handle, EDGE_FIELDS, str(path)):
            a = CourseKey(row[0].strip(), row[1].strip())
            b = CourseKey(row[2].strip(), row[3].strip())
            edges.append((a, b, int(row[4])))
    return edges


def network_from_edge_list(
    edges: Iterable[tuple[CourseKey, CourseKey, int]],
    summaries: Mapping[CourseKey, CourseSummary] | None = None,
) -> CourseNetwork:
    """Rebuild a network from exported edges.

    With summaries, every summarized course becomes a node (isolated ones
    included) and node attributes are filled in; without them the node set
    is just the edge endpoints and attributes are blank.
    """
    edges = list(edges)
    if summaries is not None:
        nodes = {
            key: NodeInfo(title=s.title, total_students=s.total_students)
            for key, s in summaries.items()
        }
        for a, b, _ in edges:
            for key in (a, b):
                if key not in nodes:
                    raise DatasetInconsistencyError(f"edge references a course without a summary: {key}")
    else:
        nodes = {}
        for a, b, _ in edges:
            for key in (a, b):
                nodes.setdefault(key, NodeInfo(title="", total_students=0))
    return CourseNetwork(nodes=nodes, edges=edges, policy=None)
