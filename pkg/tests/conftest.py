"""Shared test helpers: tiny network builders and seeded random graphs."""

from __future__ import annotations

import random

from coursenet.graph import CourseNetwork, NodeInfo, StaticThreshold, ThresholdPolicy
from coursenet.ingest import CourseKey, CourseSummary
from coursenet.pairing import CoursePair, PairDataset


def keys_for(n: int) -> list[CourseKey]:
    return [CourseKey("D", f"{i:03d}") for i in range(n)]


def make_network(
    n: int,
    edge_pairs: list[tuple[int, int]],
    policy: ThresholdPolicy | None = StaticThreshold(1),
    weight: int = 1,
) -> tuple[list[CourseKey], CourseNetwork]:
    """Network on n nodes from integer edge pairs, nodes D/000..D/(n-1)."""
    keys = keys_for(n)
    nodes = {key: NodeInfo(title=f"Course {i}", total_students=10) for i, key in enumerate(keys)}
    edges = [(keys[min(a, b)], keys[max(a, b)], weight) for a, b in edge_pairs]
    return keys, CourseNetwork(nodes=nodes, edges=edges, policy=policy)


def random_edge_pairs(rng: random.Random, n: int, p: float) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]


def random_network(seed: int, max_n: int = 50) -> tuple[list[CourseKey], CourseNetwork]:
    """Seeded random graph with varied size and density."""
    rng = random.Random(seed)
    n = rng.randint(4, max_n)
    p = rng.choice((0.05, 0.1, 0.2, 0.4, 0.7))
    return make_network(n, random_edge_pairs(rng, n, p))


def random_connected_network(seed: int, max_n: int = 30) -> tuple[list[CourseKey], CourseNetwork]:
    """Seeded random connected graph: a random spanning tree plus extras."""
    rng = random.Random(seed)
    n = rng.randint(2, max_n)
    edges = {(rng.randrange(i), i) for i in range(1, n)}
    p = rng.choice((0.0, 0.1, 0.3, 0.6))
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                edges.add((i, j))
    return make_network(n, sorted(edges))


def summary(dept: str, number: str, title: str, total: int) -> CourseSummary:
    return CourseSummary(key=CourseKey(dept, number), title=title, total_students=total)


def random_pair_dataset(seed: int) -> PairDataset:
    """Seeded pair dataset with skewed course sizes (a few near-universal
    courses, many small ones), counts consistent by construction."""
    rng = random.Random(seed)
    n_courses = rng.randint(8, 30)
    summaries = {}
    for i in range(n_courses):
        key = CourseKey(f"D{i % 5}", f"{i:03d}")
        total = rng.choice((rng.randint(20, 80), rng.randint(100, 900), rng.randint(1500, 4000)))
        summaries[key] = CourseSummary(key=key, title=f"c{i}", total_students=total)
    keys = sorted(summaries)
    pairs = []
    for i in range(len(keys)):
        for j in range(i + 1, len(keys)):
            if rng.random() < 0.4:
                cap = min(summaries[keys[i]].total_students, summaries[keys[j]].total_students)
                pairs.append(CoursePair(keys[i], keys[j], rng.randint(1, cap)))
    return PairDataset(pairs=tuple(pairs), summaries=summaries, floor_applied=1)
