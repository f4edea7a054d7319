"""Independent oracles for the metric tests.

These recompute every metric through different machinery than the library:
Floyd-Warshall distances instead of BFS, shortest-path counts read off
adjacency-matrix powers instead of predecessor accumulation, a dense
symmetric eigendecomposition instead of power iteration, and literal
path enumeration for small graphs.
"""

from __future__ import annotations

import numpy as np

from coursenet.graph import CourseNetwork


def adjacency_matrix(net: CourseNetwork) -> np.ndarray:
    keys, adj = net.adjacency_lists()
    n = len(keys)
    matrix = np.zeros((n, n), dtype=np.int64)
    for v, neighbors in enumerate(adj):
        for w in neighbors:
            matrix[v, w] = 1
    return matrix


def floyd_warshall(matrix: np.ndarray) -> np.ndarray:
    n = matrix.shape[0]
    dist = np.full((n, n), np.inf)
    np.fill_diagonal(dist, 0.0)
    dist[matrix > 0] = 1.0
    for k in range(n):
        np.minimum(dist, dist[:, k : k + 1] + dist[k : k + 1, :], out=dist)
    return dist


def oracle_density(net: CourseNetwork) -> float:
    matrix = adjacency_matrix(net)
    n = matrix.shape[0]
    if n < 2:
        return 0.0
    edges = int(matrix.sum()) // 2
    return 2.0 * edges / (n * (n - 1))


def oracle_diameter(net: CourseNetwork) -> int | None:
    dist = floyd_warshall(adjacency_matrix(net))
    finite = dist[np.isfinite(dist)]
    longest = int(finite.max()) if finite.size else 0
    return longest if longest >= 1 else None


def oracle_average_clustering(net: CourseNetwork) -> float:
    """Triangle enumeration over neighbor pairs, combined with the same
    arithmetic shape as the library so results agree bit for bit."""
    matrix = adjacency_matrix(net)
    n = matrix.shape[0]
    if n == 0:
        return 0.0
    total = 0.0
    for v in range(n):
        neighbors = np.flatnonzero(matrix[v])
        deg = len(neighbors)
        if deg < 2:
            continue
        adjacent_pairs = 0
        for i in range(deg):
            for j in range(i + 1, deg):
                if matrix[neighbors[i], neighbors[j]]:
                    adjacent_pairs += 1
        total += (2 * adjacent_pairs) / (deg * (deg - 1))
    return total / n


def shortest_path_counts(matrix: np.ndarray, dist: np.ndarray) -> np.ndarray:
    """sigma[s, t]: number of shortest s-t paths, via matrix powers.

    Every length-d walk between nodes at distance d is a shortest path, so
    sigma[s, t] = (A ** dist[s, t])[s, t].
    """
    n = matrix.shape[0]
    finite = np.isfinite(dist)
    longest = int(dist[finite].max()) if finite.any() else 0
    power = np.eye(n, dtype=np.int64)
    powers = [power]
    for _ in range(longest):
        power = power @ matrix
        powers.append(power)
    sigma = np.zeros((n, n), dtype=np.int64)
    for d in range(longest + 1):
        at_d = finite & (dist == d)
        sigma[at_d] = powers[d][at_d]
    return sigma


def oracle_betweenness(net: CourseNetwork) -> dict:
    """Brute-force betweenness from the sigma product identity:
    sigma_st(v) = sigma_sv * sigma_vt whenever v lies on an s-t geodesic."""
    keys, _ = net.adjacency_lists()
    matrix = adjacency_matrix(net)
    n = matrix.shape[0]
    if n <= 2:
        return {key: 0.0 for key in keys}
    dist = floyd_warshall(matrix)
    sigma = shortest_path_counts(matrix, dist)
    finite = np.isfinite(dist)
    upper = np.triu(np.ones((n, n), dtype=bool), k=1)  # unordered pairs s < t
    values = []
    for v in range(n):
        through = finite & (dist[:, v][:, None] + dist[v, :][None, :] == dist)
        valid = through & upper & finite
        valid[v, :] = False
        valid[:, v] = False
        contributions = np.outer(sigma[:, v], sigma[v, :]).astype(float)
        with np.errstate(invalid="ignore", divide="ignore"):
            ratio = np.where(valid, contributions / np.where(sigma == 0, 1, sigma), 0.0)
        values.append(float(ratio[valid].sum()) * 2.0 / ((n - 1) * (n - 2)))
    return dict(zip(keys, values))


def enumerate_betweenness(net: CourseNetwork) -> dict:
    """Literal oracle for small graphs: depth-first enumeration of every
    shortest path, counting interior visits."""
    keys, adj = net.adjacency_lists()
    n = len(keys)
    if n <= 2:
        return {key: 0.0 for key in keys}
    matrix = adjacency_matrix(net)
    dist = floyd_warshall(matrix)
    totals = [0.0] * n
    for s in range(n):
        for t in range(s + 1, n):
            if not np.isfinite(dist[s, t]) or dist[s, t] < 2:
                continue
            paths: list[list[int]] = []

            def extend(path: list[int]) -> None:
                head = path[-1]
                if head == t:
                    paths.append(list(path))
                    return
                for w in adj[head]:
                    # stay on geodesics only
                    if dist[s, head] + 1 == dist[s, w] and dist[s, w] + dist[w, t] == dist[s, t]:
                        path.append(w)
                        extend(path)
                        path.pop()

            extend([s])
            interior = [0] * n
            for path in paths:
                for v in path[1:-1]:
                    interior[v] += 1
            for v in range(n):
                if interior[v]:
                    totals[v] += interior[v] / len(paths)
    scale = 2.0 / ((n - 1) * (n - 2))
    return {key: totals[v] * scale for v, key in enumerate(keys)}


def oracle_eigenvector(net: CourseNetwork) -> dict:
    """Dense symmetric eigendecomposition; the top eigenvector oriented to
    the non-negative side. Only meaningful on connected graphs, where the
    dominant eigenvalue is simple."""
    keys, _ = net.adjacency_lists()
    matrix = adjacency_matrix(net).astype(float)
    _, vectors = np.linalg.eigh(matrix)
    top = vectors[:, -1]
    if top.sum() < 0:
        top = -top
    return dict(zip(keys, top.tolist()))


def is_connected(net: CourseNetwork) -> bool:
    keys, adj = net.adjacency_lists()
    if not keys:
        return False
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(keys)
