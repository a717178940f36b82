"""Pure-Python kernel implementations.

Drop-in fallback for the compiled extension: same signatures, same
results, no C toolchain required. Orders of magnitude slower on large
graphs, which is fine for portability and for benchmarking against the
compiled core.
"""

from __future__ import annotations

from collections import deque

import numpy as np

NAME = "python"


def _neighbor_lists(indptr: np.ndarray, indices: np.ndarray) -> list[list[int]]:
    n = len(indptr) - 1
    return [indices[indptr[i]:indptr[i + 1]].tolist() for i in range(n)]


def path_stats(indptr, indices, jobs: int = 1):
    """Exact hop-count statistics via one BFS per source node.

    Returns (diameter, total_distance, reachable_pairs) over ordered pairs
    (s, t) with t reachable from s and t != s. ``jobs`` is accepted for
    interface parity; this backend runs single-threaded.
    """
    n = len(indptr) - 1
    neighbors = _neighbor_lists(indptr, indices)
    diameter = 0
    total = 0
    pairs = 0
    dist = [-1] * n
    for source in range(n):
        for i in range(n):
            dist[i] = -1
        dist[source] = 0
        queue = deque([source])
        ecc = 0
        while queue:
            v = queue.popleft()
            dv = dist[v] + 1
            for u in neighbors[v]:
                if dist[u] < 0:
                    dist[u] = dv
                    total += dv
                    pairs += 1
                    ecc = dv
                    queue.append(u)
        if ecc > diameter:
            diameter = ecc
    return diameter, total, pairs


def local_clustering(indptr, indices, jobs: int = 1) -> np.ndarray:
    """Fraction of each node's neighbor pairs that are themselves linked."""
    n = len(indptr) - 1
    neighbors = _neighbor_lists(indptr, indices)
    neighbor_sets = [set(adj) for adj in neighbors]
    out = np.zeros(n, dtype=np.float64)
    for v in range(n):
        d = len(neighbors[v])
        if d < 2:
            continue
        # each edge between neighbors is counted from both endpoints
        links = sum(len(neighbor_sets[v] & neighbor_sets[u]) for u in neighbors[v])
        out[v] = links / (d * (d - 1))
    return out


def connected_components(indptr, indices) -> np.ndarray:
    n = len(indptr) - 1
    neighbors = _neighbor_lists(indptr, indices)
    labels = np.full(n, -1, dtype=np.int32)
    label = 0
    for start in range(n):
        if labels[start] >= 0:
            continue
        labels[start] = label
        stack = [start]
        while stack:
            v = stack.pop()
            for u in neighbors[v]:
                if labels[u] < 0:
                    labels[u] = label
                    stack.append(u)
        label += 1
    return labels


def projection_stats(group_indptr, group_members, n_nodes: int):
    """Edge count and giant-component size of a union of member cliques.

    Each group row is a clique of the projection; nodes outside every
    group count as singleton components.
    """
    parent = list(range(n_nodes))
    size = [1] * n_nodes

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    giant = 1 if n_nodes else 0
    edges: set[tuple[int, int]] = set()
    n_groups = len(group_indptr) - 1
    for g in range(n_groups):
        row = group_members[group_indptr[g]:group_indptr[g + 1]].tolist()
        k = len(row)
        if k < 2:
            continue
        for i in range(k - 1):
            u = row[i]
            for j in range(i + 1, k):
                v = row[j]
                edges.add((u, v) if u < v else (v, u))
        anchor = row[0]
        for u in row[1:]:
            ra = find(anchor)
            rb = find(u)
            if ra == rb:
                continue
            if size[ra] < size[rb]:
                ra, rb = rb, ra
            parent[rb] = ra
            size[ra] += size[rb]
            if size[ra] > giant:
                giant = size[ra]
    return len(edges), giant
