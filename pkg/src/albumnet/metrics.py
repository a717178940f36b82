"""Whole-graph statistics for one-mode projections.

Covers the standard descriptive bundle (density, exact diameter, average
degree and weighted degree, mean local clustering, average path length,
component counts), degree distributions with moment skewness, and hub
rankings. Path metrics are exact hop counts from all-pairs BFS restricted
to the giant component; edge weights never enter path lengths.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from albumnet import kernels
from albumnet.errors import EmptyGraphError
from albumnet.graph import ProjectedGraph


@dataclass(frozen=True)
class NetworkStats:
    """The per-graph statistic bundle.

    ``path_metrics_degenerate`` flags a giant component of a single node,
    where diameter and average path length are reported as zero.
    """

    node_count: int
    edge_count: int
    density: float
    diameter: int
    average_degree: float
    average_weighted_degree: float
    average_clustering: float
    average_path_length: float
    component_count: int
    giant_component_size: int
    path_metrics_degenerate: bool = False

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class DegreeDistribution:
    """(degree, fraction of nodes) points plus Fisher-Pearson skewness g1.

    Skewness is None when the degree sequence has fewer than three values
    or zero variance. g1 uses the biased central-moment estimator
    m3 / m2^(3/2) with no small-sample correction.
    """

    points: tuple[tuple[int, float], ...]
    skewness: float | None


@dataclass(frozen=True)
class HubRanking:
    """Top nodes by unweighted degree; ties broken by id ascending."""

    entries: tuple[tuple[str, str, int], ...]


def _giant_component_mask(indptr, indices) -> tuple[np.ndarray, int, int]:
    labels = kernels.connected_components(indptr, indices)
    sizes = np.bincount(labels)
    giant_label = int(np.argmax(sizes))  # first max = first-seen component
    mask = labels == giant_label
    return mask, int(sizes[giant_label]), len(sizes)


def _induced_csr(indptr, indices, mask) -> tuple[np.ndarray, np.ndarray]:
    # components are closed under edges, so filtering on the source suffices
    new_index = np.cumsum(mask) - 1
    node_count = int(mask.sum())
    src = np.repeat(np.arange(len(mask)), np.diff(indptr))
    keep = mask[src]
    new_src = new_index[src[keep]]
    new_dst = new_index[indices[keep]]
    new_indptr = np.zeros(node_count + 1, dtype=np.int64)
    np.cumsum(np.bincount(new_src, minlength=node_count), out=new_indptr[1:])
    return new_indptr, np.ascontiguousarray(new_dst, dtype=np.int32)


def compute_stats(graph: ProjectedGraph, jobs: int = 1) -> NetworkStats:
    """Compute the full statistic bundle for a non-empty projection.

    Diameter and average path length cover connected ordered pairs within
    the giant component only (the standard convention when a graph has
    multiple components); ``jobs`` parallelizes the underlying all-pairs
    BFS by source node without affecting results.
    """
    n = graph.node_count
    if n == 0:
        raise EmptyGraphError("cannot compute statistics of an empty graph")
    m = graph.edge_count
    indptr, indices = graph.csr()
    mask, giant_size, component_count = _giant_component_mask(indptr, indices)
    if giant_size >= 2:
        sub_indptr, sub_indices = _induced_csr(indptr, indices, mask)
        diameter, total, pairs = kernels.path_stats(sub_indptr, sub_indices, jobs=jobs)
        average_path_length = total / pairs
        degenerate = False
    else:
        diameter = 0
        average_path_length = 0.0
        degenerate = True
    clustering = kernels.local_clustering(indptr, indices, jobs=jobs)
    density = (2.0 * m) / (n * (n - 1)) if n > 1 else 0.0
    return NetworkStats(
        node_count=n,
        edge_count=m,
        density=density,
        diameter=int(diameter),
        average_degree=2.0 * m / n,
        average_weighted_degree=2.0 * graph.total_weight() / n,
        average_clustering=float(clustering.mean()),
        average_path_length=average_path_length,
        component_count=component_count,
        giant_component_size=giant_size,
        path_metrics_degenerate=degenerate,
    )


def giant_component_size(graph: ProjectedGraph) -> int:
    """Node count of the largest connected component (0 for an empty graph)."""
    if graph.node_count == 0:
        return 0
    labels = kernels.connected_components(*graph.csr())
    return int(np.bincount(labels).max())


def degree_distribution(graph: ProjectedGraph) -> DegreeDistribution:
    """Degree histogram as (k, p_k) points plus skewness of the sequence."""
    n = graph.node_count
    if n == 0:
        raise EmptyGraphError("cannot compute a degree distribution of an empty graph")
    degrees = graph.degrees()
    counts = np.bincount(degrees.astype(np.int64))
    points = tuple(
        (int(k), int(count) / n) for k, count in enumerate(counts) if count
    )
    skewness = None
    if n >= 3:
        values = degrees.astype(np.float64)
        centered = values - values.mean()
        m2 = float((centered ** 2).mean())
        if m2 > 0.0:
            m3 = float((centered ** 3).mean())
            skewness = m3 / m2 ** 1.5
    return DegreeDistribution(points=points, skewness=skewness)


def top_hubs(graph: ProjectedGraph, k: int) -> HubRanking:
    """Top-k nodes by degree; k beyond the node count returns all nodes."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    degrees = graph.degrees()
    order = sorted(
        range(graph.node_count),
        key=lambda i: (-int(degrees[i]), graph.node_ids[i]),
    )
    entries = tuple(
        (graph.node_ids[i], graph.node_labels[i], int(degrees[i]))
        for i in order[:k]
    )
    return HubRanking(entries=entries)
