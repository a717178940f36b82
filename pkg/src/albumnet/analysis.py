"""Temporal giant-component growth and the per-role ablation sweep.

The sweep rebuilds each role-specific projection from the bipartite graph
rather than diffing the base projection, so "a link dies iff it was
completely dependent on the omitted role" holds by construction. Fractions
use the base network's node and edge counts as denominators, keeping rows
comparable across roles.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from albumnet import kernels
from albumnet.errors import InsufficientDataError, UndefinedStatisticError
from albumnet.graph import (
    ALBUM_MODE,
    COLLABORATOR_MODE,
    BipartiteGraph,
    project,
    restrict_to_albums,
)
from albumnet.metrics import NetworkStats, compute_stats, giant_component_size


def pearson(x, y) -> float:
    """Product-moment correlation coefficient of two equal-length series."""
    xs = np.asarray(x, dtype=np.float64)
    ys = np.asarray(y, dtype=np.float64)
    if xs.ndim != 1 or xs.shape != ys.shape or len(xs) < 2:
        raise ValueError("pearson needs two equal-length series of >= 2 points")
    dx = xs - xs.mean()
    dy = ys - ys.mean()
    sx = float((dx * dx).sum())
    sy = float((dy * dy).sum())
    if sx == 0.0 or sy == 0.0:
        raise UndefinedStatisticError(
            "correlation is undefined for a zero-variance series"
        )
    return float((dx * dy).sum() / np.sqrt(sx * sy))


@dataclass(frozen=True)
class GrowthSeries:
    """Yearly (year, total nodes, giant component size) snapshots.

    ``pearson_r`` correlates total nodes with giant size over the points
    (None when undefined); ``albums_without_year`` counts albums the
    analysis had to exclude.
    """

    points: tuple[tuple[int, int, int], ...]
    pearson_r: float | None
    albums_without_year: int


@dataclass(frozen=True)
class AblationResult:
    omitted_role: str
    omitted_edges: int
    omitted_fraction: float
    giant_component_size: int
    giant_component_fraction: float


@dataclass(frozen=True)
class DescriptiveStats:
    min: float
    max: float
    mean: float
    std: float

    @classmethod
    def from_values(cls, values) -> "DescriptiveStats":
        arr = np.asarray(values, dtype=np.float64)
        return cls(
            min=float(arr.min()),
            max=float(arr.max()),
            mean=float(arr.mean()),
            std=float(arr.std()),  # population estimator
        )


@dataclass(frozen=True)
class AblationSweep:
    """One row per role in the inventory, most impactful first.

    Ordering: giant component size ascending, then omitted fraction
    descending, then role label. ``descriptive`` summarizes omitted_edges,
    edge_count, giant_component_size, and density across the role-specific
    networks; ``pearson_r`` correlates omitted edges with giant size and is
    None when undefined (fewer than two roles or zero variance).
    """

    mode: str
    base_stats: NetworkStats
    results: tuple[AblationResult, ...]
    descriptive: dict[str, DescriptiveStats]
    pearson_r: float | None


def growth_series(bipartite: BipartiteGraph, mode: str) -> GrowthSeries:
    """Giant-component growth with album release years as the clock.

    For each year present, the graph is restricted to albums released up
    to that year (collaborators exist only while incident to an included
    album), projected, and measured. Needs at least two distinct years.
    """
    years = sorted(
        {a.release_year for a in bipartite.albums if a.release_year is not None}
    )
    if len(years) < 2:
        raise InsufficientDataError(
            f"growth needs >= 2 distinct release years, found {len(years)}"
        )
    missing = sum(1 for a in bipartite.albums if a.release_year is None)
    points = []
    for year in years:
        included = [
            i
            for i, a in enumerate(bipartite.albums)
            if a.release_year is not None and a.release_year <= year
        ]
        snapshot = project(restrict_to_albums(bipartite, included), mode)
        points.append((year, snapshot.node_count, giant_component_size(snapshot)))
    nodes = [p[1] for p in points]
    giants = [p[2] for p in points]
    try:
        r = pearson(nodes, giants)
    except UndefinedStatisticError:
        r = None
    return GrowthSeries(
        points=tuple(points), pearson_r=r, albums_without_year=missing
    )


def _surviving_groups(
    bipartite: BipartiteGraph, mode: str, role: str, sole_role
) -> tuple[np.ndarray, np.ndarray, int]:
    """Flattened opposite-mode membership rows after striking ``role``.

    An association survives ablation iff ``role`` is not its only role,
    i.e. its precomputed sole_role differs from ``role``.
    """
    if mode == COLLABORATOR_MODE:
        n_nodes = bipartite.collaborator_count
        rows = (
            [c for c in row if sole_role[(g, c)] != role]
            for g, row in enumerate(bipartite.album_neighbors)
        )
    else:
        n_nodes = bipartite.album_count
        rows = (
            [a for a in row if sole_role[(a, g)] != role]
            for g, row in enumerate(bipartite.collaborator_neighbors)
        )
    indptr = [0]
    members: list[int] = []
    for row in rows:
        members.extend(row)
        indptr.append(len(members))
    return (
        np.asarray(indptr, dtype=np.int64),
        np.asarray(members, dtype=np.int32),
        n_nodes,
    )


def ablation_sweep(
    bipartite: BipartiteGraph, mode: str, jobs: int = 1
) -> AblationSweep:
    """Ablate every role in the inventory, reproject, and measure the damage."""
    if mode not in (ALBUM_MODE, COLLABORATOR_MODE):
        raise ValueError(f"unknown mode {mode!r}")
    inventory = bipartite.role_inventory()
    if not inventory:
        raise InsufficientDataError("the graph has no roles to ablate")
    base = project(bipartite, mode)
    base_stats = compute_stats(base, jobs=jobs)
    base_edges = base.edge_count
    n = base.node_count
    sole_role = {
        pair: next(iter(role_set)) if len(role_set) == 1 else None
        for pair, role_set in bipartite.associations.items()
    }
    results = []
    for role in inventory:
        group_indptr, group_members, n_nodes = _surviving_groups(
            bipartite, mode, role, sole_role
        )
        edge_count, giant = kernels.projection_stats(
            group_indptr, group_members, n_nodes
        )
        omitted = base_edges - edge_count
        results.append(
            AblationResult(
                omitted_role=role,
                omitted_edges=omitted,
                omitted_fraction=omitted / base_edges if base_edges else 0.0,
                giant_component_size=giant,
                giant_component_fraction=giant / n,
            )
        )
    results.sort(
        key=lambda r: (r.giant_component_size, -r.omitted_fraction, r.omitted_role)
    )
    omitted_series = [r.omitted_edges for r in results]
    giant_series = [r.giant_component_size for r in results]
    edge_series = [base_edges - o for o in omitted_series]
    density_series = [
        (2.0 * m) / (n * (n - 1)) if n > 1 else 0.0 for m in edge_series
    ]
    descriptive = {
        "omitted_edges": DescriptiveStats.from_values(omitted_series),
        "edge_count": DescriptiveStats.from_values(edge_series),
        "giant_component_size": DescriptiveStats.from_values(giant_series),
        "density": DescriptiveStats.from_values(density_series),
    }
    r = None
    if len(results) >= 2:
        try:
            r = pearson(omitted_series, giant_series)
        except UndefinedStatisticError:
            r = None
    return AblationSweep(
        mode=mode,
        base_stats=base_stats,
        results=tuple(results),
        descriptive=descriptive,
        pearson_r=r,
    )
