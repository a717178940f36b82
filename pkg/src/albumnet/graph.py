"""Bipartite collaboration graph, weighted one-mode projections, role ablation.

The bipartite graph is the source of truth: albums on one side,
collaborators on the other, and one association per distinct
(album, collaborator) pair carrying the union of that pair's canonical
roles. Both one-mode projections weight an edge by the number of distinct
shared neighbors (shared collaborators for album pairs, shared albums for
collaborator pairs) and keep those neighbors as the edge's support atoms.
Ablation strikes one role at bipartite level and reprojects, which makes
"a link is cut iff it was completely dependent on the omitted role" exact:
a projected edge dies exactly when it loses its last support atom.
"""

from __future__ import annotations

import csv
import warnings
from dataclasses import dataclass
from typing import IO, Callable, Iterable, Mapping

import numpy as np

from albumnet import roles as rolenorm
from albumnet.errors import EmptyGraphError, UndefinedStatisticError
from albumnet.records import Dataset

ALBUM_MODE = "album"
COLLABORATOR_MODE = "collaborator"
MODES = (ALBUM_MODE, COLLABORATOR_MODE)


@dataclass(frozen=True)
class AlbumNode:
    id: str
    title: str
    main_artist: str
    release_year: int | None


@dataclass(frozen=True)
class CollaboratorNode:
    id: str
    name: str


@dataclass(frozen=True)
class AblationSpec:
    """Names one canonical role whose links are to be struck from the graph."""

    omitted_role: str

    def __post_init__(self):
        if rolenorm.normalize_role(self.omitted_role) != self.omitted_role:
            raise ValueError(f"role {self.omitted_role!r} is not canonical")


class BipartiteGraph:
    """Albums and collaborators joined by role-labelled associations.

    Nodes on both sides are ordered lexicographically by id; associations
    map (album index, collaborator index) to a non-empty frozenset of
    canonical role labels. Neighbor lists are precomputed in sorted form
    at construction and instances are treated as immutable afterwards, so
    a finished graph is safe to share across threads.
    """

    __slots__ = (
        "albums",
        "collaborators",
        "associations",
        "album_neighbors",
        "collaborator_neighbors",
    )

    def __init__(
        self,
        albums: Iterable[AlbumNode],
        collaborators: Iterable[CollaboratorNode],
        associations: Mapping[tuple[int, int], frozenset[str]],
    ):
        self.albums = tuple(albums)
        self.collaborators = tuple(collaborators)
        self.associations = dict(associations)
        album_adj: list[list[int]] = [[] for _ in self.albums]
        collab_adj: list[list[int]] = [[] for _ in self.collaborators]
        for (a, c), role_set in self.associations.items():
            if not role_set:
                raise ValueError(f"association ({a}, {c}) has an empty role set")
            album_adj[a].append(c)
            collab_adj[c].append(a)
        self.album_neighbors = tuple(tuple(sorted(adj)) for adj in album_adj)
        self.collaborator_neighbors = tuple(tuple(sorted(adj)) for adj in collab_adj)

    @property
    def album_count(self) -> int:
        return len(self.albums)

    @property
    def collaborator_count(self) -> int:
        return len(self.collaborators)

    @property
    def association_count(self) -> int:
        return len(self.associations)

    def role_inventory(self) -> list[str]:
        """Sorted list of every canonical role present in any association."""
        return sorted({role for role_set in self.associations.values() for role in role_set})

    def __eq__(self, other) -> bool:
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return (
            self.albums == other.albums
            and self.collaborators == other.collaborators
            and self.associations == other.associations
        )

    def __repr__(self) -> str:
        return (
            f"BipartiteGraph(albums={self.album_count}, "
            f"collaborators={self.collaborator_count}, "
            f"associations={self.association_count})"
        )


class ProjectedGraph:
    """Weighted one-mode simple graph with per-edge support atoms.

    ``edges`` maps (u, v) node-index pairs with u < v to the sorted tuple
    of opposite-mode node indices shared by u and v; the edge weight is
    that tuple's length. Node indices follow the lexicographic id order of
    the source bipartite graph, and isolated nodes stay in the node set so
    densities and component counts remain comparable across ablations.
    """

    __slots__ = ("mode", "node_ids", "node_labels", "edges", "_csr")

    def __init__(
        self,
        mode: str,
        node_ids: Iterable[str],
        node_labels: Iterable[str],
        edges: Mapping[tuple[int, int], tuple[int, ...]],
    ):
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}")
        self.mode = mode
        self.node_ids = tuple(node_ids)
        self.node_labels = tuple(node_labels)
        self.edges = dict(edges)
        n = len(self.node_ids)
        for (u, v), support in self.edges.items():
            if not 0 <= u < v < n:
                raise ValueError(f"bad edge ({u}, {v}) for {n} nodes")
            if not support:
                raise ValueError(f"edge ({u}, {v}) has empty support")
        self._csr = None

    @property
    def node_count(self) -> int:
        return len(self.node_ids)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def total_weight(self) -> int:
        return sum(len(support) for support in self.edges.values())

    def weight(self, u: int, v: int) -> int:
        """Weight of edge (u, v), or 0 when the edge does not exist."""
        key = (u, v) if u < v else (v, u)
        support = self.edges.get(key)
        return len(support) if support else 0

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Adjacency in compressed sorted-neighbor form (indptr, indices).

        Built once on first use; both directions of every edge are present
        and each node's neighbor run is sorted ascending.
        """
        if self._csr is None:
            n = len(self.node_ids)
            if self.edges:
                pairs = np.array(list(self.edges.keys()), dtype=np.int32)
                src = np.concatenate([pairs[:, 0], pairs[:, 1]])
                dst = np.concatenate([pairs[:, 1], pairs[:, 0]])
                order = np.lexsort((dst, src))
                src = src[order]
                dst = dst[order]
            else:
                src = np.empty(0, dtype=np.int32)
                dst = np.empty(0, dtype=np.int32)
            indptr = np.zeros(n + 1, dtype=np.int64)
            np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
            self._csr = (indptr, np.ascontiguousarray(dst, dtype=np.int32))
        return self._csr

    def degrees(self) -> np.ndarray:
        indptr, _ = self.csr()
        return np.diff(indptr)

    def sorted_edges(self) -> list[tuple[tuple[int, int], tuple[int, ...]]]:
        return sorted(self.edges.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjectedGraph):
            return NotImplemented
        return (
            self.mode == other.mode
            and self.node_ids == other.node_ids
            and self.edges == other.edges
        )

    def __repr__(self) -> str:
        return (
            f"ProjectedGraph(mode={self.mode!r}, nodes={self.node_count}, "
            f"edges={self.edge_count})"
        )


def build_bipartite(
    dataset: Dataset, normalizer: Callable[[str], str] | None = None
) -> BipartiteGraph:
    """Collapse records into one association per (album, collaborator) pair.

    Each association carries the union of its normalized roles; node
    metadata comes from the first record mentioning each id. The default
    normalizer is roles.normalize_role.
    """
    if not dataset.records:
        raise EmptyGraphError("cannot build a bipartite graph from an empty dataset")
    if normalizer is None:
        normalizer = rolenorm.normalize_role
    album_meta: dict[str, AlbumNode] = {}
    collab_meta: dict[str, CollaboratorNode] = {}
    for r in dataset.records:
        if r.album_id not in album_meta:
            album_meta[r.album_id] = AlbumNode(
                r.album_id, r.album_title, r.main_artist, r.release_year
            )
        if r.collaborator_id not in collab_meta:
            collab_meta[r.collaborator_id] = CollaboratorNode(
                r.collaborator_id, r.collaborator_name
            )
    albums = tuple(album_meta[key] for key in sorted(album_meta))
    collaborators = tuple(collab_meta[key] for key in sorted(collab_meta))
    album_index = {node.id: i for i, node in enumerate(albums)}
    collab_index = {node.id: i for i, node in enumerate(collaborators)}
    role_sets: dict[tuple[int, int], set[str]] = {}
    for r in dataset.records:
        key = (album_index[r.album_id], collab_index[r.collaborator_id])
        role_sets.setdefault(key, set()).add(str(normalizer(r.role_raw)))
    associations = {key: frozenset(value) for key, value in role_sets.items()}
    return BipartiteGraph(albums, collaborators, associations)


def _album_label(node: AlbumNode) -> str:
    return f"{node.main_artist} - {node.title}" if node.main_artist else node.title


def project(bipartite: BipartiteGraph, mode: str) -> ProjectedGraph:
    """One-mode projection with shared-neighbor weights.

    Album mode: two albums connect iff at least one collaborator worked on
    both, the weight being the number of such collaborators. Collaborator
    mode: two people connect iff they share at least one album, so every
    album's collaborator set induces a clique.
    """
    if mode == ALBUM_MODE:
        groups = bipartite.collaborator_neighbors
        node_ids = tuple(node.id for node in bipartite.albums)
        node_labels = tuple(_album_label(node) for node in bipartite.albums)
    elif mode == COLLABORATOR_MODE:
        groups = bipartite.album_neighbors
        node_ids = tuple(node.id for node in bipartite.collaborators)
        node_labels = tuple(node.name for node in bipartite.collaborators)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    support: dict[tuple[int, int], list[int]] = {}
    for atom, members in enumerate(groups):
        k = len(members)
        for i in range(k - 1):
            u = members[i]
            for j in range(i + 1, k):
                support.setdefault((u, members[j]), []).append(atom)
    edges = {pair: tuple(atoms) for pair, atoms in support.items()}
    return ProjectedGraph(mode, node_ids, node_labels, edges)


def ablate(bipartite: BipartiteGraph, spec: AblationSpec) -> BipartiteGraph:
    """Strike one role from every association.

    Associations left without any role disappear; both node sets stay
    intact, so nodes may become isolated. A role absent from the graph is
    a no-op and emits a warning.
    """
    role = spec.omitted_role
    if not any(role in role_set for role_set in bipartite.associations.values()):
        warnings.warn(
            f"role {role!r} does not occur in the graph; ablation is a no-op",
            stacklevel=2,
        )
        return BipartiteGraph(
            bipartite.albums, bipartite.collaborators, bipartite.associations
        )
    associations: dict[tuple[int, int], frozenset[str]] = {}
    for pair, role_set in bipartite.associations.items():
        if role in role_set:
            remaining = role_set - {role}
            if remaining:
                associations[pair] = remaining
        else:
            associations[pair] = role_set
    return BipartiteGraph(bipartite.albums, bipartite.collaborators, associations)


@dataclass(frozen=True)
class OmittedEdgeStats:
    omitted_edges: int
    omitted_fraction: float


def omitted_edge_stats(
    base: ProjectedGraph, ablated: ProjectedGraph
) -> OmittedEdgeStats:
    """How many base edges the ablated projection lost, absolute and relative."""
    if base.mode != ablated.mode:
        raise ValueError(
            f"projections must share a mode, got {base.mode!r} and {ablated.mode!r}"
        )
    if base.edge_count == 0:
        raise UndefinedStatisticError(
            "base projection has no edges; omitted fraction is undefined"
        )
    omitted = base.edge_count - ablated.edge_count
    return OmittedEdgeStats(omitted, omitted / base.edge_count)


def restrict_to_albums(
    bipartite: BipartiteGraph, album_indices: Iterable[int]
) -> BipartiteGraph:
    """Sub-graph on the given albums plus the collaborators incident to them.

    Collaborators with no remaining album do not exist in the result.
    Relative node order (hence lexicographic id order) is preserved.
    """
    keep_albums = sorted(set(album_indices))
    keep_collabs = sorted(
        {c for a in keep_albums for c in bipartite.album_neighbors[a]}
    )
    album_map = {old: new for new, old in enumerate(keep_albums)}
    collab_map = {old: new for new, old in enumerate(keep_collabs)}
    associations = {
        (album_map[a], collab_map[c]): role_set
        for (a, c), role_set in bipartite.associations.items()
        if a in album_map
    }
    return BipartiteGraph(
        tuple(bipartite.albums[i] for i in keep_albums),
        tuple(bipartite.collaborators[i] for i in keep_collabs),
        associations,
    )


def write_edges_csv(graph: ProjectedGraph, stream: IO[str]) -> None:
    """Edge-list export: source_id,target_id,weight, sorted by id pair."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(("source_id", "target_id", "weight"))
    for (u, v), support in graph.sorted_edges():
        writer.writerow((graph.node_ids[u], graph.node_ids[v], len(support)))


def write_bipartite_csv(bipartite: BipartiteGraph, stream: IO[str]) -> None:
    """Bipartite export: album_id,collaborator_id,roles (semicolon-joined)."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(("album_id", "collaborator_id", "roles"))
    for a, c in sorted(bipartite.associations):
        joined = ";".join(sorted(bipartite.associations[(a, c)]))
        writer.writerow((bipartite.albums[a].id, bipartite.collaborators[c].id, joined))
