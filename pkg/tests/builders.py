"""Shared construction helpers for tests.

Synthetic ids are zero-padded so lexicographic id order equals numeric
index order, which keeps hand-written index expectations valid.
"""

from __future__ import annotations

import random

from albumnet.graph import (
    AlbumNode,
    BipartiteGraph,
    CollaboratorNode,
    ProjectedGraph,
)
from albumnet.records import AssociationRecord

DEFAULT_ROLES = ("producer", "engineer", "mastered", "written", "drums", "photography")


def make_record(album="a1", collaborator="c1", role="Producer", year: int | None = 1970,
                title=None, artist=None, name=None):
    return AssociationRecord(
        album_id=album,
        album_title=title if title is not None else f"Title {album}",
        main_artist=artist if artist is not None else f"Artist {album}",
        release_year=year,
        collaborator_id=collaborator,
        collaborator_name=name if name is not None else f"Name {collaborator}",
        role_raw=role,
    )


def make_bipartite(role_sets, n_albums, n_collaborators, years=None) -> BipartiteGraph:
    """Build a BipartiteGraph straight from {(a, c): roles} index pairs."""
    years = years or {}
    albums = tuple(
        AlbumNode(f"a{i:03d}", f"Album {i}", f"Artist {i}", years.get(i, 1970))
        for i in range(n_albums)
    )
    collaborators = tuple(
        CollaboratorNode(f"c{i:03d}", f"Person {i}") for i in range(n_collaborators)
    )
    associations = {pair: frozenset(roles) for pair, roles in role_sets.items()}
    return BipartiteGraph(albums, collaborators, associations)


def random_role_sets(rng: random.Random, n_albums, n_collaborators, p=0.3,
                     roles=DEFAULT_ROLES):
    """Random bipartite structure: each (album, collaborator) pair joins with
    probability p and gets one or two distinct roles."""
    role_sets = {}
    for a in range(n_albums):
        for c in range(n_collaborators):
            if rng.random() < p:
                count = 1 if rng.random() < 0.7 else 2
                role_sets[(a, c)] = set(rng.sample(roles, count))
    return role_sets


def graph_from_edges(n, edges, mode="collaborator") -> ProjectedGraph:
    """ProjectedGraph over n synthetic nodes.

    edges: iterable of (u, v) pairs (weight 1 each) or a dict mapping
    (u, v) to an integer weight (synthesized support atoms).
    """
    ids = tuple(f"n{i:05d}" for i in range(n))
    edge_map = {}
    if isinstance(edges, dict):
        for (u, v), weight in edges.items():
            key = (u, v) if u < v else (v, u)
            edge_map[key] = tuple(range(weight))
    else:
        for u, v in edges:
            key = (u, v) if u < v else (v, u)
            edge_map[key] = (0,)
    return ProjectedGraph(mode, ids, ids, edge_map)


def random_graph_edges(rng: random.Random, n, p):
    return [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]


def random_connected_edges(rng: random.Random, n, extra_edge_factor=1.5):
    """Random spanning tree plus extra random edges: always connected."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u = order[rng.randrange(i)]
        v = order[i]
        edges.add((u, v) if u < v else (v, u))
    target = int(n * extra_edge_factor)
    while len(edges) < target:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u != v:
            edges.add((u, v) if u < v else (v, u))
    return sorted(edges)
