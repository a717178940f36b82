"""Acceptance suite.

One test per criterion; each prints a PASS/FAIL line so a -s run reads as
a checklist. Oracle-based throughout: projections, ablations and metrics
are checked against the brute-force references in oracles.py, never
against the code paths they validate.
"""

import itertools
import json
import random
import string
import time
from contextlib import contextmanager

import numpy as np
import pytest
from click.testing import CliRunner

from albumnet import cli, kernels
from albumnet.analysis import ablation_sweep, pearson
from albumnet.graph import AblationSpec, ablate, build_bipartite, project
from albumnet.metrics import compute_stats, degree_distribution
from albumnet.records import AssociationRecord, Dataset
from albumnet.roles import normalize_role
from builders import graph_from_edges, make_bipartite, random_role_sets
from oracles import (
    ablated_memberships,
    components_oracle,
    project_oracle,
    stats_oracle,
)
from test_cli import hash_tree
from test_roles import GOLDEN


@contextmanager
def criterion(name):
    try:
        yield
    except BaseException:
        print(f"\nACCEPTANCE {name}: FAIL")
        raise
    print(f"\nACCEPTANCE {name}: PASS")


# --- 1. role normalization golden suite -----------------------------------

def test_criterion_1_role_normalization():
    with criterion("1 role-normalization golden suite"):
        started = time.monotonic()
        assert normalize_role("Written-By [co-written]") == "written"
        assert len(GOLDEN) >= 21
        for raw, expected in GOLDEN:
            assert normalize_role(raw) == expected, raw
        rng = random.Random(20260810)
        alphabet = string.ascii_letters + string.digits + " []-[]by,&/"
        for _ in range(10_000):
            raw = "".join(
                rng.choice(alphabet) for _ in range(rng.randrange(1, 30))
            )
            label = normalize_role(raw)
            again = normalize_role(label.canonical)
            assert again == label.canonical  # idempotence
            assert "[" not in label and "]" not in label
            assert "-" not in label
            assert label == label.lower()
        elapsed = time.monotonic() - started
        assert elapsed < 1.0, f"took {elapsed:.2f}s"


# --- 2. projection oracle ---------------------------------------------------

def test_criterion_2_projection_oracle():
    with criterion("2 projection vs brute force (200 random bipartite graphs)"):
        started = time.monotonic()
        rng = random.Random(8110)
        for _ in range(200):
            n_albums = rng.randrange(1, 16)
            n_collabs = rng.randrange(1, 21)
            role_sets = random_role_sets(rng, n_albums, n_collabs,
                                         p=rng.uniform(0.05, 0.4))
            bipartite = make_bipartite(role_sets, n_albums, n_collabs)
            memberships = set(role_sets)
            for mode in ("album", "collaborator"):
                got = {
                    pair: set(atoms)
                    for pair, atoms in project(bipartite, mode).edges.items()
                }
                want = project_oracle(memberships, n_albums, n_collabs, mode)
                assert got == want
        elapsed = time.monotonic() - started
        assert elapsed < 10.0, f"took {elapsed:.2f}s"


# --- 3. ablation semantics --------------------------------------------------

def test_criterion_3_ablation_semantics():
    with criterion("3 ablation semantics (rule example + 100 random fixtures)"):
        started = time.monotonic()
        # weight-2 link, one producer-only and one engineer-only supporter:
        # striking producer keeps the link at weight 1
        b = make_bipartite(
            {
                (0, 0): {"producer"},
                (1, 0): {"producer"},
                (0, 1): {"engineer"},
                (1, 1): {"engineer"},
            },
            2,
            2,
        )
        base = project(b, "album")
        assert base.weight(0, 1) == 2
        reduced = project(ablate(b, AblationSpec("producer")), "album")
        assert reduced.weight(0, 1) == 1
        assert set(reduced.edges) == {(0, 1)}

        rng = random.Random(31337)
        for _ in range(100):
            n_albums = rng.randrange(2, 10)
            n_collabs = rng.randrange(2, 12)
            role_sets = random_role_sets(rng, n_albums, n_collabs,
                                         p=rng.uniform(0.1, 0.4))
            if not role_sets:
                continue
            bipartite = make_bipartite(role_sets, n_albums, n_collabs)
            roles = sorted({r for rs in role_sets.values() for r in rs})
            role = rng.choice(roles)
            ablated = ablate(bipartite, AblationSpec(role))
            survivors = ablated_memberships(role_sets, role)
            for mode, n_nodes in (("album", n_albums), ("collaborator", n_collabs)):
                base_g = project(bipartite, mode)
                ablated_g = project(ablated, mode)
                got = {p: set(s) for p, s in ablated_g.edges.items()}
                assert got == project_oracle(survivors, n_albums, n_collabs, mode)
                # never increases a weight nor the giant component
                for pair, support in ablated_g.edges.items():
                    assert len(support) <= len(base_g.edges[pair])
                base_labels = components_oracle(n_nodes, list(base_g.edges))
                abl_labels = components_oracle(n_nodes, list(ablated_g.edges))
                base_giant = max(map(base_labels.count, set(base_labels)))
                abl_giant = max(map(abl_labels.count, set(abl_labels)))
                assert abl_giant <= base_giant
        elapsed = time.monotonic() - started
        assert elapsed < 10.0, f"took {elapsed:.2f}s"


# --- 4. metrics oracle -------------------------------------------------------

def _connected(n, edges):
    labels = components_oracle(n, edges)
    return max(labels) == 0 if n else True


def connected_catalog():
    """Every labelled connected graph on 1-5 nodes, plus structured
    families and seeded random connected graphs on 6-8 nodes."""
    graphs = []
    for n in range(1, 6):
        pairs = list(itertools.combinations(range(n), 2))
        for bits in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
            if _connected(n, edges):
                graphs.append((n, edges))
    rng = random.Random(404)
    for n in (6, 7, 8):
        path = [(i, i + 1) for i in range(n - 1)]
        cycle = path + [(0, n - 1)]
        star = [(0, i) for i in range(1, n)]
        complete = list(itertools.combinations(range(n), 2))
        lollipop = [(0, 1), (1, 2), (0, 2)] + [(i, i + 1) for i in range(2, n - 1)]
        graphs += [(n, path), (n, cycle), (n, star), (n, complete), (n, lollipop)]
        for _ in range(25):
            while True:
                edges = [
                    (u, v)
                    for u in range(n)
                    for v in range(u + 1, n)
                    if rng.random() < 0.45
                ]
                if _connected(n, edges):
                    graphs.append((n, edges))
                    break
    return graphs


INT_FIELDS = ("node_count", "edge_count", "diameter", "component_count",
              "giant_component_size")
FLOAT_FIELDS = ("density", "average_degree", "average_weighted_degree",
                "average_clustering", "average_path_length")


def _assert_stats_match(graph, weights=None):
    got = compute_stats(graph).to_dict()
    want = stats_oracle(graph.node_count, list(graph.edges), weights)
    for field in INT_FIELDS:
        assert got[field] == want[field], field
    for field in FLOAT_FIELDS:
        assert abs(got[field] - want[field]) <= 1e-9, field
    assert got["path_metrics_degenerate"] == want["path_metrics_degenerate"]


def test_criterion_4_metrics_oracle():
    with criterion("4 metrics vs naive reference (catalog + 50-node graphs)"):
        started = time.monotonic()
        catalog = connected_catalog()
        assert len(catalog) >= 772  # the exhaustive <=5-node portion alone
        for n, edges in catalog:
            _assert_stats_match(graph_from_edges(n, edges))
        rng = random.Random(615)
        for _ in range(50):
            edges = [
                (u, v)
                for u in range(50)
                for v in range(u + 1, 50)
                if rng.random() < 0.08
            ]
            weights = {e: rng.randrange(1, 4) for e in edges}
            _assert_stats_match(graph_from_edges(50, weights), weights)
        elapsed = time.monotonic() - started
        assert elapsed < 60.0, f"took {elapsed:.2f}s"


# --- 5. analytic spot checks --------------------------------------------------

def test_criterion_5_analytic_spot_checks():
    with criterion("5 analytic spot checks"):
        triangle = compute_stats(graph_from_edges(3, [(0, 1), (1, 2), (0, 2)]))
        assert triangle.density == 1.0
        assert triangle.average_clustering == 1.0
        assert triangle.diameter == 1

        p3 = compute_stats(graph_from_edges(3, [(0, 1), (1, 2)]))
        assert p3.average_path_length == pytest.approx(4 / 3, abs=1e-12)
        assert p3.average_clustering == 0.0

        cycle = graph_from_edges(8, [(i, (i + 1) % 8) for i in range(8)])
        assert degree_distribution(cycle).skewness is None

        xs = list(range(1, 6))
        assert pearson(xs, [3 * x + 2 for x in xs]) == 1.0


# --- 6. performance contracts --------------------------------------------------

def _require_compiled():
    if kernels.BACKEND != "c":
        pytest.fail(
            "performance contract requires the compiled kernels "
            "(build the extension; pure fallback is orders of magnitude slower)"
        )


def synthetic_projection(n_nodes=10_000, n_edges=130_000, seed=2026):
    rng = np.random.default_rng(seed)
    edges = {(i, i + 1) for i in range(n_nodes - 1)}  # connected backbone
    while len(edges) < n_edges:
        us = rng.integers(0, n_nodes, 50_000).tolist()
        vs = rng.integers(0, n_nodes, 50_000).tolist()
        for u, v in zip(us, vs):
            if u != v:
                edges.add((u, v) if u < v else (v, u))
                if len(edges) == n_edges:
                    break
    return graph_from_edges(n_nodes, sorted(edges))


def synthetic_sweep_dataset(n_albums=1_200, n_collabs=10_000, n_roles=257,
                            seed=77):
    rng = random.Random(seed)
    roles = [f"role {i:03d}" for i in range(n_roles)]
    records = []
    cursor = 0
    for a in range(n_albums):
        album = f"al{a:05d}"
        year = 1955 + a % 56
        for c in rng.sample(range(n_collabs), rng.randrange(8, 17)):
            chosen = {roles[cursor % n_roles]}  # round-robin covers all roles
            cursor += 1
            if rng.random() < 0.18:
                chosen.add(roles[min(int(rng.expovariate(1 / 40)), n_roles - 1)])
            for role in chosen:
                records.append(
                    AssociationRecord(
                        album_id=album,
                        album_title=f"Album {a}",
                        main_artist=f"Artist {a % 300}",
                        release_year=year,
                        collaborator_id=f"c{c:05d}",
                        collaborator_name=f"Person {c}",
                        role_raw=role,
                    )
                )
    return Dataset.from_records(records)


def test_criterion_6_performance():
    with criterion("6 performance (all-pairs stats < 60 s, 257-role sweep < 5 min)"):
        _require_compiled()
        jobs = 4

        graph = synthetic_projection()
        assert graph.edge_count == 130_000
        started = time.monotonic()
        stats = compute_stats(graph, jobs=jobs)
        stats_elapsed = time.monotonic() - started
        assert stats.component_count == 1
        assert stats.giant_component_size == 10_000
        assert stats.diameter >= 2
        assert stats_elapsed < 60.0, f"compute_stats took {stats_elapsed:.1f}s"

        dataset = synthetic_sweep_dataset()
        bipartite = build_bipartite(dataset)
        assert len(bipartite.role_inventory()) == 257
        assert bipartite.album_count == 1_200
        assert bipartite.collaborator_count <= 10_000
        for mode in ("album", "collaborator"):
            started = time.monotonic()
            sweep = ablation_sweep(bipartite, mode, jobs=jobs)
            sweep_elapsed = time.monotonic() - started
            assert len(sweep.results) == 257
            assert sweep_elapsed < 300.0, (
                f"{mode} sweep took {sweep_elapsed:.1f}s"
            )
        print(f"\n  compute_stats: {stats_elapsed:.1f}s, last sweep: {sweep_elapsed:.1f}s")


# --- 7. end-to-end determinism --------------------------------------------------

def test_criterion_7_cli_determinism(fixture_csv, tmp_path):
    with criterion("7 cmd_analyze byte-identical across runs and thread counts"):
        runner = CliRunner()
        trees = []
        for name, jobs in (("run1", "1"), ("run2", "1"), ("run4t", "4")):
            out = tmp_path / name
            result = runner.invoke(
                cli.main,
                ["analyze", "--input", str(fixture_csv), "--out", str(out),
                 "--mode", "both", "--jobs", jobs],
            )
            assert result.exit_code == 0, result.output
            trees.append(hash_tree(out))
        assert trees[0] == trees[1] == trees[2]
        assert any(name.startswith("album/") for name in trees[0])
        assert any(name.startswith("collaborator/") for name in trees[0])


# --- 8. report-shape conformance -------------------------------------------------

TABLE_1_KEYS = {
    "node_count",
    "edge_count",
    "density",
    "diameter",
    "average_degree",
    "average_weighted_degree",
    "average_clustering",
    "average_path_length",
    "component_count",
}


def test_criterion_8_report_shapes(fixture_csv, tmp_path):
    with criterion("8 ablation.csv / stats.json shape conformance"):
        runner = CliRunner()
        out = tmp_path / "report"
        result = runner.invoke(
            cli.main,
            ["analyze", "--input", str(fixture_csv), "--out", str(out),
             "--mode", "both"],
        )
        assert result.exit_code == 0, result.output
        for mode in ("album", "collaborator"):
            lines = (out / mode / "ablation.csv").read_text().splitlines()
            assert lines[0] == "role,omitted_edges,omitted_fraction,gc_size,gc_fraction"
            rows = [line.split(",") for line in lines[1:]]
            assert len(rows) == 7  # one row per surviving role
            gc_sizes = [int(row[3]) for row in rows]
            assert gc_sizes == sorted(gc_sizes)  # most impactful first
            fractions = [float(row[4]) for row in rows]
            assert all(0.0 <= f <= 1.0 for f in fractions)
            stats = json.loads((out / mode / "stats.json").read_text())
            assert TABLE_1_KEYS <= set(stats)
