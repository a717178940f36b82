"""Backend parity: the compiled kernels must agree with the pure-Python
fallback bit-for-bit on integers and to float tolerance on ratios."""

import random

import numpy as np
import pytest

from albumnet import kernels
from albumnet.kernels import _pykernels
from builders import graph_from_edges, random_connected_edges, random_graph_edges

try:
    from albumnet.kernels import _ckernels
except ImportError:  # pragma: no cover - exercised only in pure-only envs
    _ckernels = None

needs_compiled = pytest.mark.skipif(
    _ckernels is None, reason="compiled kernels not built"
)


def csr_of(n, edges):
    return graph_from_edges(n, edges).csr()


def random_cases():
    rng = random.Random(1234)
    cases = [
        (0, []),
        (1, []),
        (5, []),
        (2, [(0, 1)]),
        (4, [(0, 1), (1, 2), (2, 3), (0, 3)]),
    ]
    for _ in range(12):
        n = rng.randrange(2, 40)
        cases.append((n, random_graph_edges(rng, n, rng.uniform(0.05, 0.4))))
    for _ in range(4):
        n = rng.randrange(5, 40)
        cases.append((n, random_connected_edges(rng, n)))
    return cases


@needs_compiled
def test_path_stats_parity():
    for n, edges in random_cases():
        indptr, indices = csr_of(n, edges)
        assert _ckernels.path_stats(indptr, indices) == _pykernels.path_stats(
            indptr, indices
        )


@needs_compiled
def test_path_stats_thread_counts_agree():
    rng = random.Random(9)
    n = 60
    indptr, indices = csr_of(n, random_connected_edges(rng, n))
    single = _ckernels.path_stats(indptr, indices, 1)
    for jobs in (2, 3, 8, 64):
        assert _ckernels.path_stats(indptr, indices, jobs) == single


@needs_compiled
def test_local_clustering_parity():
    for n, edges in random_cases():
        indptr, indices = csr_of(n, edges)
        compiled = _ckernels.local_clustering(indptr, indices)
        pure = _pykernels.local_clustering(indptr, indices)
        np.testing.assert_allclose(compiled, pure, atol=1e-12)


@needs_compiled
def test_connected_components_parity():
    for n, edges in random_cases():
        indptr, indices = csr_of(n, edges)
        np.testing.assert_array_equal(
            _ckernels.connected_components(indptr, indices),
            _pykernels.connected_components(indptr, indices),
        )


@needs_compiled
def test_projection_stats_parity():
    rng = random.Random(77)
    for _ in range(25):
        n_nodes = rng.randrange(1, 30)
        n_groups = rng.randrange(0, 12)
        rows = [
            sorted(rng.sample(range(n_nodes), rng.randrange(0, min(n_nodes, 8) + 1)))
            for _ in range(n_groups)
        ]
        indptr = np.cumsum([0] + [len(r) for r in rows]).astype(np.int64)
        members = np.array([x for r in rows for x in r], dtype=np.int32)
        assert _ckernels.projection_stats(
            indptr, members, n_nodes
        ) == _pykernels.projection_stats(indptr, members, n_nodes)


def test_selected_backend_handles_empty_inputs():
    indptr = np.zeros(1, dtype=np.int64)
    indices = np.zeros(0, dtype=np.int32)
    assert kernels.path_stats(indptr, indices) == (0, 0, 0)
    assert kernels.connected_components(indptr, indices).size == 0
    assert kernels.local_clustering(indptr, indices).size == 0
    assert kernels.projection_stats(np.zeros(1, dtype=np.int64),
                                    np.zeros(0, dtype=np.int32), 0) == (0, 0)


def test_wrapper_accepts_any_integer_dtype():
    indptr = [0, 1, 3, 4]
    indices = [1, 0, 2, 1]
    assert kernels.path_stats(indptr, indices) == (2, 8, 6)


def test_projection_stats_counts_isolates_in_components():
    # one group of two members over five nodes: giant is the pair
    indptr = np.array([0, 2], dtype=np.int64)
    members = np.array([1, 3], dtype=np.int32)
    edge_count, giant = kernels.projection_stats(indptr, members, 5)
    assert (edge_count, giant) == (1, 2)


def test_backend_name_exposed():
    assert kernels.BACKEND in {"c", "python"}
