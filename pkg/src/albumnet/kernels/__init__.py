"""Hot graph kernels with a compiled core and a pure-Python fallback.

The compiled extension (_ckernels, built from Cython) is preferred at
import time; when it is missing, or when ALBUMNET_PURE is set in the
environment, the pure-Python twin (_pykernels) takes over. Both backends
implement the same four functions with identical results:

    path_stats(indptr, indices, jobs)      all-pairs BFS totals
    local_clustering(indptr, indices, jobs) per-node clustering array
    connected_components(indptr, indices)  first-seen component labels
    projection_stats(group_indptr, group_members, n_nodes)
                                           edge count + giant size of a
                                           union-of-cliques projection

Inputs are CSR-style arrays; the wrappers here coerce dtypes (int64
indptr, int32 indices) so callers can pass any integer arrays.
"""

from __future__ import annotations

import os

import numpy as np

from albumnet.kernels import _pykernels

if os.environ.get("ALBUMNET_PURE"):
    _backend = _pykernels
else:
    try:
        from albumnet.kernels import _ckernels as _backend  # type: ignore[no-redef]
    except ImportError:
        _backend = _pykernels

BACKEND = _backend.NAME


def _i32(values) -> np.ndarray:
    return np.ascontiguousarray(values, dtype=np.int32)


def _i64(values) -> np.ndarray:
    return np.ascontiguousarray(values, dtype=np.int64)


def path_stats(indptr, indices, jobs: int = 1) -> tuple[int, int, int]:
    """(max hop distance, sum of hop distances, reachable ordered pairs)."""
    return _backend.path_stats(_i64(indptr), _i32(indices), int(jobs))


def local_clustering(indptr, indices, jobs: int = 1) -> np.ndarray:
    """Per-node local clustering coefficients; degree < 2 scores 0."""
    return _backend.local_clustering(_i64(indptr), _i32(indices), int(jobs))


def connected_components(indptr, indices) -> np.ndarray:
    """Component label per node, labels assigned in first-seen node order."""
    return _backend.connected_components(_i64(indptr), _i32(indices))


def projection_stats(group_indptr, group_members, n_nodes: int) -> tuple[int, int]:
    """(distinct edge count, giant component size) of the clique union."""
    return _backend.projection_stats(
        _i64(group_indptr), _i32(group_members), int(n_nodes)
    )
