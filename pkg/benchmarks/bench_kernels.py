"""Benchmark the compiled kernels against the pure-Python fallback.

Usage:
    python benchmarks/bench_kernels.py [--scale SCALE] [--repeat N]

Builds synthetic CSR inputs once per case, times both backends, and prints
a table with speedups. --scale multiplies the default problem sizes (keep
it small if only the pure backend is available).
"""

from __future__ import annotations

import argparse
import random
import time

import numpy as np

from albumnet.kernels import _pykernels

try:
    from albumnet.kernels import _ckernels
except ImportError:
    _ckernels = None


def build_csr(n, edges):
    pairs = np.array(sorted(edges), dtype=np.int32)
    src = np.concatenate([pairs[:, 0], pairs[:, 1]])
    dst = np.concatenate([pairs[:, 1], pairs[:, 0]])
    order = np.lexsort((dst, src))
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    return indptr, np.ascontiguousarray(dst[order], dtype=np.int32)


def random_connected(rng, n, m):
    edges = {(i, i + 1) for i in range(n - 1)}
    while len(edges) < m:
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.add((u, v) if u < v else (v, u))
    return edges


def random_groups(rng, n_groups, n_nodes, group_size):
    rows = [sorted(rng.sample(range(n_nodes), group_size)) for _ in range(n_groups)]
    indptr = np.cumsum([0] + [len(r) for r in rows]).astype(np.int64)
    members = np.array([x for row in rows for x in row], dtype=np.int32)
    return indptr, members


def timed(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        started = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - started)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--scale", type=float, default=1.0)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--jobs", type=int, default=1,
                        help="thread count for the compiled BFS/clustering")
    args = parser.parse_args()

    rng = random.Random(2026)
    s = args.scale
    cases = []

    n, m = int(600 * s), int(3_000 * s)
    indptr, indices = build_csr(n, random_connected(rng, n, m))
    cases.append((
        f"path_stats        n={n} m={m}",
        lambda b, ip=indptr, ix=indices: b.path_stats(ip, ix, args.jobs),
    ))

    n, m = int(8_000 * s), int(60_000 * s)
    indptr, indices = build_csr(n, random_connected(rng, n, m))
    cases.append((
        f"local_clustering  n={n} m={m}",
        lambda b, ip=indptr, ix=indices: b.local_clustering(ip, ix, args.jobs),
    ))
    cases.append((
        f"components        n={n} m={m}",
        lambda b, ip=indptr, ix=indices: b.connected_components(ip, ix),
    ))

    groups, nodes, size = int(1_200 * s), int(10_000 * s), 12
    gp, gm = random_groups(rng, groups, nodes, size)
    cases.append((
        f"projection_stats  groups={groups} nodes={nodes} k={size}",
        lambda b, ip=gp, ix=gm: b.projection_stats(ip, ix, nodes),
    ))

    print(f"{'case':44} {'pure':>10} {'compiled':>10} {'speedup':>9}")
    for name, run in cases:
        pure_time, pure_result = timed(lambda: run(_pykernels), args.repeat)
        if _ckernels is None:
            print(f"{name:44} {pure_time * 1e3:9.1f}ms {'n/a':>10} {'n/a':>9}")
            continue
        c_time, c_result = timed(lambda: run(_ckernels), args.repeat)
        agree = _results_agree(pure_result, c_result)
        flag = "" if agree else "  RESULTS DIFFER!"
        print(
            f"{name:44} {pure_time * 1e3:9.1f}ms {c_time * 1e3:9.1f}ms "
            f"{pure_time / c_time:8.1f}x{flag}"
        )


def _results_agree(a, b):
    if isinstance(a, np.ndarray):
        return np.allclose(a, b, atol=1e-12)
    return a == b


if __name__ == "__main__":
    main()
