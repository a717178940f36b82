# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled graph kernels over CSR arrays.

Hot loops behind the package's path metrics, clustering, component
labelling, and ablation sweep. BFS and clustering release the GIL and are
partitioned over source nodes, so thread counts change wall time but never
results (merges are sums and maxes of integers).
"""

from concurrent.futures import ThreadPoolExecutor

import numpy as np

cimport numpy as cnp

cnp.import_array()

NAME = "c"

ctypedef cnp.int32_t i32
ctypedef cnp.int64_t i64


cdef void _bfs_span(const i64* indptr, const i32* indices, int n,
                    int lo, int hi, i32* dist, i32* queue,
                    i64* total_out, i64* pairs_out, i32* ecc_out) noexcept nogil:
    cdef int s, v, u, head, tail
    cdef i32 dv, ecc, best_ecc
    cdef i64 total = 0, pairs = 0, p
    best_ecc = 0
    for s in range(lo, hi):
        for v in range(n):
            dist[v] = -1
        dist[s] = 0
        queue[0] = s
        head = 0
        tail = 1
        ecc = 0
        while head < tail:
            v = queue[head]
            head += 1
            dv = dist[v] + 1
            for p in range(indptr[v], indptr[v + 1]):
                u = indices[p]
                if dist[u] < 0:
                    dist[u] = dv
                    total += dv
                    pairs += 1
                    ecc = dv  # BFS discovers in nondecreasing distance order
                    queue[tail] = u
                    tail += 1
        if ecc > best_ecc:
            best_ecc = ecc
    total_out[0] = total
    pairs_out[0] = pairs
    ecc_out[0] = best_ecc


def _path_stats_span(i64[::1] indptr, i32[::1] indices, int lo, int hi):
    cdef int n = indptr.shape[0] - 1
    cdef i64 total = 0, pairs = 0
    cdef i32 ecc = 0
    if n <= 0 or hi <= lo:
        return 0, 0, 0
    dist_arr = np.empty(n, dtype=np.int32)
    queue_arr = np.empty(n, dtype=np.int32)
    cdef i32[::1] dist = dist_arr
    cdef i32[::1] queue = queue_arr
    cdef const i32* idx = NULL
    if indices.shape[0] > 0:
        idx = &indices[0]
    with nogil:
        _bfs_span(&indptr[0], idx, n, lo, hi, &dist[0], &queue[0],
                  &total, &pairs, &ecc)
    return int(ecc), int(total), int(pairs)


def path_stats(indptr, indices, jobs=1):
    """(diameter, total hop distance, reachable ordered pairs) over all sources."""
    cdef int n = indptr.shape[0] - 1
    if n <= 0:
        return 0, 0, 0
    cdef int workers = max(1, min(int(jobs), n))
    if workers == 1:
        return _path_stats_span(indptr, indices, 0, n)
    bounds = [i * n // workers for i in range(workers + 1)]
    spans = [(bounds[i], bounds[i + 1]) for i in range(workers)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(lambda span: _path_stats_span(indptr, indices, span[0], span[1]), spans))
    diameter = max(part[0] for part in parts)
    total = sum(part[1] for part in parts)
    pairs = sum(part[2] for part in parts)
    return diameter, total, pairs


cdef void _clustering_span(const i64* indptr, const i32* indices,
                           int lo, int hi, double* out) noexcept nogil:
    # neighbor runs must be sorted; counts sorted-list intersections
    cdef int v, u, d
    cdef i64 start, end, p, i, j, jend
    cdef i64 links
    cdef i32 a, b
    for v in range(lo, hi):
        start = indptr[v]
        end = indptr[v + 1]
        d = <int> (end - start)
        if d < 2:
            out[v] = 0.0
            continue
        links = 0
        for p in range(start, end):
            u = indices[p]
            i = start
            j = indptr[u]
            jend = indptr[u + 1]
            while i < end and j < jend:
                a = indices[i]
                b = indices[j]
                if a == b:
                    links += 1
                    i += 1
                    j += 1
                elif a < b:
                    i += 1
                else:
                    j += 1
        out[v] = (<double> links) / ((<double> d) * (d - 1))


def _local_clustering_span(i64[::1] indptr, i32[::1] indices, double[::1] out,
                           int lo, int hi):
    cdef const i32* idx = NULL
    if indices.shape[0] > 0:
        idx = &indices[0]
    if hi > lo:
        with nogil:
            _clustering_span(&indptr[0], idx, lo, hi, &out[0])
    return None


def local_clustering(indptr, indices, jobs=1):
    """Per-node local clustering; requires sorted neighbor runs."""
    cdef int n = indptr.shape[0] - 1
    out = np.zeros(n, dtype=np.float64)
    if n == 0:
        return out
    cdef int workers = max(1, min(int(jobs), n))
    if workers == 1:
        _local_clustering_span(indptr, indices, out, 0, n)
        return out
    bounds = [i * n // workers for i in range(workers + 1)]
    spans = [(bounds[i], bounds[i + 1]) for i in range(workers)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        list(pool.map(lambda span: _local_clustering_span(indptr, indices, out, span[0], span[1]), spans))
    return out


def connected_components(i64[::1] indptr, i32[::1] indices):
    """Component labels assigned in first-seen node order."""
    cdef int n = indptr.shape[0] - 1
    labels_arr = np.full(n, -1, dtype=np.int32)
    if n == 0:
        return labels_arr
    stack_arr = np.empty(n, dtype=np.int32)
    cdef i32[::1] labels = labels_arr
    cdef i32[::1] stack = stack_arr
    cdef const i32* idx = NULL
    if indices.shape[0] > 0:
        idx = &indices[0]
    cdef const i64* ptr = &indptr[0]
    cdef int start, v, u, top
    cdef i32 label = 0
    cdef i64 p
    with nogil:
        for start in range(n):
            if labels[start] >= 0:
                continue
            labels[start] = label
            stack[0] = start
            top = 1
            while top > 0:
                top -= 1
                v = stack[top]
                for p in range(ptr[v], ptr[v + 1]):
                    u = idx[p]
                    if labels[u] < 0:
                        labels[u] = label
                        stack[top] = u
                        top += 1
            label += 1
    return labels_arr


cdef inline int _find(i32* parent, int x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def projection_stats(i64[::1] group_indptr, i32[::1] group_members, int n_nodes):
    """Edge count and giant-component size of a union of member cliques."""
    cdef int n_groups = group_indptr.shape[0] - 1
    if n_nodes <= 0:
        return 0, 0
    cdef i64 total_pairs = 0
    cdef i64 g, start, end, k, i, j, pos
    for g in range(n_groups):
        k = group_indptr[g + 1] - group_indptr[g]
        total_pairs += k * (k - 1) // 2
    keys_arr = np.empty(total_pairs, dtype=np.int64)
    parent_arr = np.arange(n_nodes, dtype=np.int32)
    size_arr = np.ones(n_nodes, dtype=np.int32)
    cdef i64[::1] keys = keys_arr
    cdef i32[::1] parent = parent_arr
    cdef i32[::1] size = size_arr
    cdef i32* par = NULL
    cdef i32* sz = NULL
    if n_nodes > 0:
        par = &parent[0]
        sz = &size[0]
    cdef const i32* members = NULL
    if group_members.shape[0] > 0:
        members = &group_members[0]
    cdef i32 u, v, giant
    cdef int ra, rb
    giant = 1 if n_nodes > 0 else 0
    pos = 0
    with nogil:
        for g in range(n_groups):
            start = group_indptr[g]
            end = group_indptr[g + 1]
            if end - start < 2:
                continue
            for i in range(start, end - 1):
                u = members[i]
                for j in range(i + 1, end):
                    v = members[j]
                    if u < v:
                        keys[pos] = (<i64> u) * n_nodes + v
                    else:
                        keys[pos] = (<i64> v) * n_nodes + u
                    pos += 1
            ra = _find(par, members[start])
            for i in range(start + 1, end):
                rb = _find(par, members[i])
                if ra == rb:
                    continue
                if sz[ra] < sz[rb]:
                    ra, rb = rb, ra
                par[rb] = ra
                sz[ra] += sz[rb]
                if sz[ra] > giant:
                    giant = sz[ra]
    edge_count = int(np.unique(keys_arr).size) if total_pairs > 0 else 0
    return edge_count, int(giant)
