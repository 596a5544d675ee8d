"""Compiled array kernels for the two cover scans.

Same scan semantics as :mod:`pathcover._scan_python`, but all state is
kept in flat int64 arrays (vertex path-neighbor links, path endpoints,
union-by-size relabelling) so numba can compile the loops. numba itself
is imported lazily on first use; compiled artifacts are disk-cached.
Engine selection lives in :mod:`pathcover.engine`.
"""

from __future__ import annotations

import importlib.util
from typing import NamedTuple

import numpy as np

HAS_NUMBA = importlib.util.find_spec("numba") is not None

PENDING = 0
ACCEPTED_NEW = 1
ACCEPTED_APPEND = 2
ACCEPTED_MERGE = 3
REJECTED = 4
REMOVED = 5


def _scan_baseline_arrays(order, eu, ev, n):
    m = order.shape[0]
    status = np.zeros(m, dtype=np.uint8)
    nb1 = np.full(n, -1, dtype=np.int64)
    nb2 = np.full(n, -1, dtype=np.int64)
    path_id = np.full(n, -1, dtype=np.int64)
    end1 = np.empty(n, dtype=np.int64)
    end2 = np.empty(n, dtype=np.int64)
    size = np.empty(n, dtype=np.int64)
    npaths = 0
    for k in range(m):
        e = order[k]
        u = eu[e]
        v = ev[e]
        pu = path_id[u]
        pv = path_id[v]
        if pu < 0 and pv < 0:
            path_id[u] = npaths
            path_id[v] = npaths
            nb1[u] = v
            nb1[v] = u
            end1[npaths] = u
            end2[npaths] = v
            size[npaths] = 2
            npaths += 1
            status[e] = ACCEPTED_NEW
        elif pu >= 0 and pv < 0 and nb2[u] < 0:
            nb2[u] = v
            nb1[v] = u
            path_id[v] = pu
            if end1[pu] == u:
                end1[pu] = v
            else:
                end2[pu] = v
            size[pu] += 1
            status[e] = ACCEPTED_APPEND
        elif pv >= 0 and pu < 0 and nb2[v] < 0:
            nb2[v] = u
            nb1[u] = v
            path_id[u] = pv
            if end1[pv] == v:
                end1[pv] = u
            else:
                end2[pv] = u
            size[pv] += 1
            status[e] = ACCEPTED_APPEND
        elif pu >= 0 and pv >= 0 and pu != pv and nb2[u] < 0 and nb2[v] < 0:
            if size[pu] < size[pv]:
                pu, pv = pv, pu
                uu, vv = v, u
            else:
                uu, vv = u, v
            # relabel the smaller path before the junction links exist,
            # so the walk cannot cross into the larger path
            x = end1[pv]
            prev = np.int64(-1)
            while x >= 0:
                path_id[x] = pu
                nxt = nb1[x] if nb1[x] != prev else nb2[x]
                prev = x
                x = nxt
            nb2[u] = v
            nb2[v] = u
            ou = end2[pu] if end1[pu] == uu else end1[pu]
            ov = end2[pv] if end1[pv] == vv else end1[pv]
            end1[pu] = ou
            end2[pu] = ov
            size[pu] += size[pv]
            status[e] = ACCEPTED_MERGE
        else:
            status[e] = REJECTED
    return status


def _scan_optimized_arrays(order, eu, ev, adj_indptr, adj_eids, n):
    m = order.shape[0]
    status = np.zeros(m, dtype=np.uint8)
    nb1 = np.full(n, -1, dtype=np.int64)
    nb2 = np.full(n, -1, dtype=np.int64)
    path_id = np.full(n, -1, dtype=np.int64)
    end1 = np.empty(n, dtype=np.int64)
    end2 = np.empty(n, dtype=np.int64)
    size = np.empty(n, dtype=np.int64)
    npaths = 0
    for k in range(m):
        e = order[k]
        if status[e] != PENDING:
            continue
        u = eu[e]
        v = ev[e]
        pu = path_id[u]
        pv = path_id[v]
        if pu < 0 and pv < 0:
            path_id[u] = npaths
            path_id[v] = npaths
            nb1[u] = v
            nb1[v] = u
            end1[npaths] = u
            end2[npaths] = v
            size[npaths] = 2
            npaths += 1
            status[e] = ACCEPTED_NEW
        elif pu >= 0 and pv < 0 and nb2[u] < 0:
            nb2[u] = v
            nb1[v] = u
            path_id[v] = pu
            if end1[pu] == u:
                end1[pu] = v
            else:
                end2[pu] = v
            size[pu] += 1
            status[e] = ACCEPTED_APPEND
            for a in range(adj_indptr[u], adj_indptr[u + 1]):
                j = adj_eids[a]
                if status[j] == PENDING:
                    status[j] = REMOVED
        elif pv >= 0 and pu < 0 and nb2[v] < 0:
            nb2[v] = u
            nb1[u] = v
            path_id[u] = pv
            if end1[pv] == v:
                end1[pv] = u
            else:
                end2[pv] = u
            size[pv] += 1
            status[e] = ACCEPTED_APPEND
            for a in range(adj_indptr[v], adj_indptr[v + 1]):
                j = adj_eids[a]
                if status[j] == PENDING:
                    status[j] = REMOVED
        elif pu >= 0 and pv >= 0 and pu != pv and nb2[u] < 0 and nb2[v] < 0:
            if size[pu] < size[pv]:
                pu, pv = pv, pu
                uu, vv = v, u
            else:
                uu, vv = u, v
            x = end1[pv]
            prev = np.int64(-1)
            while x >= 0:
                path_id[x] = pu
                nxt = nb1[x] if nb1[x] != prev else nb2[x]
                prev = x
                x = nxt
            nb2[u] = v
            nb2[v] = u
            ou = end2[pu] if end1[pu] == uu else end1[pu]
            ov = end2[pv] if end1[pv] == vv else end1[pv]
            end1[pu] = ou
            end2[pu] = ov
            size[pu] += size[pv]
            status[e] = ACCEPTED_MERGE
            for a in range(adj_indptr[u], adj_indptr[u + 1]):
                j = adj_eids[a]
                if status[j] == PENDING:
                    status[j] = REMOVED
            for a in range(adj_indptr[v], adj_indptr[v + 1]):
                j = adj_eids[a]
                if status[j] == PENDING:
                    status[j] = REMOVED
        else:
            status[e] = REJECTED
    return status


class ScanKernels(NamedTuple):
    baseline: object
    optimized: object


_compiled: ScanKernels | None = None


def scan_kernels() -> ScanKernels:
    """JIT-compiled kernels, built on first use (disk-cached by numba)."""
    global _compiled
    if _compiled is None:
        if not HAS_NUMBA:
            raise ImportError("numba is not installed")
        from numba import njit

        _compiled = ScanKernels(
            baseline=njit(cache=True, nogil=True)(_scan_baseline_arrays),
            optimized=njit(cache=True, nogil=True)(_scan_optimized_arrays),
        )
    return _compiled
