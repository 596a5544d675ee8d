"""Immutable weighted undirected simple graph.

Vertices are dense integers ``0 .. n-1``; edges carry a strictly positive
weight and an integer id equal to their position in the input edge list.
All algorithm modules share this representation; loaders remap arbitrary
external labels onto dense ids (see :mod:`pathcover.io`).
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

from .exceptions import (
    BadEndpointError,
    DuplicateEdgeError,
    NonPositiveWeightError,
    SelfLoopError,
)

__all__ = ["Edge", "Graph", "build_graph", "degree", "graph_from_arrays"]


class Edge(NamedTuple):
    """One undirected edge ``{u, v}`` with weight and insertion-order id."""

    u: int
    v: int
    weight: float
    id: int


class _EdgesView(Sequence[Edge]):
    """Read-only sequence of :class:`Edge` backed by the graph arrays."""

    __slots__ = ("_g",)

    def __init__(self, g: "Graph"):
        self._g = g

    def __len__(self) -> int:
        return self._g.m

    def __getitem__(self, i: int) -> Edge:
        g = self._g
        if isinstance(i, slice):
            return [self[j] for j in range(*i.indices(g.m))]
        if i < 0:
            i += g.m
        if not 0 <= i < g.m:
            raise IndexError(i)
        return Edge(int(g.eu[i]), int(g.ev[i]), float(g.w[i]), i)

    def __iter__(self) -> Iterator[Edge]:
        g = self._g
        for i in range(g.m):
            yield Edge(int(g.eu[i]), int(g.ev[i]), float(g.w[i]), i)


class Graph:
    """Weighted undirected simple graph, immutable after construction.

    Attributes:
        n: number of vertices.
        m: number of edges.
        eu, ev: int64 arrays of edge endpoints (``eu[i] < ev[i]`` is NOT
            guaranteed; endpoints keep their input orientation).
        w: float64 array of edge weights, all > 0.
        adj_indptr, adj_eids: CSR adjacency over incident edge ids; for
            vertex ``x`` the incident edge ids are
            ``adj_eids[adj_indptr[x]:adj_indptr[x+1]]`` in ascending id order.

    Instances are safe to share across threads; construction is
    single-threaded. Use :func:`build_graph` rather than calling this
    constructor directly.
    """

    __slots__ = (
        "n", "m", "eu", "ev", "w", "adj_indptr", "adj_eids", "__dict__",
    )

    def __init__(self, n: int, eu: np.ndarray, ev: np.ndarray, w: np.ndarray):
        self.n = int(n)
        self.m = len(eu)
        self.eu = eu
        self.ev = ev
        self.w = w
        self.adj_indptr, self.adj_eids = _build_csr(self.n, self.m, eu, ev)
        for arr in (self.eu, self.ev, self.w, self.adj_indptr, self.adj_eids):
            arr.flags.writeable = False

    @property
    def edges(self) -> Sequence[Edge]:
        return _EdgesView(self)

    def degree(self, u: int) -> int:
        """Number of edges incident to ``u``."""
        if not 0 <= u < self.n:
            raise BadEndpointError(u, self.n)
        return int(self.adj_indptr[u + 1] - self.adj_indptr[u])

    def incident_edge_ids(self, u: int) -> np.ndarray:
        """Ids of the edges incident to ``u``, ascending."""
        if not 0 <= u < self.n:
            raise BadEndpointError(u, self.n)
        return self.adj_eids[self.adj_indptr[u]:self.adj_indptr[u + 1]]

    def degrees(self) -> np.ndarray:
        """Degree of every vertex as an int64 array."""
        return np.diff(self.adj_indptr)

    def other_end(self, eid: int, x: int) -> int:
        """Endpoint of edge ``eid`` opposite to ``x``."""
        u = int(self.eu[eid])
        return int(self.ev[eid]) if u == x else u

    # Python-list mirrors of the arrays, used by the interpreted scan
    # kernels where list indexing beats numpy scalar indexing.  Built on
    # first use so array-only workloads never pay for them.

    @cached_property
    def eu_list(self) -> list[int]:
        return self.eu.tolist()

    @cached_property
    def ev_list(self) -> list[int]:
        return self.ev.tolist()

    @cached_property
    def w_list(self) -> list[float]:
        return self.w.tolist()

    @cached_property
    def adj_lists(self) -> list[list[int]]:
        indptr = self.adj_indptr.tolist()
        eids = self.adj_eids.tolist()
        return [eids[indptr[x]:indptr[x + 1]] for x in range(self.n)]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _build_csr(n: int, m: int, eu: np.ndarray, ev: np.ndarray):
    counts = np.bincount(eu, minlength=n) + np.bincount(ev, minlength=n)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    ids = np.arange(m, dtype=np.int64)
    both_v = np.concatenate([eu, ev])
    both_id = np.concatenate([ids, ids])
    # vertex-major, edge-id-minor: per-vertex incidences come out ascending
    order = np.lexsort((both_id, both_v))
    return indptr, both_id[order]


def build_graph(n: int, edge_triples: Iterable[tuple[int, int, float]]) -> Graph:
    """Build a :class:`Graph` from ``(u, v, weight)`` triples.

    Edge ids equal input positions. Rejects self-loops, duplicate
    unordered pairs, out-of-range endpoints and non-positive weights;
    nothing is ever dropped silently.

    Raises:
        BadEndpointError, SelfLoopError, DuplicateEdgeError,
        NonPositiveWeightError
    """
    if n < 0:
        raise BadEndpointError(-1, n)
    triples = list(edge_triples) if not isinstance(edge_triples, (list, np.ndarray)) else edge_triples
    m = len(triples)
    if m == 0:
        empty_i = np.empty(0, dtype=np.int64)
        return Graph(n, empty_i, empty_i.copy(), np.empty(0, dtype=np.float64))

    arr = np.asarray(triples, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[1] != 3:
        raise ValueError("edge_triples must be (u, v, weight) triples")
    fu, fv = arr[:, 0], arr[:, 1]
    if not (np.all(fu == np.floor(fu)) and np.all(fv == np.floor(fv))):
        bad = int(np.flatnonzero((fu != np.floor(fu)) | (fv != np.floor(fv)))[0])
        raise BadEndpointError(int(arr[bad, 0]), n)
    eu = fu.astype(np.int64)
    ev = fv.astype(np.int64)
    w = np.ascontiguousarray(arr[:, 2])
    return graph_from_arrays(n, eu, ev, w)


def graph_from_arrays(n: int, eu: np.ndarray, ev: np.ndarray, w: np.ndarray) -> Graph:
    """Array-input variant of :func:`build_graph` with the same checks."""
    eu = np.ascontiguousarray(eu, dtype=np.int64)
    ev = np.ascontiguousarray(ev, dtype=np.int64)
    w = np.ascontiguousarray(w, dtype=np.float64)
    if not len(eu) == len(ev) == len(w):
        raise ValueError("endpoint and weight arrays must have equal length")

    out = (eu < 0) | (eu >= n) | (ev < 0) | (ev >= n)
    if out.any():
        i = int(np.flatnonzero(out)[0])
        bad = int(eu[i]) if not 0 <= eu[i] < n else int(ev[i])
        raise BadEndpointError(bad, n)
    loops = eu == ev
    if loops.any():
        raise SelfLoopError(int(eu[np.flatnonzero(loops)[0]]))
    nonpos = w <= 0
    if nonpos.any():
        raise NonPositiveWeightError(float(w[np.flatnonzero(nonpos)[0]]))

    lo = np.minimum(eu, ev)
    hi = np.maximum(eu, ev)
    key = lo * n + hi
    sort_idx = np.argsort(key, kind="stable")
    dup = np.flatnonzero(key[sort_idx][1:] == key[sort_idx][:-1])
    if dup.size:
        i = int(sort_idx[int(dup[0]) + 1])
        raise DuplicateEdgeError(int(eu[i]), int(ev[i]))

    return Graph(n, eu, ev, w)


def degree(g: Graph, u: int) -> int:
    """Degree of vertex ``u`` in ``g`` (feeds the avg-degree reporting)."""
    return g.degree(u)
