"""Greedy path-cover construction and cover validation.

Both algorithms scan the edges in descending weight order (ties broken
by ascending edge id) and apply the four-case rule: start a new path,
append at an endpoint (either side), or merge two distinct paths at
their endpoints; anything else is rejected. The optimized variant
additionally drops every still-pending edge incident to a vertex the
moment that vertex becomes interior, since such edges can never be
accepted later.

Vertices untouched by any accepted edge become singleton paths, so a
cover always partitions the whole vertex set and ``H == N - K`` holds
with K counting singletons.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import isclose
from typing import Iterable, Literal, Optional, Sequence

import numpy as np

from . import _scan_python as _sp
from ._scan_numba import scan_kernels
from .engine import resolve_engine
from .exceptions import InvalidCoverError
from .graph import Graph
from .sequence import descending_order

__all__ = [
    "CoverTrace",
    "PathCover",
    "ValidationReport",
    "cover_baseline",
    "cover_optimized",
    "cover_weight",
    "validate_cover",
]

Position = Literal["endpoint", "interior", "singleton"]

ENDPOINT: Position = "endpoint"
INTERIOR: Position = "interior"
SINGLETON: Position = "singleton"


@dataclass(frozen=True)
class CoverTrace:
    """Ordered record of scan decisions: (edge id, action) pairs.

    Actions are ``accepted-new``, ``accepted-append``, ``accepted-merge``,
    ``rejected`` and ``removed``.
    """

    events: tuple[tuple[int, str], ...]

    def accepted(self) -> list[int]:
        return [e for e, a in self.events if a.startswith("accepted")]

    def rejected(self) -> list[int]:
        return [e for e, a in self.events if a == "rejected"]

    def removed(self) -> list[int]:
        return [e for e, a in self.events if a == "removed"]


class PathCover:
    """Vertex-disjoint simple paths (singletons included) covering V.

    Cheap summary fields are computed eagerly; the explicit vertex
    sequences are reconstructed from the edge set on first access, in a
    canonical form (each path starts at its smaller endpoint, paths
    sorted by first vertex), so covers compare by value.
    """

    __slots__ = ("graph", "h", "k", "total_weight", "_ids", "__dict__")

    def __init__(self, graph: Graph, edge_ids: Iterable[int]):
        self.graph = graph
        if isinstance(edge_ids, np.ndarray):
            ids = np.unique(edge_ids.astype(np.int64))
        else:
            ids = np.unique(np.fromiter((int(e) for e in edge_ids), dtype=np.int64))
        self._ids = ids  # sorted, unique; kept as an array to stay light
        self.h = len(ids)
        self.k = graph.n - self.h
        self.total_weight = float(graph.w[ids].sum()) if self.h else 0.0

    @cached_property
    def edge_ids(self) -> frozenset[int]:
        return frozenset(self._ids.tolist())

    @cached_property
    def paths(self) -> tuple[tuple[int, ...], ...]:
        """Canonical vertex sequences, singletons included."""
        return _paths_from_edges(self.graph, self._ids.tolist())

    @cached_property
    def vertex_state(self) -> tuple[tuple[int, Position], ...]:
        """Per-vertex (path index, position) over the canonical paths."""
        state: list[Optional[tuple[int, Position]]] = [None] * self.graph.n
        for pi, path in enumerate(self.paths):
            if len(path) == 1:
                state[path[0]] = (pi, SINGLETON)
                continue
            for offset, x in enumerate(path):
                pos = ENDPOINT if offset in (0, len(path) - 1) else INTERIOR
                state[x] = (pi, pos)
        return tuple(state)  # type: ignore[arg-type]

    @property
    def k_nonsingleton(self) -> int:
        """Path count the paper's figures use: singletons excluded."""
        return sum(1 for p in self.paths if len(p) > 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PathCover):
            return NotImplemented
        return self.graph is other.graph and np.array_equal(self._ids, other._ids)

    def __repr__(self) -> str:
        return (f"PathCover(n={self.graph.n}, h={self.h}, k={self.k}, "
                f"weight={self.total_weight:g})")


def _paths_from_edges(g: Graph, edge_ids: Iterable[int]) -> tuple[tuple[int, ...], ...]:
    """Rebuild vertex sequences from an edge subset; singletons added.

    Raises InvalidCoverError if the subset is not a disjoint union of
    simple paths (a vertex of degree > 2, or a cycle).
    """
    nb1 = [-1] * g.n
    nb2 = [-1] * g.n
    eu, ev = g.eu_list, g.ev_list
    count = 0
    for e in edge_ids:
        count += 1
        for x, y in ((eu[e], ev[e]), (ev[e], eu[e])):
            if nb1[x] < 0:
                nb1[x] = y
            elif nb2[x] < 0:
                nb2[x] = y
            else:
                raise InvalidCoverError(f"vertex {x} has more than two cover edges")
    paths: list[tuple[int, ...]] = []
    seen = [False] * g.n
    walked_edges = 0
    for s in range(g.n):
        if seen[s]:
            continue
        if nb1[s] < 0:
            seen[s] = True
            paths.append((s,))
            continue
        if nb2[s] >= 0:
            continue  # interior vertex; reached from an endpoint walk
        seq = [s]
        seen[s] = True
        prev, x = s, nb1[s]
        while x >= 0:
            if seen[x]:
                raise InvalidCoverError("cover edges close a cycle")
            seen[x] = True
            seq.append(x)
            walked_edges += 1
            nxt = nb1[x] if nb1[x] != prev else nb2[x]
            prev, x = x, nxt
        if seq[0] > seq[-1]:
            seq.reverse()
        paths.append(tuple(seq))
    if walked_edges != count:
        raise InvalidCoverError("cover edges close a cycle")
    paths.sort(key=lambda p: p[0])
    return tuple(paths)


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of validating a claimed path cover against its graph."""

    valid: bool
    violation: Optional[str]
    n: int
    h: int
    k: int
    k_nonsingleton: int
    total_weight: float


def validate_cover(g: Graph, cover: PathCover) -> ValidationReport:
    """Check the structural invariants of ``cover`` with respect to ``g``.

    Verifies disjoint coverage of all vertices, that consecutive path
    vertices are joined by actual graph edges matching ``edge_ids``,
    ``H == N - K``, and weight consistency. Violations are reported, not
    raised.
    """

    def fail(msg: str) -> ValidationReport:
        return ValidationReport(False, msg, g.n, cover.h, cover.k, 0, cover.total_weight)

    try:
        paths = cover.paths
    except InvalidCoverError as exc:
        return fail(str(exc))

    seen = [False] * g.n
    for path in paths:
        for x in path:
            if not 0 <= x < g.n:
                return fail(f"vertex {x} outside graph")
            if seen[x]:
                return fail(f"vertex {x} multiply covered")
            seen[x] = True
    if not all(seen):
        return fail(f"vertex {seen.index(False)} not covered")

    heads: list[int] = []
    tails: list[int] = []
    for path in paths:
        heads.extend(path[:-1])
        tails.extend(path[1:])
    if heads and g.m == 0:
        return fail(f"consecutive vertices {heads[0]},{tails[0]} are not a graph edge")
    if heads:
        a = np.asarray(heads, dtype=np.int64)
        b = np.asarray(tails, dtype=np.int64)
        qkey = np.minimum(a, b) * g.n + np.maximum(a, b)
        gkey = np.minimum(g.eu, g.ev) * g.n + np.maximum(g.eu, g.ev)
        by_key = np.argsort(gkey)
        pos = np.searchsorted(gkey[by_key], qkey)
        hit = (pos < g.m) & (gkey[by_key[np.minimum(pos, g.m - 1)]] == qkey)
        if not hit.all():
            i = int(np.flatnonzero(~hit)[0])
            return fail(f"consecutive vertices {a[i]},{b[i]} are not a graph edge")
        used = set(by_key[pos].tolist())
    else:
        used = set()
    if used != cover.edge_ids:
        return fail("edge_ids do not match the edges traced by the paths")

    k = len(paths)
    if cover.h != len(cover.edge_ids):
        return fail("H does not equal the number of cover edges")
    if cover.h != g.n - k:
        return fail(f"H={cover.h} differs from N-K={g.n - k}")
    if cover.k != k:
        return fail(f"K={cover.k} differs from path count {k}")
    wsum = sum(g.w_list[e] for e in cover.edge_ids)
    if not isclose(wsum, cover.total_weight, rel_tol=1e-9, abs_tol=1e-9):
        return fail("total_weight inconsistent with edge weights")

    k_nonsingleton = sum(1 for p in paths if len(p) > 1)
    return ValidationReport(True, None, g.n, cover.h, k, k_nonsingleton, cover.total_weight)


def cover_weight(c: PathCover) -> float:
    """Total weight of the cover's edges."""
    return c.total_weight


def _run(g: Graph, optimized: bool, trace: bool, engine: Optional[str]):
    eng = resolve_engine(engine)
    events: Optional[list] = [] if trace else None
    if trace or eng == "python":
        # trace recording exists only in the interpreted kernels; covers
        # are identical across engines either way
        order = descending_order(g.w).tolist()
        if optimized:
            accepted, _ = _sp.scan_optimized(order, g.eu_list, g.ev_list,
                                             g.adj_lists, events)
        else:
            accepted, _ = _sp.scan_baseline(order, g.eu_list, g.ev_list, events)
        ids = np.asarray(accepted, dtype=np.int64)
    else:
        kernels = scan_kernels()
        order = descending_order(g.w)
        if optimized:
            status = kernels.optimized(order, g.eu, g.ev, g.adj_indptr,
                                       g.adj_eids, g.n)
        else:
            status = kernels.baseline(order, g.eu, g.ev, g.n)
        ids = np.flatnonzero((status >= _sp.ACCEPTED_NEW)
                             & (status <= _sp.ACCEPTED_MERGE))
    cover = PathCover(g, ids)
    if not trace:
        return cover
    trace_obj = CoverTrace(tuple((e, _sp.ACTION_NAMES[c]) for e, c in events))
    return cover, trace_obj


def cover_baseline(g: Graph, trace: bool = False, engine: Optional[str] = None):
    """Greedy path cover by descending-weight scan (the baseline algorithm).

    Returns the PathCover, or ``(PathCover, CoverTrace)`` when ``trace``
    is true. Tracing never changes the computed cover.
    """
    return _run(g, optimized=False, trace=trace, engine=engine)


def cover_optimized(g: Graph, trace: bool = False, engine: Optional[str] = None):
    """Greedy path cover with eager removal of unusable edges.

    Produces the identical cover to :func:`cover_baseline`; edges
    incident to a vertex that just became interior are dropped from the
    scan sequence and show up as ``removed`` events in the trace.
    """
    return _run(g, optimized=True, trace=trace, engine=engine)
