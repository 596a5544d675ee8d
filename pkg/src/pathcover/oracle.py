"""Exact maximum-weight path cover for small graphs, plus the edge
classification used when comparing a greedy cover against the optimum.

The exact search backtracks over edges in descending weight order.
Keeping a subset feasible means every vertex has selected-degree at most
two and no selected cycle exists, which is exactly "disjoint union of
simple paths"; singleton paths carry no weight, so maximizing over edge
subsets is equivalent to maximizing over covers. Branches are pruned
with the optimistic bound current-weight + remaining-suffix-weight
against an incumbent seeded by an internal greedy pass.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cover import PathCover, validate_cover
from .exceptions import InvalidCoverError, TooLargeError
from .graph import Graph

__all__ = [
    "EdgeClassification",
    "OptimalCover",
    "classify_edges",
    "optimal_cover_bruteforce",
]

DEFAULT_LIMIT = 12


@dataclass(frozen=True)
class OptimalCover:
    """An exact maximum-weight path cover and its weight."""

    cover: PathCover
    weight: float


def optimal_cover_bruteforce(g: Graph, limit: int = DEFAULT_LIMIT) -> OptimalCover:
    """Exact maximum-weight path cover by pruned backtracking.

    Deterministic in the returned weight; among equal-weight optima the
    witness cover is unspecified. Refuses graphs with more than
    ``limit`` vertices (default 12): the search is for desk-scale
    verification, not production use.

    Raises:
        TooLargeError: if ``g.n > limit``.
    """
    if g.n > limit:
        raise TooLargeError(g.n, limit)
    n, m = g.n, g.m
    by_weight = np.argsort(-g.w, kind="stable")
    eu = g.eu[by_weight].tolist()
    ev = g.ev[by_weight].tolist()
    ew = g.w[by_weight].tolist()
    suffix = [0.0] * (m + 1)
    for i in range(m - 1, -1, -1):
        suffix[i] = suffix[i + 1] + ew[i]

    deg = [0] * n
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    # greedy incumbent over the same descending order: a valid cover,
    # so its weight is a true lower bound for OPT
    best_sel: list[int] = []
    best = 0.0
    for i in range(m):
        u, v = eu[i], ev[i]
        if deg[u] < 2 and deg[v] < 2:
            ru, rv = find(u), find(v)
            if ru != rv:
                deg[u] += 1
                deg[v] += 1
                parent[ru] = rv
                best += ew[i]
                best_sel.append(i)
    deg = [0] * n
    parent = list(range(n))
    rank = [0] * n
    sel: list[int] = []
    eps = 1e-12

    def rec(i: int, cur: float) -> None:
        nonlocal best, best_sel
        if cur + suffix[i] <= best + eps:
            return
        if i == m:
            best = cur
            best_sel = sel.copy()
            return
        u, v = eu[i], ev[i]
        if deg[u] < 2 and deg[v] < 2:
            ru, rv = find(u), find(v)
            if ru != rv:
                deg[u] += 1
                deg[v] += 1
                if rank[ru] < rank[rv]:
                    ru, rv = rv, ru
                parent[rv] = ru
                bumped = rank[ru] == rank[rv]
                if bumped:
                    rank[ru] += 1
                sel.append(i)
                rec(i + 1, cur + ew[i])
                sel.pop()
                parent[rv] = rv
                if bumped:
                    rank[ru] -= 1
                deg[u] -= 1
                deg[v] -= 1
        rec(i + 1, cur)

    rec(0, 0.0)
    cover = PathCover(g, (int(by_weight[i]) for i in best_sel))
    return OptimalCover(cover=cover, weight=cover.total_weight)


@dataclass(frozen=True)
class EdgeClassification:
    """Partition of OPT's edges relative to a greedy cover.

    ``e1``: edges in both covers. ``e2``: OPT-only edges whose endpoints
    both touch exactly one cover edge. ``e3``: OPT-only edges with an
    endpoint touching two cover edges. ``d_a``: per-vertex cover-degree.
    """

    e1: frozenset[int]
    e2: frozenset[int]
    e3: frozenset[int]
    d_a: tuple[int, ...]


def classify_edges(g: Graph, cover: PathCover, opt: OptimalCover) -> EdgeClassification:
    """Classify OPT's edges by membership in ``cover`` and cover-degrees.

    Both covers must be valid for ``g``; the classification is a
    partition of OPT's edge set whenever ``cover`` came out of the
    greedy scan (an unclassifiable edge would have been acceptable to
    the greedy, contradicting its maximality).

    Raises:
        InvalidCoverError: if either cover fails validation, or an OPT
            edge cannot be classified (non-greedy ``cover``).
    """
    for name, c in (("cover", cover), ("opt", opt.cover)):
        report = validate_cover(g, c)
        if not report.valid:
            raise InvalidCoverError(f"{name} is not a valid path cover: {report.violation}")
    d_a = [0] * g.n
    for e in cover.edge_ids:
        d_a[g.eu_list[e]] += 1
        d_a[g.ev_list[e]] += 1
    e1, e2, e3 = set(), set(), set()
    for e in opt.cover.edge_ids:
        if e in cover.edge_ids:
            e1.add(e)
            continue
        du, dv = d_a[g.eu_list[e]], d_a[g.ev_list[e]]
        if max(du, dv) == 2:
            e3.add(e)
        elif du == 1 and dv == 1:
            e2.add(e)
        else:
            raise InvalidCoverError(
                f"edge {e} of OPT has free endpoint capacity; "
                "the provided cover is not greedily maximal")
    return EdgeClassification(frozenset(e1), frozenset(e2), frozenset(e3), tuple(d_a))
