"""Descending-weight edge ordering with O(1) unlink of live edges."""

from __future__ import annotations

from typing import Iterator

import numpy as np

from .graph import Graph

__all__ = ["SortedEdgeSequence", "descending_order", "sort_edges"]


def descending_order(w: np.ndarray) -> np.ndarray:
    """Edge ids sorted by descending weight, ties by ascending id.

    The tie rule makes the order total, which is what lets the baseline
    and optimized algorithms produce literally identical covers.
    """
    return np.argsort(-np.asarray(w, dtype=np.float64), kind="stable")


class SortedEdgeSequence:
    """Iterable edge order supporting removal of not-yet-visited edges.

    Iteration yields live edge ids in descending weight order. ``unlink``
    is O(1) and may be called while iterating, including on the edge
    currently being visited; unlinked edges are never yielded afterwards.
    Per-vertex incidence handles are the graph's incident edge ids.
    """

    __slots__ = ("graph", "order", "_next", "_prev", "_alive", "_head", "_live")

    def __init__(self, graph: Graph):
        self.graph = graph
        m = graph.m
        self.order = descending_order(graph.w)
        nxt = np.full(m, -1, dtype=np.int64)
        prv = np.full(m, -1, dtype=np.int64)
        if m:
            nxt[self.order[:-1]] = self.order[1:]
            prv[self.order[1:]] = self.order[:-1]
        self._next = nxt.tolist()
        self._prev = prv.tolist()
        self._alive = [True] * m
        self._head = int(self.order[0]) if m else -1
        self._live = m

    def __len__(self) -> int:
        return self._live

    def is_live(self, eid: int) -> bool:
        return self._alive[eid]

    def unlink(self, eid: int) -> bool:
        """Remove ``eid`` from the sequence; False if already gone."""
        if not self._alive[eid]:
            return False
        self._alive[eid] = False
        self._live -= 1
        p = self._prev[eid]
        n = self._next[eid]
        if p >= 0:
            self._next[p] = n
        else:
            self._head = n
        if n >= 0:
            self._prev[n] = p
        return True

    def unlink_incident(self, x: int) -> list[int]:
        """Unlink all live edges incident to vertex ``x``; returns them."""
        dropped = []
        for eid in self.graph.adj_lists[x]:
            if self.unlink(eid):
                dropped.append(eid)
        return dropped

    def __iter__(self) -> Iterator[int]:
        # A stale forward link can point at an edge unlinked after being
        # scheduled, so liveness is re-checked before yielding.
        nxt = self._next
        alive = self._alive
        cur = self._head
        while cur >= 0:
            if alive[cur]:
                yield cur
            cur = nxt[cur]


def sort_edges(g: Graph) -> SortedEdgeSequence:
    """Sort ``g``'s edges by descending weight into a linked sequence."""
    return SortedEdgeSequence(g)
