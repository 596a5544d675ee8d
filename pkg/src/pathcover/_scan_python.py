"""Interpreted scan kernels for the two greedy cover algorithms.

This is the reference engine. State lives in hash-based containers
(dict of path deques, vertex-to-path dict) with edge endpoints in plain
lists, and both algorithms scan the descending-weight edge order. The
optimized scan marks edges incident to freshly interior vertices as
removed (lazy deletion: the iterator skips flagged edges with one C-level
check), so removed edges never run through the four-case rule again.

Each kernel returns ``(accepted, status)``: the accepted edge ids in
acceptance order, and the per-edge status codes. In the untraced
optimized scan the removal walk stores flags unconditionally (already
visited edges sit behind the cursor, so overwriting their codes cannot
change the scan); ``accepted`` stays authoritative, while rejected vs
removed codes are only exact in traced runs, which keep the precise
bookkeeping and log every event in order.
"""

from __future__ import annotations

from collections import deque
from itertools import filterfalse

PENDING = 0
ACCEPTED_NEW = 1
ACCEPTED_APPEND = 2
ACCEPTED_MERGE = 3
REJECTED = 4
REMOVED = 5

ACTION_NAMES = {
    ACCEPTED_NEW: "accepted-new",
    ACCEPTED_APPEND: "accepted-append",
    ACCEPTED_MERGE: "accepted-merge",
    REJECTED: "rejected",
    REMOVED: "removed",
}


def scan_baseline(order, eu, ev, events=None):
    """Run the baseline greedy scan over every edge in ``order``."""
    m = len(eu)
    status = [0] * m
    accepted: list[int] = []
    node_path: dict[int, int] = {}
    paths: dict[int, deque] = {}
    get = node_path.get
    push = accepted.append
    next_pid = 0
    rec = events is not None
    for e in order:
        u = eu[e]
        v = ev[e]
        pu = get(u)
        pv = get(v)
        if pu is None and pv is None:
            paths[next_pid] = deque((u, v))
            node_path[u] = next_pid
            node_path[v] = next_pid
            next_pid += 1
            status[e] = ACCEPTED_NEW
        elif pu is not None and pv is None:
            path = paths[pu]
            if path[0] == u:
                path.appendleft(v)
            elif path[-1] == u:
                path.append(v)
            else:
                status[e] = REJECTED
                if rec:
                    events.append((e, REJECTED))
                continue
            node_path[v] = pu
            status[e] = ACCEPTED_APPEND
        elif pv is not None and pu is None:
            path = paths[pv]
            if path[0] == v:
                path.appendleft(u)
            elif path[-1] == v:
                path.append(u)
            else:
                status[e] = REJECTED
                if rec:
                    events.append((e, REJECTED))
                continue
            node_path[u] = pv
            status[e] = ACCEPTED_APPEND
        elif pu != pv:
            pa = paths[pu]
            pb = paths[pv]
            if (pa[0] != u and pa[-1] != u) or (pb[0] != v and pb[-1] != v):
                status[e] = REJECTED
                if rec:
                    events.append((e, REJECTED))
                continue
            if len(pa) < len(pb):
                pa, pb = pb, pa
                pu, pv = pv, pu
                uu, vv = v, u
            else:
                uu, vv = u, v
            for x in pb:
                node_path[x] = pu
            # graft the smaller path onto whichever end of pa holds uu,
            # oriented so vv lands next to uu
            if pa[-1] == uu:
                pa.extend(pb if pb[0] == vv else reversed(pb))
            else:
                pa.extendleft(pb if pb[0] == vv else reversed(pb))
            del paths[pv]
            status[e] = ACCEPTED_MERGE
        else:
            status[e] = REJECTED
            if rec:
                events.append((e, REJECTED))
            continue
        push(e)
        if rec:
            events.append((e, status[e]))
    return accepted, status


def scan_optimized(order, eu, ev, adj, events=None):
    """Baseline scan plus eager removal of edges at interior vertices.

    ``adj``: per-vertex lists of incident edge ids. Produces the same
    accepted sequence as :func:`scan_baseline` on the same order.
    """
    if events is not None:
        return _scan_optimized_traced(order, eu, ev, adj, events)
    m = len(eu)
    status = [0] * m
    accepted: list[int] = []
    node_path: dict[int, int] = {}
    paths: dict[int, deque] = {}
    get = node_path.get
    push = accepted.append
    next_pid = 0
    for e in filterfalse(status.__getitem__, order):
        u = eu[e]
        v = ev[e]
        pu = get(u)
        pv = get(v)
        if pu is None and pv is None:
            paths[next_pid] = deque((u, v))
            node_path[u] = next_pid
            node_path[v] = next_pid
            next_pid += 1
            status[e] = ACCEPTED_NEW
            push(e)
        elif pu is not None and pv is None:
            path = paths[pu]
            if path[0] == u:
                path.appendleft(v)
            elif path[-1] == u:
                path.append(v)
            else:
                status[e] = REJECTED
                continue
            node_path[v] = pu
            status[e] = ACCEPTED_APPEND
            push(e)
            for j in adj[u]:
                status[j] = REMOVED
        elif pv is not None and pu is None:
            path = paths[pv]
            if path[0] == v:
                path.appendleft(u)
            elif path[-1] == v:
                path.append(u)
            else:
                status[e] = REJECTED
                continue
            node_path[u] = pv
            status[e] = ACCEPTED_APPEND
            push(e)
            for j in adj[v]:
                status[j] = REMOVED
        elif pu != pv:
            pa = paths[pu]
            pb = paths[pv]
            if (pa[0] != u and pa[-1] != u) or (pb[0] != v and pb[-1] != v):
                status[e] = REJECTED
                continue
            if len(pa) < len(pb):
                pa, pb = pb, pa
                pu, pv = pv, pu
                uu, vv = v, u
            else:
                uu, vv = u, v
            for x in pb:
                node_path[x] = pu
            if pa[-1] == uu:
                pa.extend(pb if pb[0] == vv else reversed(pb))
            else:
                pa.extendleft(pb if pb[0] == vv else reversed(pb))
            del paths[pv]
            status[e] = ACCEPTED_MERGE
            push(e)
            for j in adj[u]:
                status[j] = REMOVED
            for j in adj[v]:
                status[j] = REMOVED
        else:
            status[e] = REJECTED
    return accepted, status


def _scan_optimized_traced(order, eu, ev, adj, events):
    """Exact-bookkeeping variant: precise removal flags and event log."""
    m = len(eu)
    status = [0] * m
    accepted: list[int] = []
    node_path: dict[int, int] = {}
    paths: dict[int, deque] = {}
    get = node_path.get
    next_pid = 0

    def drop_incident(x):
        for j in adj[x]:
            if not status[j]:
                status[j] = REMOVED
                events.append((j, REMOVED))

    for e in order:
        if status[e]:
            continue
        u = eu[e]
        v = ev[e]
        pu = get(u)
        pv = get(v)
        if pu is None and pv is None:
            paths[next_pid] = deque((u, v))
            node_path[u] = next_pid
            node_path[v] = next_pid
            next_pid += 1
            status[e] = ACCEPTED_NEW
            accepted.append(e)
            events.append((e, ACCEPTED_NEW))
        elif pu is not None and pv is None:
            path = paths[pu]
            if path[0] == u:
                path.appendleft(v)
            elif path[-1] == u:
                path.append(v)
            else:
                status[e] = REJECTED
                events.append((e, REJECTED))
                continue
            node_path[v] = pu
            status[e] = ACCEPTED_APPEND
            accepted.append(e)
            events.append((e, ACCEPTED_APPEND))
            drop_incident(u)
        elif pv is not None and pu is None:
            path = paths[pv]
            if path[0] == v:
                path.appendleft(u)
            elif path[-1] == v:
                path.append(u)
            else:
                status[e] = REJECTED
                events.append((e, REJECTED))
                continue
            node_path[u] = pv
            status[e] = ACCEPTED_APPEND
            accepted.append(e)
            events.append((e, ACCEPTED_APPEND))
            drop_incident(v)
        elif pu != pv:
            pa = paths[pu]
            pb = paths[pv]
            if (pa[0] != u and pa[-1] != u) or (pb[0] != v and pb[-1] != v):
                status[e] = REJECTED
                events.append((e, REJECTED))
                continue
            if len(pa) < len(pb):
                pa, pb = pb, pa
                pu, pv = pv, pu
                uu, vv = v, u
            else:
                uu, vv = u, v
            for x in pb:
                node_path[x] = pu
            if pa[-1] == uu:
                pa.extend(pb if pb[0] == vv else reversed(pb))
            else:
                pa.extendleft(pb if pb[0] == vv else reversed(pb))
            del paths[pv]
            status[e] = ACCEPTED_MERGE
            accepted.append(e)
            events.append((e, ACCEPTED_MERGE))
            drop_incident(u)
            drop_incident(v)
        else:
            status[e] = REJECTED
            events.append((e, REJECTED))
    return accepted, status
