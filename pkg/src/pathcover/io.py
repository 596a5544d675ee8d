"""Edge-list ingestion (SNAP-style files) and benchmark CSV round-trip.

Edge-list files: one edge per line, two or three whitespace- or
comma-separated fields (``u v [weight]``), ``#`` or ``%`` comment lines.
External vertex labels (arbitrary tokens) are remapped to dense ids in
first-appearance order; duplicate unordered pairs keep their first
occurrence and self-loops are dropped, both counted in the load report.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, fields
from typing import Optional

import numpy as np

from .exceptions import EmptyFileError, ParseError
from .graph import Graph, graph_from_arrays

__all__ = [
    "BenchRecord",
    "EdgeListSource",
    "LoadResult",
    "load_edge_list",
    "read_bench_csv",
    "write_bench_csv",
    "write_edge_list",
]

WEIGHT_POLICIES = ("use-file", "unit", "random")


@dataclass(frozen=True)
class EdgeListSource:
    """A file plus the weight policy to apply to it.

    ``use-file`` takes weights from the third field; ``unit`` assigns 1
    to every edge; ``random`` draws integers uniformly from
    [weight_lo, weight_hi] with the given seed (the default for the
    unweighted social-network datasets, mirroring the synthetic range).
    """

    path: str
    weight_policy: str = "random"
    weight_lo: int = 1
    weight_hi: int = 10
    seed: int = 0

    def __post_init__(self):
        if self.weight_policy not in WEIGHT_POLICIES:
            raise ParseError(
                f"unknown weight policy {self.weight_policy!r}; expected {WEIGHT_POLICIES}")

    def describe(self) -> str:
        s = f"input={self.path} policy={self.weight_policy}"
        if self.weight_policy == "random":
            s += f" weights={self.weight_lo}:{self.weight_hi} seed={self.seed}"
        return s


@dataclass(frozen=True)
class LoadResult:
    graph: Graph
    labels: tuple[str, ...]          # dense id -> external label
    data_lines: int
    self_loops_dropped: int
    duplicates_dropped: int

    @property
    def kept(self) -> int:
        return self.graph.m


def load_edge_list(source: EdgeListSource) -> LoadResult:
    """Parse an edge-list file into a Graph under the source's policy.

    Raises ParseError with the offending line number, or EmptyFileError
    when no data lines exist.
    """
    ids: dict[str, int] = {}
    eu: list[int] = []
    ev: list[int] = []
    ws: list[float] = []
    seen_pairs: set[int] = set()
    pending_pairs: list[tuple[int, int]] = []
    use_file = source.weight_policy == "use-file"
    data_lines = 0
    self_loops = 0
    duplicates = 0

    with open(source.path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#") or line.startswith("%"):
                continue
            parts = line.split(",") if "," in line else line.split()
            if len(parts) not in (2, 3):
                raise ParseError(f"expected 2 or 3 fields, got {len(parts)}", line_no)
            data_lines += 1
            a, b = parts[0].strip(), parts[1].strip()
            if use_file:
                if len(parts) != 3:
                    raise ParseError("weight policy use-file needs a third field", line_no)
                try:
                    wgt = float(parts[2])
                except ValueError:
                    raise ParseError(f"bad weight {parts[2]!r}", line_no) from None
                if not math.isfinite(wgt) or wgt <= 0:
                    raise ParseError(f"weight must be positive and finite, got {parts[2]}", line_no)
            else:
                wgt = 1.0
            ua = ids.setdefault(a, len(ids))
            ub = ids.setdefault(b, len(ids))
            if ua == ub:
                self_loops += 1
                continue
            pending_pairs.append((ua, ub) if ua < ub else (ub, ua))
            eu.append(ua)
            ev.append(ub)
            ws.append(wgt)

    if data_lines == 0:
        raise EmptyFileError(f"{source.path} has no data lines")

    n = len(ids)
    keep = []
    for i, pair in enumerate(pending_pairs):
        key = pair[0] * n + pair[1]
        if key in seen_pairs:
            duplicates += 1
        else:
            seen_pairs.add(key)
            keep.append(i)

    eu_arr = np.asarray(eu, dtype=np.int64)[keep]
    ev_arr = np.asarray(ev, dtype=np.int64)[keep]
    if source.weight_policy == "unit":
        w_arr = np.ones(len(keep), dtype=np.float64)
    elif use_file:
        w_arr = np.asarray(ws, dtype=np.float64)[keep]
    else:
        rng = np.random.Generator(np.random.PCG64(source.seed))
        w_arr = rng.integers(source.weight_lo, source.weight_hi + 1,
                             size=len(keep), dtype=np.int64).astype(np.float64)

    graph = graph_from_arrays(n, eu_arr, ev_arr, w_arr)
    labels = tuple(ids)  # dict preserves first-appearance order
    return LoadResult(graph, labels, data_lines, self_loops, duplicates)


def write_edge_list(g: Graph, path) -> None:
    """Write ``u v weight`` lines in edge-id order."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"# vertices {g.n} edges {g.m}\n")
        eu, ev, w = g.eu_list, g.ev_list, g.w_list
        for i in range(g.m):
            fh.write(f"{eu[i]} {ev[i]} {w[i]:.12g}\n")


@dataclass(frozen=True)
class BenchRecord:
    """One benchmark row: graph shape, degree stats, timings, cover facts."""

    label: str
    n: int
    m: int
    avg_degree: float
    skewness: Optional[float]
    kurtosis_excess: Optional[float]
    t_algo1_seconds: float
    t_algo2_seconds: float
    time_ratio: float
    cover_weight_1: float
    cover_weight_2: float
    h: int
    k: int
    seed: int
    spec: str


_FLOAT_FIELDS = {
    "avg_degree", "skewness", "kurtosis_excess", "t_algo1_seconds",
    "t_algo2_seconds", "time_ratio", "cover_weight_1", "cover_weight_2",
}
_INT_FIELDS = {"n", "m", "h", "k", "seed"}


def _format_cell(name: str, value) -> str:
    if name in _FLOAT_FIELDS:
        if value is None:
            return "nan"
        return f"{value:.6g}"
    return str(value)


def write_bench_csv(records: list[BenchRecord], path) -> None:
    """Write records with a header row; floats carry 6 significant digits."""
    names = [f.name for f in fields(BenchRecord)]
    with open(path, "w", newline="", encoding="utf-8") as fh:
        out = csv.writer(fh)
        out.writerow(names)
        for rec in records:
            out.writerow([_format_cell(nm, getattr(rec, nm)) for nm in names])


def read_bench_csv(path) -> list[BenchRecord]:
    """Inverse of :func:`write_bench_csv`."""
    names = [f.name for f in fields(BenchRecord)]
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    if not rows or rows[0] != names:
        raise ParseError(f"{path}: header does not match the BenchRecord schema")
    records = []
    for row in rows[1:]:
        if len(row) != len(names):
            raise ParseError(f"{path}: row has {len(row)} cells, expected {len(names)}")
        kwargs = {}
        for name, cell in zip(names, row):
            if name in _INT_FIELDS:
                kwargs[name] = int(cell)
            elif name in _FLOAT_FIELDS:
                value = float(cell)
                if math.isnan(value) and name in ("skewness", "kurtosis_excess"):
                    kwargs[name] = None
                else:
                    kwargs[name] = value
            else:
                kwargs[name] = cell
        records.append(BenchRecord(**kwargs))
    return records
