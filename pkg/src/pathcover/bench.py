"""Wall-clock benchmark harness for the two cover algorithms.

Protocol: the graph is built or loaded once (untimed); after warmup
passes, each repetition times one full baseline run then one full
optimized run (interleaved to cancel slow drift), and the medians are
reported. Every timed run performs its own descending-weight sort, as
both algorithms specify. Garbage collection is paused inside the timed
region. Repetitions run serially; nothing here is parallel, so records
within a plan could be farmed out to worker processes by a caller.

The default engine is the interpreted reference; that is the runtime
model in which removed-edge skipping shows the published time ratios.
Compiled-kernel throughput can be measured by passing
``engine="numba"`` (the ratio is then near 1: the sort dominates).
"""

from __future__ import annotations

import gc
import statistics
import time
from dataclasses import dataclass, field
from typing import Optional, Union

from .cover import cover_baseline, cover_optimized, validate_cover
from .exceptions import VerificationError
from .generate import GenSpec, generate
from .graph import Graph
from .io import BenchRecord, EdgeListSource, load_edge_list
from .oracle import classify_edges, optimal_cover_bruteforce
from .stats import degree_stats

__all__ = ["RunPlan", "VerifyReport", "run_bench", "run_plan", "verify_graph"]

Source = Union[GenSpec, EdgeListSource]


@dataclass(frozen=True)
class RunPlan:
    """One benchmark configuration."""

    source: Source
    repetitions: int = 5
    warmup: int = 1
    verify: bool = False
    trace: bool = False
    engine: str = "python"
    label: Optional[str] = None

    def __post_init__(self):
        if self.repetitions < 1:
            raise ValueError("repetitions must be >= 1")
        if self.warmup < 0:
            raise ValueError("warmup must be >= 0")


def _materialize(source: Source) -> tuple[Graph, str, int, str]:
    if isinstance(source, GenSpec):
        return generate(source), source.family, source.seed, source.describe()
    result = load_edge_list(source)
    return result.graph, source.path, source.seed, source.describe()


def run_plan(plan: RunPlan) -> BenchRecord:
    """Execute one configuration and return its record.

    Raises VerificationError if ``plan.verify`` is set and any invariant
    fails; the record is then withheld.
    """
    g, default_label, seed, spec_desc = _materialize(plan.source)
    label = plan.label or default_label
    engine = plan.engine

    def run1():
        return cover_baseline(g, engine=engine)

    def run2():
        return cover_optimized(g, engine=engine)

    for _ in range(plan.warmup):
        cover1 = run1()
        cover2 = run2()
    t1s: list[float] = []
    t2s: list[float] = []
    gc_was_enabled = gc.isenabled()
    gc.collect()  # start the timed region from a settled heap
    gc.disable()
    try:
        for _ in range(plan.repetitions):
            start = time.perf_counter()
            cover1 = run1()
            t1s.append(time.perf_counter() - start)
            start = time.perf_counter()
            cover2 = run2()
            t2s.append(time.perf_counter() - start)
    finally:
        if gc_was_enabled:
            gc.enable()

    if plan.verify:
        _verify_pair(g, cover1, cover2)
    if plan.trace:
        # trace runs are for diagnosis only; assert they change nothing
        traced_cover, _trace = cover_baseline(g, trace=True)
        if traced_cover.edge_ids != cover1.edge_ids:
            raise VerificationError("tracing changed the computed cover")

    dstats = degree_stats(g)
    t1 = statistics.median(t1s)
    t2 = statistics.median(t2s)
    return BenchRecord(
        label=label,
        n=g.n,
        m=g.m,
        avg_degree=dstats.avg_degree,
        skewness=dstats.skewness,
        kurtosis_excess=dstats.kurtosis_excess,
        t_algo1_seconds=t1,
        t_algo2_seconds=t2,
        time_ratio=t2 / t1,
        cover_weight_1=cover1.total_weight,
        cover_weight_2=cover2.total_weight,
        h=cover1.h,
        k=cover1.k,
        seed=seed,
        spec=f"{spec_desc} engine={engine} reps={plan.repetitions} warmup={plan.warmup}",
    )


def run_bench(plans: list[RunPlan]) -> list[BenchRecord]:
    """Run every plan serially, in order."""
    return [run_plan(p) for p in plans]


def _verify_pair(g: Graph, cover1, cover2) -> None:
    for name, cover in (("baseline", cover1), ("optimized", cover2)):
        report = validate_cover(g, cover)
        if not report.valid:
            raise VerificationError(f"{name} cover invalid: {report.violation}")
    if cover1.edge_ids != cover2.edge_ids:
        raise VerificationError("baseline and optimized covers differ")
    if cover1.h != g.n - cover1.k:
        raise VerificationError("H != N - K")


@dataclass(frozen=True)
class VerifyReport:
    """Invariant-suite outcome for one graph."""

    n: int
    m: int
    h: int
    k: int
    cover_weight: float
    equivalence_ok: bool
    covers_valid: bool
    bound_checked: bool
    optimal_weight: Optional[float] = None
    weight_ratio: Optional[float] = None
    classification_sizes: Optional[tuple[int, int, int]] = None
    notices: tuple[str, ...] = field(default_factory=tuple)


def verify_graph(g: Graph, oracle_limit: Optional[int] = None,
                 engine: Optional[str] = None) -> VerifyReport:
    """Run the full invariant suite on one graph.

    Validates both covers, their equivalence and H = N - K; when the
    graph is within ``oracle_limit`` vertices, additionally checks the
    half-of-optimum weight bound and reports the edge classification.

    Raises VerificationError on any violated invariant.
    """
    cover1 = cover_baseline(g, engine=engine)
    cover2 = cover_optimized(g, engine=engine)
    _verify_pair(g, cover1, cover2)
    notices: list[str] = []
    if oracle_limit is not None and g.n <= oracle_limit:
        opt = optimal_cover_bruteforce(g, limit=oracle_limit)
        ratio = cover1.total_weight / opt.weight if opt.weight > 0 else 1.0
        if cover1.total_weight < 0.5 * opt.weight - 1e-9:
            raise VerificationError(
                f"greedy weight {cover1.total_weight:g} below half of "
                f"optimum {opt.weight:g}")
        cls = classify_edges(g, cover1, opt)
        return VerifyReport(
            n=g.n, m=g.m, h=cover1.h, k=cover1.k,
            cover_weight=cover1.total_weight,
            equivalence_ok=True, covers_valid=True, bound_checked=True,
            optimal_weight=opt.weight, weight_ratio=ratio,
            classification_sizes=(len(cls.e1), len(cls.e2), len(cls.e3)),
            notices=tuple(notices),
        )
    if oracle_limit is not None:
        notices.append(
            f"graph has {g.n} vertices > oracle limit {oracle_limit}; bound check skipped")
    return VerifyReport(
        n=g.n, m=g.m, h=cover1.h, k=cover1.k,
        cover_weight=cover1.total_weight,
        equivalence_ok=True, covers_valid=True, bound_checked=False,
        notices=tuple(notices),
    )
