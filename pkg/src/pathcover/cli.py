"""Command-line interface: generate, bench, verify, stats.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from .bench import RunPlan, run_plan, verify_graph
from .exceptions import PathCoverError, VerificationError
from .generate import ER, RING, GenSpec, generate
from .io import EdgeListSource, load_edge_list, write_bench_csv, write_edge_list
from .stats import degree_stats, write_histogram_csv

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_INPUT = 2


def _parse_weights(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo:hi, got {text!r}") from None


def _add_source_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=[RING, ER, "ring", "er"],
                   help="generated graph family")
    p.add_argument("--nodes", type=int, help="vertex count for generated graphs")
    p.add_argument("--degree", type=int, help="ring lattice degree k (even)")
    p.add_argument("--coef", type=float, help="ER probability coefficient c in p=c*ln(n)/n")
    p.add_argument("--weights", type=_parse_weights, default=(1, 10),
                   metavar="LO:HI", help="integer weight range (default 1:10)")
    p.add_argument("--seed", type=int, default=0, help="generator seed")
    p.add_argument("--input", help="edge-list file instead of a generated graph")
    p.add_argument("--weight-policy", choices=["use-file", "unit", "random"],
                   default="random", help="weights for loaded edge lists")


def _source_from_args(args) -> GenSpec | EdgeListSource:
    if args.input:
        return EdgeListSource(
            path=args.input,
            weight_policy=args.weight_policy,
            weight_lo=args.weights[0],
            weight_hi=args.weights[1],
            seed=args.seed,
        )
    if not args.family or not args.nodes:
        raise PathCoverError("need --input, or --family with --nodes")
    family = {"ring": RING, "er": ER}.get(args.family, args.family)
    return GenSpec(
        family=family,
        n=args.nodes,
        k=args.degree,
        c=args.coef,
        weight_lo=args.weights[0],
        weight_hi=args.weights[1],
        seed=args.seed,
    )


def _load_graph(args):
    source = _source_from_args(args)
    if isinstance(source, GenSpec):
        return generate(source)
    return load_edge_list(source).graph


def _cmd_generate(args) -> int:
    source = _source_from_args(args)
    if isinstance(source, EdgeListSource):
        raise PathCoverError("generate needs --family/--nodes, not --input")
    g = generate(source)
    write_edge_list(g, args.out)
    print(f"wrote {g.n} vertices, {g.m} edges to {args.out}")
    return EXIT_OK


def _cmd_bench(args) -> int:
    plan = RunPlan(
        source=_source_from_args(args),
        repetitions=args.reps,
        warmup=args.warmup,
        verify=args.verify,
        trace=args.trace,
        engine=args.engine,
    )
    record = run_plan(plan)
    write_bench_csv([record], args.out)
    print(f"{record.label}: n={record.n} m={record.m} "
          f"algo1={record.t_algo1_seconds:.3f}s algo2={record.t_algo2_seconds:.3f}s "
          f"ratio={record.time_ratio:.3f} -> {args.out}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    g = _load_graph(args)
    report = verify_graph(g, oracle_limit=args.oracle_limit, engine=args.engine)
    print(f"covers valid, identical edge sets; H={report.h} K={report.k} "
          f"(H = N-K = {report.n - report.k})")
    if report.bound_checked:
        print(f"cover weight {report.cover_weight:g} vs optimum "
              f"{report.optimal_weight:g}: ratio {report.weight_ratio:.3f} >= 0.5")
        e1, e2, e3 = report.classification_sizes
        print(f"optimum edge classification: |E1|={e1} |E2|={e2} |E3|={e3}")
    for notice in report.notices:
        print(f"note: {notice}")
    return EXIT_OK


def _cmd_stats(args) -> int:
    g = _load_graph(args)
    s = degree_stats(g)
    print(f"n={s.n} m={s.m} avg_degree={s.avg_degree:.4g}")
    if s.zero_variance:
        print("skewness/kurtosis undefined: zero degree variance")
    else:
        print(f"skewness={s.skewness:.4g} kurtosis_excess={s.kurtosis_excess:.4g}")
    if args.out:
        write_histogram_csv(s, args.out)
        print(f"histogram -> {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathcover",
        description="Greedy maximum-weight path covers: generate graphs, "
                    "benchmark both algorithms, verify invariants, degree stats.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("generate", help="write a generated graph as an edge list")
    _add_source_args(p_gen)
    p_gen.add_argument("--out", required=True, help="output edge-list path")
    p_gen.set_defaults(fn=_cmd_generate)

    p_bench = sub.add_parser("bench", help="time both algorithms and write a CSV record")
    _add_source_args(p_bench)
    p_bench.add_argument("--reps", type=int, default=5, help="timed repetitions (median)")
    p_bench.add_argument("--warmup", type=int, default=1, help="untimed warmup runs")
    p_bench.add_argument("--verify", action="store_true",
                         help="validate covers and equivalence before recording")
    p_bench.add_argument("--trace", action="store_true",
                         help="also run a traced pass and check it changes nothing")
    p_bench.add_argument("--engine", default="python",
                         choices=["python", "numba", "auto"],
                         help="scan engine to time (default: python, the "
                              "reference whose ratios match the published tables)")
    p_bench.add_argument("--out", required=True, help="output CSV path")
    p_bench.set_defaults(fn=_cmd_bench)

    p_verify = sub.add_parser("verify", help="run the invariant suite on a graph")
    _add_source_args(p_verify)
    p_verify.add_argument("--oracle-limit", type=int, default=None,
                          help="check the half-of-optimum bound when n <= this")
    p_verify.add_argument("--engine", default=None,
                          choices=["python", "numba", "auto"])
    p_verify.set_defaults(fn=_cmd_verify)

    p_stats = sub.add_parser("stats", help="degree statistics and histogram CSV")
    _add_source_args(p_stats)
    p_stats.add_argument("--out", default=None, help="histogram CSV path")
    p_stats.set_defaults(fn=_cmd_stats)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    except (PathCoverError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
