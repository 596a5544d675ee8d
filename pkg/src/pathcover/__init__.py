"""Greedy maximum-weight path covers on undirected graphs.

Two algorithms build the same cover: a baseline descending-weight greedy
scan, and a variant that eagerly removes edges that can never be
accepted once a vertex becomes path-interior. The package also ships
seeded graph generators, an exact small-graph oracle, degree statistics,
edge-list/CSV ingestion and a benchmark harness.
"""

from .bench import RunPlan, VerifyReport, run_bench, run_plan, verify_graph
from .cover import (
    CoverTrace,
    PathCover,
    ValidationReport,
    cover_baseline,
    cover_optimized,
    cover_weight,
    validate_cover,
)
from .engine import available_engines, resolve_engine
from .exceptions import (
    BadEndpointError,
    BadSpecError,
    DegenerateProbabilityError,
    DuplicateEdgeError,
    EmptyFileError,
    InvalidCoverError,
    NonPositiveWeightError,
    ParseError,
    PathCoverError,
    SelfLoopError,
    TooLargeError,
    VerificationError,
)
from .generate import GenSpec, gen_erdos_renyi, gen_ring_lattice, generate
from .graph import Edge, Graph, build_graph, degree, graph_from_arrays
from .io import (
    BenchRecord,
    EdgeListSource,
    LoadResult,
    load_edge_list,
    read_bench_csv,
    write_bench_csv,
    write_edge_list,
)
from .oracle import (
    EdgeClassification,
    OptimalCover,
    classify_edges,
    optimal_cover_bruteforce,
)
from .sequence import SortedEdgeSequence, sort_edges
from .stats import DegreeStats, degree_stats, read_histogram_csv, write_histogram_csv

__version__ = "0.1.0"

__all__ = [
    "BadEndpointError",
    "BadSpecError",
    "BenchRecord",
    "CoverTrace",
    "DegenerateProbabilityError",
    "DegreeStats",
    "DuplicateEdgeError",
    "Edge",
    "EdgeClassification",
    "EdgeListSource",
    "EmptyFileError",
    "GenSpec",
    "Graph",
    "InvalidCoverError",
    "LoadResult",
    "NonPositiveWeightError",
    "OptimalCover",
    "ParseError",
    "PathCover",
    "PathCoverError",
    "RunPlan",
    "SelfLoopError",
    "SortedEdgeSequence",
    "TooLargeError",
    "ValidationReport",
    "VerificationError",
    "VerifyReport",
    "available_engines",
    "build_graph",
    "classify_edges",
    "cover_baseline",
    "cover_optimized",
    "cover_weight",
    "degree",
    "degree_stats",
    "gen_erdos_renyi",
    "gen_ring_lattice",
    "generate",
    "graph_from_arrays",
    "load_edge_list",
    "optimal_cover_bruteforce",
    "read_bench_csv",
    "read_histogram_csv",
    "resolve_engine",
    "run_bench",
    "run_plan",
    "sort_edges",
    "validate_cover",
    "verify_graph",
    "write_bench_csv",
    "write_edge_list",
    "write_histogram_csv",
]
