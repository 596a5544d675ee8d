"""Cross-engine agreement: the compiled kernels must reproduce the
interpreted reference bit for bit."""

import random

import pytest

import pathcover as pc
from conftest import random_graph

needs_numba = pytest.mark.skipif(
    "numba" not in pc.available_engines(), reason="numba not importable")


@needs_numba
def test_engines_agree_on_random_graphs():
    rng = random.Random(99)
    for _ in range(300):
        g = random_graph(rng, max_n=24)
        ids = {
            (name, opt): fn(g, engine=name).edge_ids
            for name in ("python", "numba")
            for opt, fn in (("base", pc.cover_baseline), ("opt", pc.cover_optimized))
        }
        assert len(set(ids.values())) == 1, f"engines disagree: {ids}"


@needs_numba
def test_engines_agree_on_generated_families():
    for spec in (
        pc.GenSpec(family="ring-lattice", n=512, k=6, seed=3),
        pc.GenSpec(family="erdos-renyi", n=800, c=2.5, seed=4),
    ):
        g = pc.generate(spec)
        assert pc.cover_baseline(g, engine="numba").edge_ids == \
            pc.cover_baseline(g, engine="python").edge_ids
        assert pc.cover_optimized(g, engine="numba").edge_ids == \
            pc.cover_optimized(g, engine="python").edge_ids


@needs_numba
def test_numba_removed_sets_match_python(five_node_fixture):
    # removal marking is engine-independent even though only the
    # interpreted path records traces
    from pathcover._scan_numba import REMOVED, scan_kernels
    from pathcover.sequence import descending_order

    g = five_node_fixture
    order = descending_order(g.w)
    status = scan_kernels().optimized(order, g.eu, g.ev, g.adj_indptr, g.adj_eids, g.n)
    _, trace = pc.cover_optimized(g, trace=True)
    assert sorted(int(e) for e in (status == REMOVED).nonzero()[0]) == sorted(trace.removed())


def test_engine_resolution():
    assert pc.resolve_engine("python") == "python"
    with pytest.raises(ValueError):
        pc.resolve_engine("rust")


def test_engine_env_var(monkeypatch):
    from pathcover.engine import ENGINE_ENV
    monkeypatch.setenv(ENGINE_ENV, "python")
    assert pc.resolve_engine(None) == "python"
    monkeypatch.setenv(ENGINE_ENV, "auto")
    assert pc.resolve_engine(None) in ("python", "numba")
