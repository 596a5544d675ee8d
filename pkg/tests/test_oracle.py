import itertools
import random

import pytest

import pathcover as pc
from conftest import random_graph


def enumerate_optimum(g: pc.Graph) -> float:
    """Independent oracle: literal enumeration of every edge subset."""
    best = 0.0
    m = g.m
    for mask in range(1 << m):
        deg = [0] * g.n
        parent = list(range(g.n))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        total = 0.0
        feasible = True
        for i in range(m):
            if mask >> i & 1:
                u, v = g.eu_list[i], g.ev_list[i]
                deg[u] += 1
                deg[v] += 1
                if deg[u] > 2 or deg[v] > 2:
                    feasible = False
                    break
                ru, rv = find(u), find(v)
                if ru == rv:
                    feasible = False
                    break
                parent[ru] = rv
                total += g.w_list[i]
        if feasible:
            best = max(best, total)
    return best


def test_path_graph_takes_everything():
    g = pc.build_graph(3, [(0, 1, 4), (1, 2, 6)])
    opt = pc.optimal_cover_bruteforce(g)
    assert opt.weight == 10.0


def test_triangle_optimum_is_five(triangle_321):
    # enumeration over all 2^3 subsets gives 5 (the two heaviest edges)
    assert enumerate_optimum(triangle_321) == 5.0
    opt = pc.optimal_cover_bruteforce(triangle_321)
    assert opt.weight == 5.0


def test_single_edge():
    g = pc.build_graph(2, [(0, 1, 7)])
    assert pc.optimal_cover_bruteforce(g).weight == 7.0


def test_too_large_guard():
    g = pc.build_graph(13, [(0, 1, 1)])
    with pytest.raises(pc.TooLargeError):
        pc.optimal_cover_bruteforce(g)
    assert pc.optimal_cover_bruteforce(g, limit=13).weight == 1.0


def test_matches_enumeration_on_random_graphs():
    rng = random.Random(4242)
    for _ in range(150):
        g = random_graph(rng, max_n=6)
        if g.m > 12:
            continue
        expected = enumerate_optimum(g)
        opt = pc.optimal_cover_bruteforce(g)
        assert abs(opt.weight - expected) < 1e-9
        report = pc.validate_cover(g, opt.cover)
        assert report.valid, report.violation
        assert abs(opt.cover.total_weight - opt.weight) < 1e-9


def test_weight_deterministic():
    rng = random.Random(7)
    g = random_graph(rng, max_n=9)
    w1 = pc.optimal_cover_bruteforce(g).weight
    w2 = pc.optimal_cover_bruteforce(g).weight
    assert w1 == w2


def test_oracle_dominates_greedy():
    rng = random.Random(31)
    for _ in range(200):
        g = random_graph(rng, max_n=9)
        greedy = pc.cover_baseline(g, engine="python")
        opt = pc.optimal_cover_bruteforce(g)
        assert opt.weight >= greedy.total_weight - 1e-9


def test_classification_identical_covers(triangle_321):
    greedy = pc.cover_baseline(triangle_321)
    opt = pc.optimal_cover_bruteforce(triangle_321)
    cls = pc.classify_edges(triangle_321, greedy, opt)
    assert cls.e1 == opt.cover.edge_ids == {0, 1}
    assert cls.e2 == frozenset() and cls.e3 == frozenset()
    assert cls.d_a == (1, 2, 1)


def test_classification_partitions_opt():
    rng = random.Random(77)
    checked = 0
    for _ in range(300):
        g = random_graph(rng, max_n=10)
        greedy = pc.cover_baseline(g)
        opt = pc.optimal_cover_bruteforce(g, limit=10)
        cls = pc.classify_edges(g, greedy, opt)
        assert cls.e1 | cls.e2 | cls.e3 == opt.cover.edge_ids
        assert len(cls.e1) + len(cls.e2) + len(cls.e3) == opt.cover.h
        assert cls.e1.isdisjoint(cls.e2) and cls.e1.isdisjoint(cls.e3)
        assert cls.e2.isdisjoint(cls.e3)
        assert all(d in (0, 1, 2) for d in cls.d_a)
        checked += 1
    assert checked == 300


def test_classification_rejects_invalid_cover(triangle_321):
    opt = pc.optimal_cover_bruteforce(triangle_321)
    bogus = pc.PathCover(triangle_321, [0, 1, 2])  # a cycle, not a cover
    with pytest.raises(pc.InvalidCoverError):
        pc.classify_edges(triangle_321, bogus, opt)


def test_half_bound_small_sample():
    rng = random.Random(2024)
    for _ in range(400):
        g = random_graph(rng, max_n=8, min_n=2)
        greedy = pc.cover_baseline(g)
        opt = pc.optimal_cover_bruteforce(g)
        assert greedy.total_weight >= 0.5 * opt.weight - 1e-9
