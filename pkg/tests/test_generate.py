import math

import numpy as np
import pytest

import pathcover as pc
from pathcover.generate import _pairs_from_linear


def ring(n, k, seed=0, lo=1, hi=10):
    return pc.gen_ring_lattice(pc.GenSpec(family="ring-lattice", n=n, k=k,
                                          weight_lo=lo, weight_hi=hi, seed=seed))


def er(n, c, seed=0):
    return pc.gen_erdos_renyi(pc.GenSpec(family="erdos-renyi", n=n, c=c, seed=seed))


def test_ring_k4_n5_is_complete():
    g = ring(5, 4)
    assert g.m == 10
    assert g.degrees().tolist() == [4] * 5


def test_ring_k2_is_cycle():
    g = ring(8, 2)
    assert g.m == 8
    assert g.degrees().tolist() == [2] * 8


def test_ring_regular_degree():
    for n, k in ((64, 4), (65, 6), (100, 8)):
        g = ring(n, k)
        assert g.m == n * k // 2
        assert set(g.degrees().tolist()) == {k}


def test_ring_paper_scale_edge_count():
    g = ring(131072, 4)
    assert g.n == 131072 and g.m == 262144


def test_seed_determinism():
    for build in (lambda s: ring(200, 6, seed=s), lambda s: er(500, 2.0, seed=s)):
        a, b = build(42), build(42)
        assert np.array_equal(a.eu, b.eu) and np.array_equal(a.ev, b.ev)
        assert np.array_equal(a.w, b.w)
        c = build(43)
        assert not np.array_equal(a.w, c.w)


def test_weights_integral_in_range():
    for g in (ring(300, 4, lo=3, hi=7), er(400, 2.0)):
        assert np.all(g.w == np.floor(g.w))
    g = ring(300, 4, lo=3, hi=7)
    assert g.w.min() >= 3 and g.w.max() <= 7


def test_bad_specs_rejected():
    with pytest.raises(pc.BadSpecError):
        pc.GenSpec(family="ring-lattice", n=10, k=3)   # odd degree
    with pytest.raises(pc.BadSpecError):
        pc.GenSpec(family="ring-lattice", n=4, k=4)    # k must stay below n
    with pytest.raises(pc.BadSpecError):
        pc.GenSpec(family="ring-lattice", n=10)        # k missing
    with pytest.raises(pc.BadSpecError):
        pc.GenSpec(family="erdos-renyi", n=10, c=-1.0)
    with pytest.raises(pc.BadSpecError):
        pc.GenSpec(family="star", n=10)
    with pytest.raises(pc.BadSpecError):
        pc.GenSpec(family="erdos-renyi", n=10, c=2.0, weight_lo=0)


def test_degenerate_probability():
    # c * ln(n) / n >= 1
    with pytest.raises(pc.DegenerateProbabilityError):
        er(10, 5.0)


def test_er_no_duplicates_no_loops():
    g = er(2000, 3.0, seed=9)
    key = np.minimum(g.eu, g.ev) * g.n + np.maximum(g.eu, g.ev)
    assert len(np.unique(key)) == g.m
    assert np.all(g.eu != g.ev)


def test_er_edge_count_concentrates():
    n, c = 12_000, 2.0
    p = c * math.log(n) / n
    expect = p * n * (n - 1) / 2
    sigma = math.sqrt(expect * (1 - p))
    counts = [er(n, c, seed=s).m for s in range(30)]
    mean = sum(counts) / len(counts)
    assert abs(mean - expect) / expect < 0.01
    assert all(abs(m - expect) < 5 * sigma for m in counts)


def test_er_average_degree_tracks_probability():
    n, c = 25_806, 3.0
    g = er(n, c, seed=1)
    p = c * math.log(n) / n
    assert abs(2 * g.m / n - p * (n - 1)) < 0.5


def test_pair_inversion_exact():
    n = 97
    total = n * (n - 1) // 2
    idx = np.arange(total, dtype=np.int64)
    i, j = _pairs_from_linear(n, idx)
    expected = np.array([(a, b) for a in range(n) for b in range(a + 1, n)],
                        dtype=np.int64)
    assert np.array_equal(i, expected[:, 0])
    assert np.array_equal(j, expected[:, 1])


def test_generate_dispatch():
    assert pc.generate(pc.GenSpec(family="ring-lattice", n=10, k=2)).m == 10
    assert pc.generate(pc.GenSpec(family="erdos-renyi", n=100, c=2.0)).n == 100
