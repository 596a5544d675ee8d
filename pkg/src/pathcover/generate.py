"""Seeded generators for the two benchmark graph families.

Randomness comes from numpy's PCG64 generator, whose stream is stable
across numpy versions, so a GenSpec identifies its graph byte for byte.
Ring lattices connect each vertex to its k/2 nearest neighbors on each
side (the zero-rewiring reading of the Watts-Strogatz family: a fixed
degree requires no rewiring). Erdos-Renyi graphs use edge probability
p = c * ln(n) / n and are sampled with geometric index skips, so
generation is O(M) expected rather than O(n^2) coin flips.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .exceptions import BadSpecError, DegenerateProbabilityError
from .graph import Graph, graph_from_arrays

__all__ = ["GenSpec", "gen_erdos_renyi", "gen_ring_lattice", "generate"]

RING = "ring-lattice"
ER = "erdos-renyi"
FAMILIES = (RING, ER)


@dataclass(frozen=True)
class GenSpec:
    """Parameters identifying one generated graph.

    ``k`` is the ring degree (even, ring family only); ``c`` is the
    probability coefficient of the ER family. Integer weights are drawn
    uniformly from [weight_lo, weight_hi].
    """

    family: str
    n: int
    k: Optional[int] = None
    c: Optional[float] = None
    weight_lo: int = 1
    weight_hi: int = 10
    seed: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise BadSpecError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.n < 1:
            raise BadSpecError(f"vertex count must be >= 1, got {self.n}")
        if not (1 <= self.weight_lo <= self.weight_hi):
            raise BadSpecError(
                f"need 1 <= weight_lo <= weight_hi, got {self.weight_lo}:{self.weight_hi}")
        if self.family == RING:
            if self.k is None:
                raise BadSpecError("ring-lattice requires k")
            if self.k % 2 != 0 or not 2 <= self.k < self.n:
                raise BadSpecError(f"ring degree k must be even with 2 <= k < n, got k={self.k}")
        else:
            if self.c is None:
                raise BadSpecError("erdos-renyi requires c")
            if not math.isfinite(self.c) or self.c <= 0:
                raise BadSpecError(f"probability coefficient must be positive, got {self.c}")

    @property
    def edge_probability(self) -> float:
        """p = c * ln(n) / n (ER family)."""
        if self.family != ER:
            raise BadSpecError("edge_probability is defined for the erdos-renyi family")
        return self.c * math.log(self.n) / self.n

    def describe(self) -> str:
        parts = [f"family={self.family}", f"n={self.n}"]
        if self.family == RING:
            parts.append(f"k={self.k}")
        else:
            parts.append(f"c={self.c:g}")
        parts.append(f"weights={self.weight_lo}:{self.weight_hi}")
        parts.append(f"seed={self.seed}")
        return " ".join(parts)


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _draw_weights(rng: np.random.Generator, m: int, lo: int, hi: int) -> np.ndarray:
    return rng.integers(lo, hi + 1, size=m, dtype=np.int64).astype(np.float64)


def gen_ring_lattice(spec: GenSpec) -> Graph:
    """Ring lattice: vertex i joined to i+1 .. i+k/2 (mod n), n*k/2 edges."""
    if spec.family != RING:
        raise BadSpecError(f"gen_ring_lattice got family {spec.family!r}")
    n, half = spec.n, spec.k // 2
    u = np.repeat(np.arange(n, dtype=np.int64), half)
    v = (u + np.tile(np.arange(1, half + 1, dtype=np.int64), n)) % n
    w = _draw_weights(_rng(spec.seed), len(u), spec.weight_lo, spec.weight_hi)
    return graph_from_arrays(n, u, v, w)


def gen_erdos_renyi(spec: GenSpec) -> Graph:
    """G(n, p) with p = c*ln(n)/n, sampled by geometric skips over pairs."""
    if spec.family != ER:
        raise BadSpecError(f"gen_erdos_renyi got family {spec.family!r}")
    n = spec.n
    p = spec.edge_probability
    if not 0.0 < p < 1.0:
        raise DegenerateProbabilityError(p)
    rng = _rng(spec.seed)
    total = n * (n - 1) // 2
    parts = []
    pos = -1
    while True:
        expect = max(1024, int((total - 1 - pos) * p * 1.05) + 64)
        gaps = rng.geometric(p, size=expect)
        cand = pos + np.cumsum(gaps)
        inside = cand[cand < total]
        parts.append(inside)
        if inside.size < cand.size:
            break
        pos = int(cand[-1])
    idx = np.concatenate(parts)
    u, v = _pairs_from_linear(n, idx)
    w = _draw_weights(rng, len(idx), spec.weight_lo, spec.weight_hi)
    return graph_from_arrays(n, u, v, w)


def _pairs_from_linear(n: int, idx: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Invert the row-major enumeration of pairs (i, j), i < j.

    Pair (i, j) has linear index i*(2n-i-1)/2 + (j-i-1). The float
    solution for i can be off by one near row boundaries, so it is
    corrected with exact integer comparisons.
    """
    t = idx.astype(np.float64)
    b = 2 * n - 1
    i = np.floor((b - np.sqrt(b * b - 8.0 * t)) / 2.0).astype(np.int64)
    np.clip(i, 0, n - 2, out=i)
    offset = i * (2 * n - i - 1) // 2
    while True:
        too_high = offset > idx
        if not too_high.any():
            break
        i[too_high] -= 1
        offset = i * (2 * n - i - 1) // 2
    while True:
        too_low = idx >= offset + (n - 1 - i)
        if not too_low.any():
            break
        i[too_low] += 1
        offset = i * (2 * n - i - 1) // 2
    j = idx - offset + i + 1
    return i, j


def generate(spec: GenSpec) -> Graph:
    """Dispatch to the family's generator."""
    return gen_ring_lattice(spec) if spec.family == RING else gen_erdos_renyi(spec)
