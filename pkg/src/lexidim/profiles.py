"""Distinctive vertex sets and the parameters D(G), C(G).

D(G) is the largest k for which a connected graph has a k-metric generator,
C(G) the analogue for k-adjacency generators.  Pairs are scanned with x < y
and ties resolve to the lexicographically first pair.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import LexidimError
from .graph import INF, DistanceMatrix, Graph, all_pairs_distances, bits, is_connected


@dataclass(frozen=True)
class PairProfile:
    pair: tuple[int, int]
    metric_distinctive: frozenset[int] | None
    adjacency_distinctive: frozenset[int]

    @property
    def metric_nontrivial(self):
        if self.metric_distinctive is None:
            return None
        return self.metric_distinctive - set(self.pair)

    @property
    def adjacency_nontrivial(self):
        return self.adjacency_distinctive - set(self.pair)


def _pair_check(g: Graph, x: int, y: int) -> None:
    if x == y:
        raise LexidimError("distinctive sets need two different vertices")
    g._check(x)
    g._check(y)


def _require_connected(g: Graph, m: DistanceMatrix) -> None:
    if (m.d == INF).any():
        raise LexidimError("metric distinctive sets need a connected graph")


def _row_to_mask(row: np.ndarray) -> int:
    return int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little")


def distinctive_mask(m: DistanceMatrix, x: int, y: int) -> int:
    return _row_to_mask(m.d[x] != m.d[y])


def adjacency_distinctive_mask(g: Graph, x: int, y: int) -> int:
    return (g.masks[x] ^ g.masks[y]) | (1 << x) | (1 << y)


def distinctive_set(g: Graph, m: DistanceMatrix, x: int, y: int) -> frozenset[int]:
    _pair_check(g, x, y)
    _require_connected(g, m)
    return frozenset(bits(distinctive_mask(m, x, y)))


def adjacency_distinctive_set(g: Graph, x: int, y: int) -> frozenset[int]:
    _pair_check(g, x, y)
    return frozenset(bits(adjacency_distinctive_mask(g, x, y)))


def pair_profile(g: Graph, x: int, y: int, m: DistanceMatrix | None = None) -> PairProfile:
    _pair_check(g, x, y)
    metric = None
    if is_connected(g):
        m = m or all_pairs_distances(g)
        metric = distinctive_set(g, m, x, y)
    return PairProfile((x, y), metric, adjacency_distinctive_set(g, x, y))


def metric_constraints(g: Graph, m: DistanceMatrix | None = None) -> list[tuple[tuple[int, int], int]]:
    """Every pair x < y with its metric distinctive set as a bitmask."""
    m = m or all_pairs_distances(g)
    _require_connected(g, m)
    d = m.d
    out = []
    for x in range(g.order - 1):
        neq = d[x + 1:] != d[x]
        packed = np.packbits(neq, axis=1, bitorder="little")
        for off, row in enumerate(packed):
            out.append(((x, x + 1 + off), int.from_bytes(row.tobytes(), "little")))
    return out


def adjacency_constraints(g: Graph) -> list[tuple[tuple[int, int], int]]:
    n = g.order
    return [((x, y), adjacency_distinctive_mask(g, x, y)) for x in range(n) for y in range(x + 1, n)]


def _minimum(constraints) -> tuple[int, tuple[int, int]]:
    best = None
    for pair, mask in constraints:
        size = mask.bit_count()
        if best is None or size < best[0]:
            best = (size, pair)
    return best


def _distinct_counts(d: np.ndarray) -> np.ndarray:
    n = d.shape[0]
    counts = np.empty((n, n), dtype=np.int64)
    step = max(1, 4_000_000 // max(1, n * n))
    for lo in range(0, n, step):
        counts[lo:lo + step] = (d[lo:lo + step, None, :] != d[None, :, :]).sum(axis=2)
    return counts


def global_D_pair(g: Graph, m: DistanceMatrix | None = None) -> tuple[int, tuple[int, int]]:
    if g.order < 2:
        raise LexidimError("D(G) needs at least two vertices")
    m = m or all_pairs_distances(g)
    _require_connected(g, m)
    counts = _distinct_counts(m.d)
    iu = np.triu_indices(g.order, 1)
    vals = counts[iu]
    i = int(np.argmin(vals))  # first minimum in row-major order is the lexicographic pair
    return int(vals[i]), (int(iu[0][i]), int(iu[1][i]))


def global_D(g: Graph, m: DistanceMatrix | None = None) -> int:
    return global_D_pair(g, m)[0]


def global_C_pair(g: Graph) -> tuple[int, tuple[int, int]]:
    if g.order < 2:
        raise LexidimError("C(G) needs at least two vertices")
    return _minimum(adjacency_constraints(g))


def global_C(g: Graph) -> int:
    return global_C_pair(g)[0]
