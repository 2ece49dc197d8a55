"""Exact k-metric and k-adjacency dimensions as set multicover.

S is a k-metric (k-adjacency) generator iff |S & D(x, y)| >= k
(|S & C(x, y)| >= k) for every pair x < y.  The minimum is found by
branch-and-bound seeded with a greedy cover; the reported witness is the
lexicographically smallest optimum.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from ..errors import KRangeError, LexidimError
from ..graph import Graph, all_pairs_distances, bits, is_connected
from ..profiles import adjacency_constraints, metric_constraints
from . import kernel

METRIC = "metric"
ADJACENCY = "adjacency"


@dataclass(frozen=True)
class MulticoverInstance:
    order: int
    pairs: tuple[tuple[int, int], ...]
    masks: tuple[int, ...]
    k: int
    mode: str

    @property
    def min_constraint_size(self) -> int:
        return min(m.bit_count() for m in self.masks)


@dataclass(frozen=True)
class DimensionResult:
    value: int
    witness: tuple[int, ...]
    method: str
    k: int
    mode: str
    stats: dict = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        return {"value": self.value, "witness": list(self.witness), "method": self.method,
                "k": self.k, "mode": self.mode}


def valid_k_limit(g: Graph, mode: str) -> int:
    """D(G) in metric mode, C(G) in adjacency mode."""
    inst = build_multicover_instance(g, 1, mode)
    return inst.min_constraint_size


def build_multicover_instance(g: Graph, k: int, mode: str, m=None) -> MulticoverInstance:
    if mode not in (METRIC, ADJACENCY):
        raise LexidimError(f"unknown mode {mode!r}")
    if g.order < 2:
        raise LexidimError("dimensions need a graph with at least two vertices")
    if mode == METRIC:
        if not is_connected(g):
            raise LexidimError("k-metric dimension needs a connected graph")
        cons = metric_constraints(g, m)
        what = "D(G)"
    else:
        cons = adjacency_constraints(g)
        what = "C(G)"
    high = min(c.bit_count() for _, c in cons)
    if not 1 <= k <= high:
        raise KRangeError(k, high, f"{what}={high}; the graph is {high}-{mode} dimensional")
    pairs, masks = zip(*cons)
    return MulticoverInstance(g.order, tuple(pairs), tuple(masks), k, mode)


def reduce_constraints(masks, k: int) -> tuple[int, list[int]]:
    """Forced vertices and the residual constraint list.

    A constraint with exactly k members forces all of them.  Duplicates and
    supersets of other constraints are dropped: they are implied.
    """
    forced = 0
    for c in masks:
        if c.bit_count() == k:
            forced |= c
    residual = sorted({c for c in masks if (c & forced).bit_count() < k}, key=lambda c: (c.bit_count(), c))
    kept: list[int] = []
    for c in residual:
        if not any(p & c == p for p in kept):
            kept.append(c)
    return forced, kept


def greedy_cover(cons, k: int, n: int, start: int = 0) -> int:
    S = start
    while True:
        score = [0] * n
        open_any = False
        for c in cons:
            d = k - (c & S).bit_count()
            if d <= 0:
                continue
            open_any = True
            for v in bits(c & ~S):
                score[v] += d
        if not open_any:
            return S
        best = max(range(n), key=lambda v: (score[v], -v))
        S |= 1 << best


def _solve(inst: MulticoverInstance, backend=None) -> tuple[int, int, dict]:
    n, k = inst.order, inst.k
    forced, cons = reduce_constraints(inst.masks, k)
    if not cons:
        return forced.bit_count(), forced, {"nodes": 0, "forced": forced.bit_count()}
    ub_mask = greedy_cover(cons, k, n, forced)
    ub = ub_mask.bit_count()
    value, _, nodes = kernel.branch_and_bound(cons, k, n, forced, ub, ub_mask, backend)
    witness = kernel.lex_solutions(cons, k, n, forced, value, 1, backend)
    assert witness, "lexicographic pass lost the optimum"
    return value, witness[0], {"nodes": nodes, "forced": forced.bit_count(), "greedy": ub}


def exact_min_multicover(inst: MulticoverInstance, backend=None) -> DimensionResult:
    value, mask, stats = _solve(inst, backend)
    witness = tuple(bits(mask))
    if not satisfies(inst, mask):
        raise AssertionError("solver produced a witness that does not cover every constraint")
    return DimensionResult(value, witness, "oracle", inst.k, inst.mode, stats)


def satisfies(inst: MulticoverInstance, mask: int) -> bool:
    return all((c & mask).bit_count() >= inst.k for c in inst.masks)


def dim_k(g: Graph, k: int, backend=None) -> DimensionResult:
    m = all_pairs_distances(g) if is_connected(g) else None
    res = exact_min_multicover(build_multicover_instance(g, k, METRIC, m), backend)
    if not is_generator(g, res.witness, k, METRIC):
        raise AssertionError("k-metric witness failed independent verification")
    return res


def adim_k(g: Graph, k: int, backend=None) -> DimensionResult:
    res = exact_min_multicover(build_multicover_instance(g, k, ADJACENCY), backend)
    if not is_generator(g, res.witness, k, ADJACENCY):
        raise AssertionError("k-adjacency witness failed independent verification")
    return res


@dataclass(frozen=True)
class GeneratorList:
    value: int
    sets: tuple[tuple[int, ...], ...]
    truncated: bool
    cap: int

    def to_json(self) -> dict:
        return {"value": self.value, "count": len(self.sets), "truncated": self.truncated,
                "cap": self.cap, "bases": [list(s) for s in self.sets]}


def enumerate_minimum_generators(inst: MulticoverInstance, cap: int = 10_000, backend=None) -> GeneratorList:
    """Every minimum-size solution in lexicographic order, up to ``cap``."""
    if cap < 1:
        raise LexidimError("cap must be positive")
    value, _, _ = _solve(inst, backend)
    forced, cons = reduce_constraints(inst.masks, inst.k)
    found = kernel.lex_solutions(cons, inst.k, inst.order, forced, value, cap + 1, backend)
    truncated = len(found) > cap
    sets = tuple(tuple(bits(m)) for m in found[:cap])
    return GeneratorList(value, sets, truncated, cap)


def enumerate_k_adjacency_bases(g: Graph, k: int, cap: int = 10_000, backend=None) -> GeneratorList:
    return enumerate_minimum_generators(build_multicover_instance(g, k, ADJACENCY), cap, backend)


def enumerate_k_metric_bases(g: Graph, k: int, cap: int = 10_000, backend=None) -> GeneratorList:
    return enumerate_minimum_generators(build_multicover_instance(g, k, METRIC), cap, backend)


# -- independent checks -------------------------------------------------------

def is_generator(g: Graph, S, k: int, mode: str) -> bool:
    """Check the defining condition directly from (truncated) distances."""
    S = sorted(S)
    if g.order < 2:
        return True
    d = all_pairs_distances(g).d
    if mode == ADJACENCY:
        d = np.minimum(d, 2)
    if not S:
        return k <= 0
    sub = d[:, S]
    counts = (sub[:, None, :] != sub[None, :, :]).sum(axis=2)
    iu = np.triu_indices(g.order, 1)
    return bool((counts[iu] >= k).all())


def naive_min_multicover(inst: MulticoverInstance) -> tuple[int, tuple[int, ...]]:
    """Smallest feasible subset by plain enumeration in increasing size.

    ``itertools.combinations`` yields subsets in lexicographic order, so the
    first hit is also the lexicographically smallest optimum.
    """
    for size in range(inst.order + 1):
        for combo in itertools.combinations(range(inst.order), size):
            mask = sum(1 << v for v in combo)
            if satisfies(inst, mask):
                return size, combo
    raise LexidimError("instance is infeasible")
