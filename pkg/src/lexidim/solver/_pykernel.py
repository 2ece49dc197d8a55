"""Pure-Python multicover search kernels.

Sets are Python ints used as bitsets.  Both entry points take the
constraint masks, the multiplicity k, the vertex count n and a mask of
vertices already forced into the solution; they mirror ``_ckernel``
exactly and are used when the extension is missing or n > 64.
"""

from __future__ import annotations

import sys


def branch_and_bound(cons: list[int], k: int, n: int, forced: int, upper: int, upper_mask: int):
    """Minimum |S| with |S & c| >= k for every c, S a superset of ``forced``.

    ``upper``/``upper_mask`` is a known feasible solution; returns
    (value, mask, nodes) where mask is the first optimum met.
    """
    best = [upper, upper_mask]
    nodes = [0]

    def rec(S: int, X: int, size: int) -> None:
        nodes[0] += 1
        free = ~(S | X)
        maxdef = 0
        pick = 0
        pick_avail = 0
        used = 0
        packed = 0
        for c in cons:
            d = k - (c & S).bit_count()
            if d <= 0:
                continue
            avail = c & free
            a = avail.bit_count()
            if a < d:
                return
            if d > maxdef or (d == maxdef and a < pick_avail):
                maxdef, pick, pick_avail = d, avail, a
            if not avail & used:
                # deficits of constraints with disjoint free parts add up
                packed += d
                used |= avail
        if maxdef == 0:
            if size < best[0]:
                best[0], best[1] = size, S
            return
        if size + max(maxdef, packed) >= best[0]:
            return
        cand = pick
        while cand.bit_count() >= maxdef:
            low = cand & -cand
            rec(S | low, X, size + 1)
            if size + maxdef >= best[0]:
                return
            X |= low
            cand ^= low

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * n + 100))
    try:
        rec(forced, 0, forced.bit_count())
    finally:
        sys.setrecursionlimit(limit)
    return best[0], best[1], nodes[0]


def lex_solutions(cons: list[int], k: int, n: int, forced: int, target: int, limit: int) -> list[int]:
    """Feasible supersets of ``forced`` of size exactly ``target``, in
    lexicographic order of their sorted member tuples, at most ``limit``."""
    out: list[int] = []
    full = (1 << n) - 1

    def rec(i: int, S: int, size: int) -> bool:
        und = full & ~((1 << i) - 1) & ~S
        maxdef = 0
        used = 0
        packed = 0
        for c in cons:
            d = k - (c & S).bit_count()
            if d > 0:
                avail = c & und
                if avail.bit_count() < d:
                    return False
                if d > maxdef:
                    maxdef = d
                if not avail & used:
                    packed += d
                    used |= avail
        if size + max(maxdef, packed) > target:
            return False
        if maxdef == 0 and size == target:
            out.append(S)
            return len(out) >= limit
        if und.bit_count() < target - size:
            return False
        low = und & -und
        nxt = low.bit_length()
        if size < target and rec(nxt, S | low, size + 1):
            return True
        return rec(nxt, S, size)

    rec(0, forced, forced.bit_count())
    return out
