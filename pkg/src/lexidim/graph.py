"""Simple undirected graphs on dense vertex indices, plus distances and
the handful of constructions the rest of the package is built on.

Adjacency is stored twice: as sorted tuples (for iteration and I/O) and as
Python-int bitmasks (for the set algebra used by twins, profiles and the
solver).
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np

from .errors import GraphSpecError

INF = np.iinfo(np.int32).max


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    order: int
    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None
    masks: tuple[int, ...] = field(init=False, repr=False, compare=False)
    degrees: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.order < 1:
            raise GraphSpecError("a graph needs at least one vertex")
        if len(self.adjacency) != self.order:
            raise GraphSpecError("adjacency length does not match order")
        masks = []
        for u, row in enumerate(self.adjacency):
            m = to_mask(row)
            if m >> u & 1:
                raise GraphSpecError(f"self-loop at vertex {u}")
            masks.append(m)
        for u, m in enumerate(masks):
            for v in bits(m):
                if not masks[v] >> u & 1:
                    raise GraphSpecError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(self, "masks", tuple(masks))
        object.__setattr__(self, "degrees", tuple(len(r) for r in self.adjacency))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> Graph:
        """Build a graph, rejecting loops, duplicates and out-of-range ends."""
        if n < 1:
            raise GraphSpecError("a graph needs at least one vertex")
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphSpecError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphSpecError(f"self-loop at vertex {u}")
            if v in rows[u]:
                raise GraphSpecError(f"duplicate edge ({u}, {v})")
            rows[u].add(v)
            rows[v].add(u)
        return cls(n, tuple(tuple(sorted(r)) for r in rows), labels)

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> Graph:
        return cls(len(masks), tuple(tuple(bits(m)) for m in masks))

    def neighbors(self, x: int) -> tuple[int, ...]:
        self._check(x)
        return self.adjacency[x]

    def adjacent(self, x: int, y: int) -> bool:
        return bool(self.masks[x] >> y & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in self.adjacency[u] if u < v]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    @property
    def min_degree(self) -> int:
        return min(self.degrees)

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def _check(self, x: int) -> None:
        if not 0 <= x < self.order:
            raise IndexError(f"vertex {x} out of range 0..{self.order - 1}")

    def to_edge_list(self) -> str:
        es = self.edges()
        return "\n".join([f"{self.order} {len(es)}"] + [f"{u} {v}" for u, v in es]) + "\n"


def open_neighborhood(g: Graph, x: int) -> frozenset[int]:
    return frozenset(g.neighbors(x))


def closed_neighborhood(g: Graph, x: int) -> frozenset[int]:
    return frozenset(g.neighbors(x)) | {x}


# -- generators -------------------------------------------------------------

def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphSpecError(f"cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(r: int, s: int) -> Graph:
    if r < 1 or s < 1:
        raise GraphSpecError("complete_bipartite needs both sides non-empty")
    return Graph.from_edges(r + s, [(i, r + j) for i in range(r) for j in range(s)])


def empty(n: int) -> Graph:
    return Graph.from_edges(n, [])


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph.from_masks([full & ~m & ~(1 << u) for u, m in enumerate(g.masks)])


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus every edge between them.

    ``g`` keeps indices ``0..|g|-1``; ``h`` is shifted up by ``|g|``.
    """
    n = g.order
    gm = g.full_mask
    hm = h.full_mask << n
    masks = [m | hm for m in g.masks] + [(m << n) | gm for m in h.masks]
    return Graph.from_masks(masks)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.order
    return Graph.from_masks(list(g.masks) + [m << n for m in h.masks])


# -- distances --------------------------------------------------------------

@dataclass(frozen=True)
class DistanceMatrix:
    """Hop counts; unreachable pairs hold ``INF``."""

    d: np.ndarray

    def __getitem__(self, xy: tuple[int, int]) -> int:
        return int(self.d[xy])

    @property
    def order(self) -> int:
        return self.d.shape[0]

    def truncated(self) -> np.ndarray:
        return np.minimum(self.d, 2)


def bfs_layers(g: Graph, source: int) -> list[int]:
    """Distances from ``source`` using frontier bitmasks; INF if unreachable."""
    dist = [INF] * g.order
    seen = 1 << source
    frontier = seen
    level = 0
    masks = g.masks
    while frontier:
        nxt = 0
        for v in bits(frontier):
            dist[v] = level
            nxt |= masks[v]
        frontier = nxt & ~seen
        seen |= frontier
        level += 1
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    d = np.array([bfs_layers(g, s) for s in range(g.order)], dtype=np.int32)
    d.setflags(write=False)
    return DistanceMatrix(d)


def truncated_distance(m: DistanceMatrix, x: int, y: int) -> int:
    return min(m[x, y], 2)


def is_connected(g: Graph) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.masks[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == g.full_mask


def connectivity_report(g: Graph) -> dict:
    if not is_connected(g):
        return {"connected": False, "diameter": None}
    m = all_pairs_distances(g)
    return {"connected": True, "diameter": int(m.d.max())}


def diameter(g: Graph) -> int | None:
    return connectivity_report(g)["diameter"]


def is_path_graph(g: Graph) -> bool:
    if g.order == 1:
        return True
    degs = sorted(g.degrees)
    return (is_connected(g) and g.edge_count == g.order - 1
            and degs[:2] == [1, 1] and all(d == 2 for d in degs[2:]))


def is_cycle_graph(g: Graph) -> bool:
    return g.order >= 3 and is_connected(g) and all(d == 2 for d in g.degrees)


# -- parsing ----------------------------------------------------------------

_ALIASES = {
    "path": "path", "P": "path",
    "cycle": "cycle", "C": "cycle",
    "complete": "complete", "K": "complete",
    "complete_bipartite": "complete_bipartite",
    "empty": "empty", "N": "empty",
}

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]+)|(.))")


def _tokenize(text: str) -> list[str]:
    toks = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        tok = m.group(1) or m.group(2) or m.group(3)
        if tok is None:
            break
        toks.append(tok)
        pos = m.end()
    return toks


class _SpecParser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            want = f"'{expected}'" if expected else "more input"
            raise GraphSpecError(f"malformed graph spec {self.text!r}: expected {want}, got {tok!r}")
        self.i += 1
        return tok

    def integer(self) -> int:
        tok = self.take()
        if not tok.isdigit():
            raise GraphSpecError(f"malformed graph spec {self.text!r}: expected an integer, got {tok!r}")
        return int(tok)

    def spec(self) -> Graph:
        name = self.take()
        if name in ("complement", "join"):
            self.take("(")
            first = self.spec()
            if name == "complement":
                self.take(")")
                return complement(first)
            self.take(",")
            second = self.spec()
            self.take(")")
            return join(first, second)
        if name not in _ALIASES:
            raise GraphSpecError(f"unknown generator {name!r} in {self.text!r}")
        kind = _ALIASES[name]
        self.take(":")
        a = self.integer()
        b = None
        if self.peek() == "," and self.i + 1 < len(self.toks) and self.toks[self.i + 1].isdigit():
            self.take(",")
            b = self.integer()
        if kind == "complete_bipartite" or (kind == "complete" and b is not None):
            if b is None:
                raise GraphSpecError(f"complete_bipartite needs two sizes in {self.text!r}")
            return complete_bipartite(a, b)
        if b is not None:
            raise GraphSpecError(f"{name} takes one size in {self.text!r}")
        if a < 1:
            raise GraphSpecError(f"graph order must be at least 1 in {self.text!r}")
        return {"path": path, "cycle": cycle, "complete": complete, "empty": empty}[kind](a)

    def parse(self) -> Graph:
        g = self.spec()
        if self.peek() is not None:
            raise GraphSpecError(f"trailing input {self.peek()!r} in graph spec {self.text!r}")
        return g


def parse_edge_list(text: str) -> Graph:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphSpecError("empty edge list")
    head = lines[0].split()
    if len(head) != 2 or not all(t.isdigit() for t in head):
        raise GraphSpecError(f"malformed edge-list header {lines[0]!r}; expected 'n m'")
    n, m = int(head[0]), int(head[1])
    if n < 1:
        raise GraphSpecError("edge list declares n < 1")
    body = lines[1:]
    if len(body) != m:
        raise GraphSpecError(f"header announces {m} edges but {len(body)} edge lines follow")
    edges = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            raise GraphSpecError(f"malformed edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph.from_edges(n, edges)


def parse_graph_spec(text: str) -> Graph:
    """Parse an edge-list document or a generator expression."""
    stripped = text.strip()
    if not stripped:
        raise GraphSpecError("empty graph spec")
    if stripped[0].isdigit():
        return parse_edge_list(stripped)
    return _SpecParser(stripped).parse()
