"""Lexicographic product of a base graph with a per-vertex family.

Vertex (i, v) of the product sits in block i at flat index offset[i] + v.
(i, v) ~ (j, w) iff i ~ j in the base, or i == j and v ~ w in H_i.

The dimensional k of the product is computed from the base's twin classes
and degree extremes of the members, without building the product.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .errors import LexidimError
from .graph import DistanceMatrix, Graph, bfs_layers, complement, is_connected, parse_graph_spec
from .profiles import global_C_pair
from .twins import FALSE_TWIN, SINGLETON, TRUE_TWIN, TwinPartition, has_twins, twin_partition


@dataclass(frozen=True)
class GraphFamily:
    members: tuple[Graph, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))

    @classmethod
    def uniform(cls, h: Graph, n: int) -> GraphFamily:
        return cls((h,) * n)

    def __len__(self):
        return len(self.members)

    def __getitem__(self, i):
        return self.members[i]

    def __iter__(self):
        return iter(self.members)

    def complemented(self) -> GraphFamily:
        return GraphFamily(tuple(complement(h) for h in self.members))

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(h.order for h in self.members)


def as_family(fam) -> GraphFamily:
    return fam if isinstance(fam, GraphFamily) else GraphFamily(tuple(fam))


def parse_members(text: str, base_order: int) -> GraphFamily:
    """Semicolon-separated member specs; a single spec expands to every base vertex."""
    parts = [p for p in (s.strip() for s in text.split(";")) if p]
    if not parts:
        raise LexidimError("empty member list")
    members = [parse_graph_spec(p) for p in parts]
    if len(members) == 1 and base_order > 1:
        return GraphFamily.uniform(members[0], base_order)
    return GraphFamily(tuple(members))


def parse_product_spec(text: str) -> tuple[Graph, GraphFamily]:
    """``"<base> | <m1>; <m2>; ..."`` -> (base, family)."""
    if "|" not in text:
        raise LexidimError(f"product spec {text!r} needs '<base> | <members>'")
    base_text, members_text = text.split("|", 1)
    g = parse_graph_spec(base_text)
    return g, parse_members(members_text, g.order)


@dataclass(frozen=True)
class LexiProduct:
    flat: Graph
    base: Graph
    family: GraphFamily
    offsets: tuple[int, ...]
    origin_of: tuple[tuple[int, int], ...]

    @property
    def base_order(self) -> int:
        return self.base.order

    @property
    def member_orders(self) -> tuple[int, ...]:
        return self.family.orders

    def index_of(self, i: int, v: int) -> int:
        if not (0 <= i < self.base.order and 0 <= v < self.family[i].order):
            raise LexidimError(f"({i}, {v}) is not a vertex of the product")
        return self.offsets[i] + v

    def block(self, i: int) -> range:
        return range(self.offsets[i], self.offsets[i] + self.family[i].order)


def _check_family(g: Graph, fam: GraphFamily) -> None:
    if len(fam) != g.order:
        raise LexidimError(f"family has {len(fam)} members but the base graph has order {g.order}")


def _check_dimensional(g: Graph, fam: GraphFamily) -> None:
    _check_family(g, fam)
    if g.order < 2:
        raise LexidimError("dimensional analysis needs a base graph of order at least 2")
    for i, h in enumerate(fam):
        if h.order < 2:
            raise LexidimError(f"family member {i} is trivial (order {h.order}); members need order >= 2")
    if not is_connected(g):
        raise LexidimError("the base graph must be connected")


def build_product(g: Graph, fam, *, dimensional: bool = False) -> LexiProduct:
    fam = as_family(fam)
    if dimensional:
        _check_dimensional(g, fam)
    else:
        _check_family(g, fam)
    offsets = []
    total = 0
    for h in fam:
        offsets.append(total)
        total += h.order
    blocks = [((1 << h.order) - 1) << off for h, off in zip(fam, offsets)]
    masks = []
    origin = []
    for i, (h, off) in enumerate(zip(fam, offsets)):
        outer = 0
        for j in g.adjacency[i]:
            outer |= blocks[j]
        for v, m in enumerate(h.masks):
            masks.append((m << off) | outer)
            origin.append((i, v))
    return LexiProduct(Graph.from_masks(masks), g, fam, tuple(offsets), tuple(origin))


def product_distance(lp: LexiProduct, gdist: DistanceMatrix, a: tuple[int, int], b: tuple[int, int]) -> int:
    (i, v), (j, w) = a, b
    lp.index_of(i, v)
    lp.index_of(j, w)
    if a == b:
        return 0
    if i != j:
        return gdist[i, j]
    h = lp.family[i]
    if lp.base.degrees[i] == 0:
        # no neighbouring block to route through
        return bfs_layers(h, v)[w]
    return 1 if h.adjacent(v, w) else 2


# -- dimensional k ------------------------------------------------------------

def _two_smallest_sum(values: Sequence[int]) -> int:
    a, b = sorted(values)[:2]
    return a + b


def local_T(g: Graph, fam, p: TwinPartition, i: int) -> int:
    fam = as_family(fam)
    _check_family(g, fam)
    for h in fam:
        if h.order < 2:
            raise LexidimError("T(u, H) needs non-trivial family members")
    cls = p.class_of(i)
    if cls.kind == SINGLETON:
        return fam[i].order
    if cls.kind == FALSE_TWIN:
        return _two_smallest_sum([fam[j].min_degree for j in cls.members]) + 2
    return _two_smallest_sum([fam[j].order - fam[j].max_degree for j in cls.members])


def global_T(g: Graph, fam, p: TwinPartition | None = None) -> tuple[int, int]:
    """(T(G o H), lowest base vertex attaining it)."""
    fam = as_family(fam)
    p = p or twin_partition(g)
    best = None
    for c in p.classes:
        val = local_T(g, fam, p, c.members[0])
        for v in c.members:
            if best is None or (val, v) < best:
                best = (val, v)
    return best


@dataclass(frozen=True)
class DimensionalK:
    k: int
    T: int
    C_fam: int
    T_vertex: int
    C_member: int
    C_pair: tuple[int, int]

    def to_json(self) -> dict:
        return {"k": self.k, "T": self.T, "C_fam": self.C_fam, "T_vertex": self.T_vertex,
                "C_member": self.C_member, "C_pair": list(self.C_pair)}


def family_C(fam) -> tuple[int, int, tuple[int, int]]:
    """(C(H), lowest member index attaining it, its pair)."""
    cache: dict[tuple, tuple[int, tuple[int, int]]] = {}
    best = None
    for idx, h in enumerate(as_family(fam)):
        key = h.adjacency
        if key not in cache:
            cache[key] = global_C_pair(h)
        val, pair = cache[key]
        if best is None or val < best[0]:
            best = (val, idx, pair)
    return best


def dimensional_k(g: Graph, fam) -> DimensionalK:
    fam = as_family(fam)
    _check_dimensional(g, fam)
    t, tv = global_T(g, fam)
    c, ci, cp = family_C(fam)
    return DimensionalK(min(t, c), t, c, tv, ci, cp)


def k_is_two_conditions(g: Graph, fam) -> bool:
    """Whether some member has twins, or some twin pair of the base carries
    members both with a universal vertex (true twins) or both with an
    isolated vertex (false twins)."""
    fam = as_family(fam)
    if any(has_twins(h) for h in fam):
        return True
    p = twin_partition(g)
    for c in p.classes:
        if c.kind == TRUE_TWIN:
            hits = sum(fam[j].max_degree == fam[j].order - 1 for j in c.members)
        elif c.kind == FALSE_TWIN:
            hits = sum(fam[j].min_degree == 0 for j in c.members)
        else:
            continue
        if hits >= 2:
            return True
    return False
