"""Closed formulae and structural checks for lexicographic products.

Everything here is meant to be cross-checked against the exact solver:
the closed forms for paths and cycles, the four basis-selection properties
on twin classes of the base, their sufficient conditions, the
dim_2 = order characterisation and the join-with-apex relation.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from math import ceil, floor

from .errors import CapExceeded, HypothesisError, KRangeError, LexidimError
from .graph import (
    Graph,
    bits,
    complement,
    complete,
    connectivity_report,
    cycle,
    is_connected,
    is_cycle_graph,
    is_path_graph,
    join,
    path,
)
from .profiles import global_C
from .lexi import GraphFamily, as_family, build_product, dimensional_k
from .solver import (
    adim_k,
    dim_k,
    enumerate_k_adjacency_bases,
    enumerate_k_metric_bases,
)
from .twins import FALSE_TWIN, SINGLETON, TRUE_TWIN, twin_freeness_report, twin_partition

PROPERTIES = ("P1", "P2", "P3", "P4")
DEFAULT_CAP = 10_000


# -- closed forms -------------------------------------------------------------

def formula_adim(kind: str, n: int, k: int) -> int:
    """k-adjacency dimension of P_n or C_n (and of their complements)."""
    if kind == "path":
        if n < 4 or k not in (2, 3):
            raise HypothesisError(f"path formula needs n >= 4 and k in {{2, 3}}, got n={n}, k={k}")
        return ceil((n + 1) / 2) if k == 2 else n - floor((n - 4) / 5)
    if kind == "cycle":
        if n < 5 or k not in (2, 3, 4):
            raise HypothesisError(f"cycle formula needs n >= 5 and k in {{2, 3, 4}}, got n={n}, k={k}")
        return {2: ceil(n / 2), 3: n - floor(n / 5), 4: n}[k]
    raise HypothesisError(f"no closed formula for {kind!r}")


def family_graphs(spec: Sequence[tuple[str, int]]) -> GraphFamily:
    make = {"path": path, "cycle": cycle}
    try:
        return GraphFamily(tuple(make[kind](q) for kind, q in spec))
    except KeyError as exc:
        raise HypothesisError(f"family members must be paths or cycles, got {exc.args[0]!r}") from None


def classify_path_cycle(h: Graph) -> tuple[str, int]:
    if is_cycle_graph(h):
        return "cycle", h.order
    if h.order >= 2 and is_path_graph(h):
        return "path", h.order
    raise HypothesisError("family member is neither a path nor a cycle")


def formula_dim_lexi(g: Graph, spec: Sequence[tuple[str, int]], k: int, complemented: bool = False) -> int:
    """Sum of the member closed forms, refusing every case outside the
    hypotheses under which that sum equals dim_k of the product."""
    spec = list(spec)
    if not is_connected(g):
        raise HypothesisError("base graph must be connected")
    if g.order < 2 or g.order != len(spec):
        raise HypothesisError(f"need base order >= 2 equal to family length (got {g.order} and {len(spec)})")
    for kind, q in spec:
        if kind == "path" and q < 4:
            raise HypothesisError(f"paths need order >= 4, got P_{q}")
        if kind == "cycle" and q < 5:
            raise HypothesisError(f"cycles need order >= 5, got C_{q}")
        if kind not in ("path", "cycle"):
            raise HypothesisError(f"family members must be paths or cycles, got {kind!r}")
    if k not in (2, 3, 4):
        raise HypothesisError(f"closed forms exist for k in {{2, 3, 4}}, got k={k}")
    if k == 4 and any(kind != "cycle" for kind, _ in spec):
        raise HypothesisError("k=4 needs a family made only of cycles")
    if complemented and k in (2, 3) and not twin_freeness_report(twin_partition(g))["true_twins_free"]:
        raise HypothesisError("the complemented family needs a true twins free base for k in {2, 3}")
    fam = family_graphs(spec)
    if complemented:
        fam = fam.complemented()
    dk = dimensional_k(g, fam)
    if k > dk.k:
        raise KRangeError(k, dk.k, f"the product is {dk.k}-metric dimensional")
    return sum(formula_adim(kind, q, k) for kind, q in spec)


# -- properties P1..P4 ----------------------------------------------------------

def _region(h: Graph, x: int, which: str) -> int:
    """The vertex set the property intersects a basis with, as a mask."""
    if which in ("P1", "P4"):
        return h.full_mask & ~h.masks[x]
    if which == "P2":
        return h.masks[x] | (1 << x)
    return h.masks[x]


def _class_kind(which: str) -> str:
    return TRUE_TWIN if which in ("P1", "P3") else FALSE_TWIN


def basis_profile(h: Graph, basis, which: str) -> tuple[int, int]:
    """(min over x of |A & region(x)|, lowest x attaining it)."""
    a = sum(1 << v for v in basis)
    return min(((a & _region(h, x, which)).bit_count(), x) for x in range(h.order))


@dataclass
class PropertyReport:
    property: str
    k: int
    holds: bool | None
    witness: dict = field(default_factory=dict)
    counterexample: dict | None = None
    inconclusive_reason: str | None = None

    @property
    def inconclusive(self) -> bool:
        return self.holds is None

    def to_json(self) -> dict:
        return {
            "property": self.property,
            "k": self.k,
            "holds": self.holds,
            "witness": {str(c): {str(j): list(b) for j, b in sel.items()} for c, sel in self.witness.items()},
            "counterexample": self.counterexample,
            "inconclusive_reason": self.inconclusive_reason,
        }


def _validate_k(g: Graph, fam, k: int, strict: bool):
    dk = dimensional_k(g, fam)
    high = dk.k if strict else dk.C_fam
    if not 1 <= k <= high:
        raise KRangeError(k, high, f"T={dk.T}, C(H)={dk.C_fam}")
    return dk


def check_property(g: Graph, fam, k: int, which: str, cap: int = DEFAULT_CAP,
                   strict_range: bool = True) -> PropertyReport:
    """Decide P1..P4 for (g, fam, k).

    For two members j != l of a twin class the inequality splits into
    profile(A_j) + profile(A_l) >= k, where a basis profile is its worst
    intersection with the property's region over the member's vertices.
    Choosing the best-profile basis per member therefore decides the whole
    class at once.  ``strict_range=False`` only requires k <= C(H).
    """
    if which not in PROPERTIES:
        raise LexidimError(f"unknown property {which!r}; choose from {', '.join(PROPERTIES)}")
    fam = as_family(fam)
    _validate_k(g, fam, k, strict_range)
    p = twin_partition(g)
    cache: dict = {}
    report = PropertyReport(which, k, True)
    inconclusive = []

    for ci, cls in enumerate(p.classes):
        if cls.kind != _class_kind(which) or len(cls.members) < 2:
            continue
        best = {}
        truncated = False
        for j in cls.members:
            h = fam[j]
            key = (h.adjacency, which)
            if key not in cache:
                bases = enumerate_k_adjacency_bases(h, k, cap)
                profiles = [basis_profile(h, b, which)[0] for b in bases.sets]
                top = max(profiles)
                cache[key] = (top, bases.sets[profiles.index(top)], bases.truncated)
            prof, basis, trunc = cache[key]
            best[j] = (prof, basis)
            truncated |= trunc
        ranked = sorted(cls.members, key=lambda j: (best[j][0], j))
        j, l = ranked[0], ranked[1]
        if best[j][0] + best[l][0] >= k:
            report.witness[ci] = {m: best[m][1] for m in cls.members}
            continue
        if truncated:
            inconclusive.append(ci)
            continue
        x = basis_profile(fam[j], best[j][1], which)[1]
        y = basis_profile(fam[l], best[l][1], which)[1]
        report.holds = False
        report.witness = {}
        report.counterexample = {
            "class": list(cls.members),
            "members": [j, l],
            "vertices": [x, y],
            "best_profiles": [best[j][0], best[l][0]],
        }
        return report
    if inconclusive:
        report.holds = None
        report.witness = {}
        report.inconclusive_reason = f"basis enumeration exceeded cap={cap} in classes {inconclusive}"
    return report


def verify_property_selection(g: Graph, fam, k: int, which: str, selection: dict[int, Sequence[int]]) -> bool:
    """Brute-force check of the quantified inequality for a chosen basis per
    base vertex, over every relevant class, cross pair and vertex pair."""
    fam = as_family(fam)
    p = twin_partition(g)
    for cls in p.classes:
        if cls.kind != _class_kind(which) or len(cls.members) < 2:
            continue
        for j in cls.members:
            for l in cls.members:
                if j == l:
                    continue
                hj, hl = fam[j], fam[l]
                aj = set(selection[j])
                al = set(selection[l])
                for x in range(hj.order):
                    rx = aj & set(bits(_region(hj, x, which)))
                    for y in range(hl.order):
                        ry = al & set(bits(_region(hl, y, which)))
                        # different copies, so the union is disjoint
                        if len(rx) + len(ry) < k:
                            return False
    return True


# -- sufficient conditions -------------------------------------------------------

def sufficient_conditions(g: Graph, fam, k: int) -> dict:
    fam = as_family(fam)
    _validate_k(g, fam, k, True)
    half_up, half_down = ceil(k / 2), floor(k / 2)
    reasons = {}
    adims = {}
    for h in fam:
        if h.adjacency not in adims:
            adims[h.adjacency] = adim_k(h, k).value

    delta_true = all(adims[h.adjacency] - h.max_degree >= half_up for h in fam)
    if not delta_true:
        reasons["delta_true"] = f"some member has adim_k - max degree < {half_up}"

    if any(h.min_degree == 0 for h in fam):
        delta_false = False
        reasons["delta_false"] = "a member has an isolated vertex"
    else:
        delta_false = all(h.max_degree - 1 <= half_down for h in fam)
        if not delta_false:
            reasons["delta_false"] = f"some member has max degree - 1 > {half_down}"

    diam_ok = True
    for h in fam:
        rep = connectivity_report(h)
        if not rep["connected"] or rep["diameter"] < 6:
            diam_ok = False
            reasons["diameter6"] = "some member is disconnected or has diameter < 6"
            break
    return {"delta_true": delta_true, "delta_false": delta_false, "diameter6": diam_ok, "reasons": reasons}


# -- dim_2 equal to the order -------------------------------------------------------

def _remark_member_ok(g: Graph, fam: GraphFamily, p, i: int) -> bool:
    h = fam[i]
    hp = twin_partition(h)
    lonely = [v for v in range(h.order) if hp.kind_of(v) == SINGLETON]
    if not lonely:
        return True
    cls = p.class_of(i)
    if cls.kind == SINGLETON or len(lonely) != 1:
        return False
    v = lonely[0]
    others = [j for j in cls.members if j != i]
    if cls.kind == TRUE_TWIN:
        return h.degrees[v] == h.order - 1 and any(fam[j].max_degree == fam[j].order - 1 for j in others)
    return h.degrees[v] == 0 and any(fam[j].min_degree == 0 for j in others)


def predict_dim2_full(g: Graph, fam) -> bool:
    fam = as_family(fam)
    p = twin_partition(g)
    return all(_remark_member_ok(g, fam, p, i) for i in range(g.order))


def check_remark_dim2_full(g: Graph, fam, max_order: int = 24) -> dict:
    fam = as_family(fam)
    lp = build_product(g, fam, dimensional=True)
    if lp.flat.order > max_order:
        raise CapExceeded(f"product has {lp.flat.order} vertices, above the oracle cap {max_order}")
    res = dim_k(lp.flat, 2)
    return {
        "predicted_full": predict_dim2_full(g, fam),
        "oracle_full": res.value == lp.flat.order,
        "dim2": res.value,
        "order": lp.flat.order,
    }


# -- join with an apex -----------------------------------------------------------------

def verify_join_lemma(h: Graph, k: int, cap: int = DEFAULT_CAP) -> dict:
    rep = connectivity_report(h)
    if not rep["connected"]:
        raise HypothesisError("h must be connected")
    long_diameter = rep["diameter"] >= 6
    if not (long_diameter or (is_cycle_graph(h) and h.order >= 7) or (is_path_graph(h) and h.order >= 6)):
        raise HypothesisError("h needs diameter >= 6, or to be a cycle of order >= 7 or a path of order >= 6")
    c = global_C(h)
    if not 1 <= k <= c:
        raise KRangeError(k, c, f"C(h)={c}")
    joined = join(complete(1), h)
    bases = enumerate_k_metric_bases(joined, k, cap)
    if bases.truncated:
        raise CapExceeded(f"more than {cap} minimum k-metric bases of the join")
    return {
        "dim_join": bases.value,
        "adim_h": adim_k(h, k).value,
        "adim_complement": adim_k(complement(h), k).value,
        "apex_excluded": all(0 not in b for b in bases.sets),
        "equality_claimed": long_diameter,
        "bases_examined": len(bases.sets),
    }
