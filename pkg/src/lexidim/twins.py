"""Twin equivalence classes.

Two vertices u, v are related when N(u) - {v} == N(v) - {u}.  For a pair in
relation either the open neighbourhoods agree (false twins, never adjacent)
or the closed ones agree (true twins, always adjacent), so bucketing the
open rows and the closed rows separately recovers every class.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph

SINGLETON = "singleton"
FALSE_TWIN = "false_twin"
TRUE_TWIN = "true_twin"


@dataclass(frozen=True)
class TwinClass:
    members: tuple[int, ...]
    kind: str


@dataclass(frozen=True)
class TwinPartition:
    classes: tuple[TwinClass, ...]
    class_index: tuple[int, ...]

    def class_of(self, v: int) -> TwinClass:
        return self.classes[self.class_index[v]]

    def kind_of(self, v: int) -> str:
        return self.class_of(v).kind

    def of_kind(self, kind: str) -> list[TwinClass]:
        return [c for c in self.classes if c.kind == kind]

    def to_json(self) -> list[dict]:
        return [{"members": list(c.members), "kind": c.kind} for c in self.classes]


def twin_partition(g: Graph) -> TwinPartition:
    n = g.order
    open_rows: dict[int, list[int]] = {}
    closed_rows: dict[int, list[int]] = {}
    for v, m in enumerate(g.masks):
        open_rows.setdefault(m, []).append(v)
        closed_rows.setdefault(m | (1 << v), []).append(v)

    owner = [-1] * n
    groups: list[tuple[list[int], str]] = []
    for buckets, kind in ((open_rows, FALSE_TWIN), (closed_rows, TRUE_TWIN)):
        for members in buckets.values():
            if len(members) < 2:
                continue
            for v in members:
                # a vertex with both a false and a true twin would make R non-transitive
                assert owner[v] == -1, f"vertex {v} sits in two twin classes"
                owner[v] = len(groups)
            groups.append((members, kind))
    for v in range(n):
        if owner[v] == -1:
            owner[v] = len(groups)
            groups.append(([v], SINGLETON))

    order = sorted(range(len(groups)), key=lambda i: groups[i][0][0])
    remap = {old: new for new, old in enumerate(order)}
    classes = tuple(TwinClass(tuple(groups[i][0]), groups[i][1]) for i in order)
    return TwinPartition(classes, tuple(remap[owner[v]] for v in range(n)))


def are_twins(g: Graph, u: int, v: int) -> bool:
    """Direct test of N(u) - {v} == N(v) - {u}; used to cross-check the partition."""
    return (g.masks[u] & ~(1 << v)) == (g.masks[v] & ~(1 << u))


def twin_freeness_report(p: TwinPartition) -> dict:
    kinds = {c.kind for c in p.classes}
    return {
        "twins_free": kinds <= {SINGLETON},
        "true_twins_free": TRUE_TWIN not in kinds,
        "false_twins_free": FALSE_TWIN not in kinds,
    }


def has_twins(g: Graph) -> bool:
    return not twin_freeness_report(twin_partition(g))["twins_free"]


def composed_of_twins(g: Graph) -> bool:
    """Every vertex has a twin inside ``g``."""
    return all(c.kind != SINGLETON for c in twin_partition(g).classes)
