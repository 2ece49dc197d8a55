import itertools

from hypothesis import given, settings

from corpus import atlas
from lexidim.graph import complete, complete_bipartite, cycle, empty, join, path
from lexidim.twins import (
    FALSE_TWIN,
    SINGLETON,
    TRUE_TWIN,
    are_twins,
    composed_of_twins,
    has_twins,
    twin_freeness_report,
    twin_partition,
)
from strategies import graphs


def _classes(g):
    return [(c.members, c.kind) for c in twin_partition(g).classes]


def test_examples():
    assert _classes(path(4)) == [((0,), SINGLETON), ((1,), SINGLETON), ((2,), SINGLETON), ((3,), SINGLETON)]
    assert _classes(complete(3)) == [((0, 1, 2), TRUE_TWIN)]
    assert _classes(empty(3)) == [((0, 1, 2), FALSE_TWIN)]
    assert _classes(complete_bipartite(2, 3)) == [((0, 1), FALSE_TWIN), ((2, 3, 4), FALSE_TWIN)]
    # the star centre is a singleton, the leaves are false twins
    assert _classes(complete_bipartite(1, 3)) == [((0,), SINGLETON), ((1, 2, 3), FALSE_TWIN)]
    assert _classes(path(3)) == [((0, 2), FALSE_TWIN), ((1,), SINGLETON)]
    assert _classes(complete(2)) == [((0, 1), TRUE_TWIN)]


def test_reports():
    assert twin_freeness_report(twin_partition(cycle(5))) == {
        "twins_free": True, "true_twins_free": True, "false_twins_free": True}
    assert twin_freeness_report(twin_partition(path(3)))["true_twins_free"]
    assert not twin_freeness_report(twin_partition(path(3)))["false_twins_free"]
    assert not has_twins(path(5)) and has_twins(join(complete(1), empty(2)))
    assert composed_of_twins(complete_bipartite(2, 2)) and not composed_of_twins(path(3))


def _check_partition(g):
    p = twin_partition(g)
    seen = sorted(v for c in p.classes for v in c.members)
    assert seen == list(range(g.order))
    for u, v in itertools.combinations(range(g.order), 2):
        same = p.class_index[u] == p.class_index[v]
        assert same == are_twins(g, u, v)
        if same:
            kind = p.kind_of(u)
            assert kind == (TRUE_TWIN if g.adjacent(u, v) else FALSE_TWIN)
    for c in p.classes:
        assert (len(c.members) == 1) == (c.kind == SINGLETON)
        assert list(c.members) == sorted(c.members)
    mins = [c.members[0] for c in p.classes]
    assert mins == sorted(mins)


def test_atlas_partition_is_the_relation():
    for g in atlas(1, 6):
        _check_partition(g)


@settings(max_examples=200, deadline=None)
@given(graphs(max_order=10))
def test_partition_property(g):
    _check_partition(g)
