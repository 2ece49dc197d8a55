import itertools

import pytest
from hypothesis import given, settings, strategies as st

from corpus import atlas
from lexidim.errors import KRangeError, LexidimError
from lexidim.graph import complement, complete, complete_bipartite, cycle, empty, is_connected, path
from lexidim.lexi import build_product
from lexidim.solver import (
    ADJACENCY,
    METRIC,
    adim_k,
    build_multicover_instance,
    dim_k,
    enumerate_k_adjacency_bases,
    enumerate_k_metric_bases,
    greedy_cover,
    is_generator,
    naive_min_multicover,
    reduce_constraints,
    valid_k_limit,
)
from strategies import graphs


@pytest.mark.parametrize("g, k, mode, value, witness", [
    (path(4), 1, METRIC, 1, (0,)),
    (path(4), 2, METRIC, 2, (0, 3)),
    (path(4), 2, ADJACENCY, 3, (0, 1, 2)),
    (path(4), 3, ADJACENCY, 4, (0, 1, 2, 3)),
    (cycle(5), 2, ADJACENCY, 3, None),
    (cycle(5), 4, ADJACENCY, 5, (0, 1, 2, 3, 4)),
    (complete(3), 2, ADJACENCY, 3, (0, 1, 2)),
    (complete(4), 1, METRIC, 3, (0, 1, 2)),
    (complete_bipartite(2, 3), 1, METRIC, 3, (0, 2, 3)),
])
def test_examples(g, k, mode, value, witness):
    res = (dim_k if mode == METRIC else adim_k)(g, k)
    assert res.value == value
    if witness is not None:
        assert res.witness == witness
    assert is_generator(g, res.witness, k, mode)


def test_product_examples():
    from lexidim.lexi import GraphFamily
    lp = build_product(path(3), GraphFamily((path(4), path(5), cycle(5))))
    assert dim_k(lp.flat, 2).value == 9
    assert dim_k(lp.flat, 3).value == 13
    lp = build_product(complete(2), [cycle(5), cycle(5)])
    assert dim_k(lp.flat, 4).value == 10


def test_range_errors():
    with pytest.raises(KRangeError) as exc:
        dim_k(path(4), 4)
    assert exc.value.to_json()["valid_range"] == [1, 3]
    with pytest.raises(KRangeError):
        adim_k(path(4), 0)
    with pytest.raises(LexidimError):
        dim_k(empty(3), 1)
    with pytest.raises(LexidimError):
        adim_k(complete(1), 1)
    assert valid_k_limit(cycle(5), METRIC) == 4
    assert valid_k_limit(cycle(5), ADJACENCY) == 4


def test_reduction_keeps_the_optimum():
    inst = build_multicover_instance(path(4), 2, METRIC)
    forced, kept = reduce_constraints(inst.masks, 2)
    assert all((c & forced).bit_count() < 2 for c in kept)
    for a, b in itertools.permutations(kept, 2):
        assert a & b != a
    greedy = greedy_cover(kept, 2, 4, forced)
    assert all((c & greedy).bit_count() >= 2 for c in inst.masks)


def test_enumeration_examples():
    res = enumerate_k_adjacency_bases(path(4), 2)
    assert res.value == 3 and not res.truncated
    assert res.sets == tuple(itertools.combinations(range(4), 3))
    res = enumerate_k_metric_bases(path(4), 1)
    assert res.sets == ((0,), (3,))
    res = enumerate_k_adjacency_bases(cycle(7), 1, cap=2)
    assert res.truncated and len(res.sets) == 2
    with pytest.raises(LexidimError):
        enumerate_k_adjacency_bases(path(4), 1, cap=0)


def _modes(g):
    out = [ADJACENCY]
    if is_connected(g):
        out.append(METRIC)
    return out


def _all_minimum(g, k, mode, value):
    return tuple(c for c in itertools.combinations(range(g.order), value) if is_generator(g, c, k, mode))


def _check_graph(g, enumerate_=False):
    for mode in _modes(g):
        top = valid_k_limit(g, mode)
        prev = 0
        for k in range(1, top + 1):
            inst = build_multicover_instance(g, k, mode)
            res = (dim_k if mode == METRIC else adim_k)(g, k)
            naive = naive_min_multicover(inst)
            assert (res.value, res.witness) == naive
            assert k <= res.value <= g.order
            assert res.value > prev  # strictly increasing in k
            prev = res.value
            if mode == METRIC and k <= valid_k_limit(g, ADJACENCY):
                assert res.value <= adim_k(g, k).value
            if enumerate_:
                listed = (enumerate_k_metric_bases if mode == METRIC else enumerate_k_adjacency_bases)(g, k)
                assert listed.sets == _all_minimum(g, k, mode, res.value)
        if mode == ADJACENCY:
            assert valid_k_limit(complement(g), ADJACENCY) == top
            for k in range(1, top + 1):
                assert adim_k(complement(g), k).value == adim_k(g, k).value


def test_atlas_small():
    for g in atlas(2, 5):
        _check_graph(g, enumerate_=True)


@settings(max_examples=60, deadline=None)
@given(graphs(min_order=2, max_order=9))
def test_property(g):
    _check_graph(g)


@settings(max_examples=40, deadline=None)
@given(graphs(min_order=2, max_order=8), st.data())
def test_supersets_of_generators(g, data):
    mode = ADJACENCY
    k = data.draw(st.integers(1, valid_k_limit(g, mode)))
    res = adim_k(g, k)
    extra = data.draw(st.sets(st.integers(0, g.order - 1)))
    assert is_generator(g, set(res.witness) | extra, k, mode)
    for v in res.witness:
        assert not is_generator(g, set(res.witness) - {v}, k, mode)


def test_pure_python_switch():
    import subprocess
    import sys
    out = subprocess.run(
        [sys.executable, "-c", "from lexidim.solver import BACKEND; print(BACKEND)"],
        env={**__import__("os").environ, "LEXIDIM_PURE_PYTHON": "1"},
        capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
