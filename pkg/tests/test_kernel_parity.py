import random

import pytest
from hypothesis import given, settings, strategies as st

from corpus import random_connected
from lexidim.graph import complete, is_connected, path
from lexidim.solver import (
    ADJACENCY,
    METRIC,
    adim_k,
    available_backends,
    build_multicover_instance,
    dim_k,
    enumerate_minimum_generators,
    valid_k_limit,
)
from lexidim.solver import kernel
from strategies import graphs

pytestmark = pytest.mark.skipif("cython" not in available_backends(), reason="compiled kernel not built")


def _both(g, k, mode):
    f = dim_k if mode == METRIC else adim_k
    a, b = f(g, k, backend="python"), f(g, k, backend="cython")
    assert (a.value, a.witness) == (b.value, b.witness)
    inst = build_multicover_instance(g, k, mode)
    ea = enumerate_minimum_generators(inst, 50, backend="python")
    eb = enumerate_minimum_generators(inst, 50, backend="cython")
    assert ea == eb


@settings(max_examples=80, deadline=None)
@given(graphs(min_order=2, max_order=10), st.data())
def test_parity(g, data):
    modes = [ADJACENCY] + ([METRIC] if is_connected(g) else [])
    mode = data.draw(st.sampled_from(modes))
    k = data.draw(st.integers(1, valid_k_limit(g, mode)))
    _both(g, k, mode)


def test_parity_larger():
    rng = random.Random(99)
    for _ in range(6):
        g = random_connected(rng, rng.randint(14, 22))
        for k in (1, 2):
            if k <= valid_k_limit(g, METRIC):
                _both(g, k, METRIC)


def test_wide_instances_fall_back():
    # more than 64 vertices do not fit the compiled masks
    assert kernel._pick(65, "cython") is kernel._pykernel
    assert kernel._pick(64, "cython") is kernel._ckernel
    g = complete(66)
    a, b = adim_k(g, 1, backend="cython"), adim_k(g, 1, backend="python")
    assert (a.value, a.witness) == (b.value, b.witness) == (65, tuple(range(65)))


def test_node_counts_agree():
    inst = build_multicover_instance(path(9), 2, ADJACENCY)
    from lexidim.solver.multicover import _solve
    assert _solve(inst, "python")[:2] == _solve(inst, "cython")[:2]
