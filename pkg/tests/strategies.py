"""Hypothesis strategies shared across test modules."""

from hypothesis import strategies as st

from lexidim.graph import Graph


@st.composite
def graphs(draw, min_order=1, max_order=8, connected=False):
    n = draw(st.integers(min_order, max_order))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = set(draw(st.lists(st.sampled_from(pairs), unique=True))) if pairs else set()
    if connected:
        # attach every vertex to an earlier one so the graph is connected
        for v in range(1, n):
            if not any((u, v) in chosen for u in range(v)):
                chosen.add((draw(st.integers(0, v - 1)), v))
    return Graph.from_edges(n, sorted(chosen))
