"""Hypothesis strategies for small labelled graphs"""
from hypothesis import strategies as st

from graphs.graph import build_graph


@st.composite
def graphs(draw, min_n=0, max_n=6, connected=False):
    """Random edge subset; ``connected`` adds a random spanning tree"""
    n = draw(st.integers(min_value=max(min_n, 1 if connected else 0), max_value=max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [p for p, k in zip(pairs, keep) if k]
    if connected:
        edges += [(draw(st.integers(0, v - 1)), v) for v in range(1, n)]
    return build_graph(n, edges)


@st.composite
def trees(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return build_graph(n, [(draw(st.integers(0, v - 1)), v) for v in range(1, n)])


seeds = st.integers(min_value=0, max_value=2 ** 64 - 1)
