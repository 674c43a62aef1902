import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from classes.chordal import is_chordal, is_peo, maximum_cardinality_search, peo_starting_at, simplicial_vertices
from errors import InvalidGraphError, PreconditionError
from graphs.graph import build_graph
from graphs.named import complete, cycle, path
from tests.strategies import graphs, seeds
from workbench.corpus import to_networkx
from workbench.generators import GeneratorSpec, generate

K4_MINUS_03 = build_graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def test_c4_is_not_chordal():
    assert is_chordal(cycle(4)) is None


def test_k4_minus_edge():
    ordering = is_chordal(K4_MINUS_03)
    assert ordering is not None
    assert is_peo(K4_MINUS_03, ordering.order)
    assert ordering.build_order == tuple(reversed(ordering.order))


@pytest.mark.parametrize("graph,v", [
    (complete(3), 2),
    (K4_MINUS_03, 0),
    (path(4), 1),
])
def test_peo_starting_at(graph, v):
    ordering = peo_starting_at(graph, v)
    assert ordering.build_order[0] == v
    assert is_peo(graph, ordering.order)


def test_peo_starting_at_rejects():
    with pytest.raises(PreconditionError):
        peo_starting_at(cycle(4), 0)
    with pytest.raises(InvalidGraphError):
        peo_starting_at(path(3), 3)


def test_is_peo_needs_a_permutation():
    assert not is_peo(path(3), [0, 1])
    assert not is_peo(path(3), [1, 0, 2])
    assert is_peo(path(3), [0, 1, 2])


def test_simplicial_vertices():
    assert simplicial_vertices(path(4)) == [0, 3]
    assert simplicial_vertices(cycle(4)) == []


@pytest.mark.property_based
@given(graphs(max_n=7))
def test_matches_networkx(g):
    assert sorted(maximum_cardinality_search(g)) == list(g.vertices)
    assert (is_chordal(g) is not None) == nx.is_chordal(to_networkx(g))


@pytest.mark.property_based
@given(st.integers(2, 12), seeds)
def test_generated_two_trees_are_chordal(n, seed):
    g = generate(GeneratorSpec("two_tree", {"n": n}, seed))
    assert is_chordal(g) is not None
    for v in g.vertices:
        assert peo_starting_at(g, v).build_order[0] == v
