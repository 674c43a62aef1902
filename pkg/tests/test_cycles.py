import networkx as nx
import pytest
from hypothesis import given

from graphs.cycles import chordless_cycles, cycle_edges, holes, induced_cycles_through
from graphs.graph import build_graph
from graphs.named import complete, cycle, grid, path
from patterns.catalog import f1
from tests.strategies import graphs
from workbench.corpus import to_networkx


def test_c5_has_one_cycle():
    assert chordless_cycles(cycle(5)) == ((0, 1, 2, 3, 4),)


def test_k4_has_only_triangles():
    found = chordless_cycles(complete(4))
    assert len(found) == 4
    assert all(len(c) == 3 for c in found)
    assert holes(complete(4)) == ()


def test_f1_has_two_four_cycles():
    found = chordless_cycles(f1())
    assert sorted(len(c) for c in found) == [4, 4]


def test_forests_have_none():
    assert chordless_cycles(path(5)) == ()


def test_cycle_edges():
    assert cycle_edges((0, 1, 2)) == [(0, 1), (1, 2), (2, 0)]


def test_induced_cycles_through_boundary_edge_of_grid():
    # the corner square and the outer 8-cycle
    through = induced_cycles_through(grid(3), 0, 1)
    assert sorted(len(c) for c in through) == [4, 8]


def test_induced_cycles_through_after_simplicial_addition():
    g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1)])
    assert len(induced_cycles_through(g, 0, 1)) == 2
    assert len(induced_cycles_through(g, 2, 3)) == 1


@pytest.mark.property_based
@given(graphs(max_n=7))
def test_every_reported_cycle_is_induced(g):
    found = chordless_cycles(g)
    assert len(set(frozenset(c) for c in found)) == len(found)
    for c in found:
        sub = g.induced(c)
        assert len(c) >= 3
        assert sub.is_connected() and all(sub.degree(v) == 2 for v in sub.vertices)
        assert c[0] == min(c) and c[1] < c[-1]


@pytest.mark.property_based
@given(graphs(max_n=7))
def test_count_matches_networkx(g):
    expected = {frozenset(c) for c in nx.chordless_cycles(to_networkx(g))}
    assert {frozenset(c) for c in chordless_cycles(g)} == expected
