"""Orientation type and its verifiers"""
import pytest

from errors import InvalidGraphError, NotATreeError
from graphs.graph import build_graph
from graphs.named import complete, cycle, path, star
from oracles.orientation import (
    Orientation,
    is_in_tournament,
    is_in_tree,
    is_one_perfect,
    merge_orientations,
    sinks,
)


def cyclic(n):
    return Orientation.from_arcs(cycle(n), [(i, (i + 1) % n) for i in range(n)])


def test_cyclic_c4_is_one_perfect():
    assert is_one_perfect(cyclic(4))


def test_two_arcs_leaving_a_c4_vertex():
    o = Orientation.from_arcs(cycle(4), [(0, 1), (0, 3), (1, 2), (2, 3)])
    assert not is_one_perfect(o)


def test_acyclic_tournament_on_k4():
    o = Orientation.from_arcs(complete(4), [(a, b) for a, b in complete(4).edges()])
    assert is_one_perfect(o)
    assert sinks(o) == [3]


def test_sinks():
    assert sinks(cyclic(5)) == []
    assert sinks(Orientation(complete(1), ())) == [0]


def test_in_tree_of_p4():
    o = Orientation.from_arcs(path(4), [(1, 0), (2, 1), (3, 2)])
    assert is_in_tree(o)
    assert sinks(o) == [0]


def test_p3_with_centre_as_source():
    o = Orientation.from_arcs(path(3), [(1, 0), (1, 2)])
    assert not is_in_tree(o)
    assert not is_one_perfect(o)


def test_star_into_centre():
    o = Orientation.from_arcs(star(4), [(leaf, 0) for leaf in range(1, 5)])
    assert is_in_tree(o)
    assert sinks(o) == [0]


def test_in_tree_needs_a_tree():
    with pytest.raises(NotATreeError):
        is_in_tree(cyclic(4))


def test_in_tournament():
    assert is_in_tournament(Orientation.from_arcs(path(3), [(1, 0), (1, 2)]))
    assert not is_in_tournament(Orientation.from_arcs(path(3), [(0, 1), (2, 1)]))


@pytest.mark.parametrize("arcs", [
    [(0, 1)],                       # missing edge
    [(0, 1), (1, 0), (1, 2)],       # edge twice
    [(0, 1), (1, 2), (0, 2)],       # not an edge of P3
])
def test_from_arcs_rejects(arcs):
    with pytest.raises(InvalidGraphError):
        Orientation.from_arcs(path(3), arcs)


def test_forward_length_checked():
    with pytest.raises(InvalidGraphError):
        Orientation(path(3), (True,))


def test_reversed():
    o = cyclic(4)
    assert o.reversed().has_arc(1, 0)
    assert o.reversed().reversed() == o
    assert o.in_neighbors(1) == {0}


def test_merge_orientations():
    host = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    left = Orientation.from_arcs(path(2), [(1, 0)])
    right = Orientation.from_arcs(path(3), [(0, 1), (2, 1)])
    merged = merge_orientations(host, [(left, (0, 1)), (right, (1, 2, 3))])
    assert sorted(merged.arcs()) == [(1, 0), (1, 2), (3, 2)]
