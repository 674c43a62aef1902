import pytest
from hypothesis import given

from graphs.named import complete, complete_bipartite, cycle, path, star
from oracles.enumeration import enumerate_one_perfect, iter_one_perfect
from oracles.orientation import is_in_tree, is_one_perfect, sinks
from tests.strategies import trees


@pytest.mark.parametrize("graph,count", [
    (path(3), 3),
    (star(3), 4),
    (complete(3), 8),
    (complete(4), 64),
    (cycle(4), 2),
    (cycle(5), 2),
    (complete_bipartite(2, 3), 0),
])
def test_counts(graph, count):
    assert enumerate_one_perfect(graph, "count") == count


def test_forced_sink_on_hole():
    assert enumerate_one_perfect(cycle(4), "count", forced_sink=0) == 0


def test_forced_sink_on_triangle():
    found = enumerate_one_perfect(complete(3), "collect", forced_sink=1)
    assert len(found) == 2
    assert all(1 in sinks(o) for o in found)


def test_collect_returns_verified_orientations():
    found = enumerate_one_perfect(cycle(4), "collect")
    assert len(found) == 2
    assert all(is_one_perfect(o) for o in found)
    assert found[0] == found[1].reversed()


def test_first():
    assert len(enumerate_one_perfect(complete(4), "first")) == 1
    assert enumerate_one_perfect(complete_bipartite(2, 3), "first") == []


def test_edgeless_graph_has_one_orientation():
    assert list(iter_one_perfect(complete(1))) != []
    assert enumerate_one_perfect(complete(1)) == 1


@pytest.mark.property_based
@given(trees(max_n=7))
def test_trees_have_n_in_tree_orientations(tree):
    found = enumerate_one_perfect(tree, "collect")
    assert len(found) == tree.n
    assert all(is_in_tree(o) for o in found)
    assert sorted(sinks(o)[0] for o in found) == list(range(tree.n))
