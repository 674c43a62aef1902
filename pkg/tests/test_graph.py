"""Graph core: construction, transforms, pasting and named graphs"""
import networkx as nx
import pytest
from hypothesis import given

from errors import InvalidGraphError, NotAnEdgeError
from graphs.graph import build_graph, disjoint_union, paste, transform
from graphs.named import bowtie, complete, complete_bipartite, cycle, empty, grid, path, star
from patterns.catalog import f1
from tests.strategies import graphs
from workbench.corpus import to_networkx


def test_build_graph_triangle():
    g = build_graph(3, [(0, 1), (1, 2), (2, 0)])
    assert g == complete(3)
    assert g.num_edges == 3
    assert g.edges() == ((0, 1), (0, 2), (1, 2))


def test_build_graph_single_vertex():
    g = build_graph(1, [])
    assert g.n == 1 and g.num_edges == 0
    assert g.is_connected()


def test_duplicate_and_reversed_edges_collapse():
    assert build_graph(2, [(0, 1), (1, 0), (0, 1)]).num_edges == 1


@pytest.mark.parametrize("n,edges", [
    (2, [(0, 0)]),
    (2, [(0, 2)]),
    (3, [(-1, 1)]),
    (-1, []),
])
def test_build_graph_rejects(n, edges):
    with pytest.raises(InvalidGraphError):
        build_graph(n, edges)


def test_empty_graph_is_not_connected():
    assert not empty(0).is_connected()
    assert empty(3).components() == [(0,), (1,), (2,)]


def test_components_ordered_by_smallest_vertex():
    g = build_graph(5, [(3, 4), (0, 2)])
    assert g.components() == [(0, 2), (1,), (3, 4)]


def test_complement_of_c6_is_3_regular():
    g = transform(cycle(6), "complement")
    assert g.n == 6
    assert all(g.degree(v) == 3 for v in g.vertices)


def test_contract_c4_gives_triangle():
    assert transform(cycle(4), "contract", (0, 1)) == complete(3)


def test_contract_non_edge():
    with pytest.raises(NotAnEdgeError):
        cycle(4).contract(0, 2)


def test_induce_k4_gives_k3():
    assert transform(complete(4), "induce", {0, 1, 2}) == complete(3)


def test_induced_with_map_keeps_labels():
    sub, labels = path(4).induced_with_map([3, 1, 2])
    assert labels == (1, 2, 3)
    assert sub == path(3)


def test_unknown_transform():
    with pytest.raises(ValueError):
        transform(cycle(4), "subdivide")


def test_paste_triangles_at_vertex_is_bowtie():
    assert paste(complete(3), [0], complete(3), [0]) == bowtie()


def test_paste_c4_along_edge_is_f1():
    g = paste(cycle(4), [0, 1], cycle(4), [0, 1])
    assert (g.n, g.num_edges) == (6, 7)
    assert nx.is_isomorphic(to_networkx(g), to_networkx(f1()))


def test_paste_empty_lists_is_disjoint_union():
    g = paste(complete(2), [], complete(2), [])
    assert g.edges() == ((0, 1), (2, 3))
    assert g == disjoint_union(complete(2), complete(2))


@pytest.mark.parametrize("clique1,clique2", [
    ([0, 2], [0, 1]),   # not a clique of C4
    ([0], [0, 1]),      # unequal lengths
    ([0, 0], [0, 1]),   # repeated vertex
])
def test_paste_rejects(clique1, clique2):
    with pytest.raises(InvalidGraphError):
        paste(cycle(4), clique1, complete(3), clique2)


def test_named_graphs():
    assert star(3).degree(0) == 3
    assert complete_bipartite(2, 3).num_edges == 6
    assert grid(3).num_edges == 12
    assert grid(2, 3).n == 6
    with pytest.raises(InvalidGraphError):
        cycle(2)


@pytest.mark.property_based
@given(graphs(max_n=7))
def test_complement_is_an_involution(g):
    assert g.complement().complement() == g
    assert g.num_edges + g.complement().num_edges == g.n * (g.n - 1) // 2


@pytest.mark.property_based
@given(graphs(max_n=7))
def test_components_match_networkx(g):
    expected = sorted(tuple(sorted(c)) for c in nx.connected_components(to_networkx(g)))
    assert g.components() == expected
