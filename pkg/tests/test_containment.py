"""Minor models: verification and search"""
import pytest
from hypothesis import given
from hypothesis import strategies as st

from classes.minor_free import is_k4_minor_free
from errors import MalformedModelError
from graphs.graph import build_graph, paste
from graphs.named import complete, complete_bipartite, cycle, path
from patterns.catalog import k2_3, k2_3_plus
from patterns.containment import ContainmentMode, MinorModel, find_containment, verify_model
from tests.strategies import graphs


def singletons(n):
    return MinorModel({i: frozenset({i}) for i in range(n)})


def test_identity_model_of_k4():
    for mode in ContainmentMode:
        assert verify_model(complete(4), complete(4), singletons(4), mode)


def test_k23_in_k23_plus():
    assert verify_model(k2_3_plus(), k2_3(), singletons(5), ContainmentMode.MINOR)
    assert not verify_model(k2_3_plus(), k2_3(), singletons(5), ContainmentMode.INDUCED)


def test_overlapping_branch_sets():
    model = MinorModel({0: frozenset({0, 1}), 1: frozenset({1, 2})})
    assert not verify_model(path(3), complete(2), model)


def test_disconnected_branch_set():
    model = MinorModel({0: frozenset({0, 2}), 1: frozenset({1})})
    assert not verify_model(path(3), complete(2), model)


@pytest.mark.parametrize("sets", [
    {0: {0}},                    # missing pattern vertex
    {0: {0}, 1: set()},          # empty set
    {0: {0}, 1: {9}},            # not a host vertex
])
def test_malformed_models(sets):
    model = MinorModel({k: frozenset(v) for k, v in sets.items()})
    with pytest.raises(MalformedModelError):
        verify_model(path(3), complete(2), model)


def test_remap_and_used_vertices():
    model = MinorModel({0: frozenset({0, 1}), 1: frozenset({2})})
    assert model.remap((5, 6, 7)).branch_sets == {0: frozenset({5, 6}), 1: frozenset({7})}
    assert model.used_vertices() == {0, 1, 2}
    assert model.as_dict() == {"0": [0, 1], "1": [2]}


def test_c6_has_no_induced_k23():
    assert find_containment(cycle(6), k2_3(), ContainmentMode.INDUCED) is None


def test_k23_plus_minors():
    assert find_containment(k2_3_plus(), complete(4), ContainmentMode.MINOR) is None
    model = find_containment(k2_3_plus(), k2_3(), ContainmentMode.MINOR)
    assert model is not None
    assert verify_model(k2_3_plus(), k2_3(), model, ContainmentMode.MINOR)


def test_f2_contains_a_hole():
    f2 = paste(cycle(4), [0], cycle(4), [0])
    model = find_containment(f2, cycle(4), ContainmentMode.INDUCED)
    assert model is not None and verify_model(f2, cycle(4), model)


def test_long_cycle_contracts_to_c4():
    model = find_containment(cycle(7), cycle(4), ContainmentMode.INDUCED)
    assert model is not None
    assert model.used_vertices() == set(range(7))


def test_complete_graph_has_no_hole():
    assert find_containment(complete(5), cycle(4), ContainmentMode.INDUCED) is None
    assert find_containment(complete(4), cycle(4), ContainmentMode.MINOR) is not None


def test_empty_pattern():
    assert find_containment(path(2), build_graph(0, []), ContainmentMode.INDUCED) == MinorModel({})


def test_k23_in_larger_bipartite():
    model = find_containment(complete_bipartite(2, 4), k2_3(), ContainmentMode.INDUCED)
    assert model is not None


@pytest.mark.property_based
@given(graphs(min_n=1, max_n=6), st.data())
def test_induced_subgraphs_are_found(g, data):
    keep = data.draw(st.sets(st.sampled_from(range(g.n)), min_size=1))
    sub = g.induced(keep)
    model = find_containment(g, sub, ContainmentMode.INDUCED)
    assert model is not None
    assert verify_model(g, sub, model, ContainmentMode.INDUCED)


@pytest.mark.property_based
@given(graphs(max_n=6))
def test_k4_minor_matches_series_parallel_reduction(g):
    assert (find_containment(g, complete(4), ContainmentMode.MINOR) is None) == is_k4_minor_free(g)
