"""Pattern catalog; every transcribed obstruction must fail the 2-SAT oracle"""
import logging

import networkx as nx
import pytest

from errors import PatternError
from oracles.twosat import is_1po_2sat
from patterns.catalog import (
    HOLE,
    OBSTRUCTION_1PO,
    OBSTRUCTION_OUTERPLANAR,
    OBSTRUCTION_SEPARABILITY,
    catalog,
    f3,
    f4,
    grid_f1_model,
    is_transcribed,
    obstructions,
    pattern,
    pattern_names,
)
from patterns.containment import ContainmentMode, verify_model
from workbench.corpus import to_networkx


def test_f1_edges():
    g = pattern("F1").graph
    assert g.edges() == ((0, 1), (0, 2), (0, 4), (1, 3), (1, 5), (2, 3), (4, 5))


def test_f2_shape():
    g = pattern("F2").graph
    assert (g.n, g.num_edges) == (7, 8)
    assert g.degree(0) == 4


def test_f3_3_is_prism():
    g = f3(3)
    assert g.n == 6 and all(g.degree(v) == 3 for v in g.vertices)
    assert nx.is_isomorphic(to_networkx(g), nx.circular_ladder_graph(3))


def test_f4_1_is_k23():
    assert nx.is_isomorphic(to_networkx(f4(1)), to_networkx(pattern("K2_3").graph))


@pytest.mark.parametrize("name", ["F3_2", "F3_9", "F4_0", "F4_7", "F5", "F12", "nope"])
def test_unavailable_names(name):
    with pytest.raises(PatternError):
        pattern(name)


def test_family_bounds():
    with pytest.raises(PatternError):
        f3(2)
    with pytest.raises(PatternError):
        f4(0)


def test_transcription_status():
    assert is_transcribed("F13")
    assert not is_transcribed("F7")
    assert {"F5", "F15", "F3_3", "F4_1", "C4"} <= set(pattern_names())


def test_f14_is_the_wheel():
    assert nx.is_isomorphic(to_networkx(pattern("F14").graph), nx.wheel_graph(5))


def test_catalog_skips_untranscribed(caplog):
    with caplog.at_level(logging.WARNING):
        names = [p.name for p in catalog()]
    assert "F5" not in names and "F13" in names
    assert names[-1] == "C4"
    assert "F5" in caplog.text


def test_roles():
    assert {p.name for p in obstructions(OBSTRUCTION_OUTERPLANAR)} == {"K4", "K2_3_plus"}
    assert {p.name for p in obstructions(OBSTRUCTION_SEPARABILITY)} == {"F13", "F14", "F15"}
    assert pattern("C4").role == HOLE


@pytest.mark.parametrize("p", obstructions(OBSTRUCTION_1PO, max_f3=4, max_f4=2), ids=lambda p: p.name)
def test_obstructions_are_not_one_perfectly_orientable(p):
    assert not is_1po_2sat(p.graph)


def test_grid_f1_model():
    host, model = grid_f1_model()
    assert host.n == 36
    assert verify_model(host, pattern("F1").graph, model, ContainmentMode.INDUCED)
