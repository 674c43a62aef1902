"""Block-structure recognition, block-cactus recognition and the 2-SAT certificate"""
import pytest
from hypothesis import given
from hypothesis import strategies as st

from errors import ModeError, PreconditionError
from graphs.graph import build_graph, disjoint_union, paste
from graphs.named import bowtie, complete, complete_bipartite, cycle, grid, path, star
from oracles.orientation import is_in_tree, is_one_perfect, sinks
from oracles.twosat import is_1po_2sat
from patterns.containment import MinorModel
from structural.certificate import Certificate, Verdict, Witness
from structural.recognize import (
    RecognitionMode,
    build_orientation,
    certify_2sat,
    check_mode,
    recognize,
    recognize_block_cactus,
)
from tests.strategies import graphs, seeds
from workbench.generators import GeneratorSpec, generate

TRIANGLE_AND_C5 = paste(cycle(5), [0], complete(3), [0])
TWO_C5 = paste(cycle(5), [0], cycle(5), [0])
BRIDGED_C4 = build_graph(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4)])


def test_triangle_and_c5_accepted():
    certificate = recognize(TRIANGLE_AND_C5)
    assert certificate.accepted
    assert certificate.verify(TRIANGLE_AND_C5)
    # the C5 block is the sink-free root, so the whole orientation has no sink
    assert sinks(certificate.orientation) == []


def test_two_c5_blocks_give_f2():
    certificate = recognize(TWO_C5)
    assert certificate.verdict is Verdict.REJECT
    assert certificate.witness.pattern == "F2"
    assert certificate.verify(TWO_C5)


def test_bridged_c4_blocks_rejected():
    certificate = recognize(BRIDGED_C4)
    assert not certificate.accepted
    assert certificate.verify(BRIDGED_C4)


def test_k23_block():
    certificate = recognize(complete_bipartite(2, 3))
    assert certificate.witness.pattern == "K2_3"
    assert "neither a 2-tree" in certificate.reason


@pytest.mark.parametrize("graph", [bowtie(), path(5), star(4), complete(1), complete(3), cycle(6)])
def test_accepted_examples(graph):
    certificate = recognize(graph)
    assert certificate.accepted
    assert is_one_perfect(certificate.orientation)
    assert certificate.verify(graph)


def test_tree_orientation_is_an_in_tree():
    assert is_in_tree(recognize(path(5)).orientation)


def test_empty_graph():
    assert recognize(build_graph(0, [])).accepted


def test_components_decided_separately():
    g = disjoint_union(cycle(4), cycle(5))
    certificate = recognize(g)
    assert certificate.accepted and certificate.verify(g)

    g = disjoint_union(cycle(4), complete_bipartite(2, 3))
    certificate = recognize(g)
    assert not certificate.accepted
    assert certificate.witness.model.used_vertices() <= set(range(4, 9))
    assert certificate.verify(g)


def test_mode_errors():
    with pytest.raises(ModeError):
        recognize(complete(4))
    with pytest.raises(ModeError):
        recognize(complete_bipartite(2, 3), RecognitionMode.OUTERPLANAR)
    with pytest.raises(PreconditionError):
        check_mode(grid(3), "k4mf")
    assert check_mode(cycle(5), "outerplanar") is RecognitionMode.OUTERPLANAR


def test_outerplanar_mode():
    certificate = recognize(TRIANGLE_AND_C5, RecognitionMode.OUTERPLANAR)
    assert certificate.accepted


def test_build_orientation_roots_at_the_hollowed_block():
    o = build_orientation(TRIANGLE_AND_C5)
    assert is_one_perfect(o)
    assert all(o.out_degree(v) == 1 for v in range(1, 5))


def test_build_orientation_refuses_rejected_graphs():
    with pytest.raises(PreconditionError):
        build_orientation(TWO_C5)


@pytest.mark.property_based
@given(st.integers(4, 6), st.integers(0, 10), seeds)
def test_generated_accepted_instances(hole, extra, seed):
    g = generate(GeneratorSpec("hollowed_two_tree", {"n": hole + extra, "hole": hole}, seed))
    certificate = recognize(g)
    assert certificate.accepted and certificate.verify(g)


@pytest.mark.property_based
@given(graphs(max_n=7))
def test_agrees_with_two_sat_on_k4_minor_free_graphs(g):
    try:
        certificate = recognize(g)
    except ModeError:
        return
    assert certificate.accepted == bool(is_1po_2sat(g))
    assert certificate.verify(g)


def test_block_cactus_one_long_cycle():
    g = cycle(7)
    for anchor in (0, 2, 4):
        g = paste(g, [anchor], complete(3), [0])
    certificate = recognize_block_cactus(g)
    assert certificate.accepted and certificate.verify(g)


def test_block_cactus_two_long_cycles():
    g = paste(cycle(4), [0], cycle(5), [0])
    certificate = recognize_block_cactus(g)
    assert not certificate.accepted
    assert certificate.witness.pattern == "F2"
    assert certificate.verify(g)


def test_block_cactus_tree():
    certificate = recognize_block_cactus(path(5))
    assert is_in_tree(certificate.orientation)


@pytest.mark.parametrize("graph", [complete_bipartite(2, 3), disjoint_union(complete(2), complete(2))])
def test_block_cactus_preconditions(graph):
    with pytest.raises(PreconditionError):
        recognize_block_cactus(graph)


def test_block_cactus_accepts_large_cliques():
    g = paste(complete(5), [0], cycle(6), [0])
    assert recognize_block_cactus(g).accepted


def test_certify_2sat():
    assert certify_2sat(complete(5)).accepted
    certificate = certify_2sat(complete_bipartite(2, 3))
    assert certificate.witness.pattern == "K2_3"
    assert certificate.verify(complete_bipartite(2, 3))


def test_certify_2sat_large_reject_carries_the_conflict():
    certificate = certify_2sat(grid(6))
    assert not certificate.accepted
    assert certificate.witness is None
    assert "conflict on edge" in certificate.reason
    assert certificate.verify(grid(6))


def test_certify_2sat_rooted():
    certificate = certify_2sat(cycle(4), forced_sink=0)
    assert not certificate.accepted and certificate.sink == 0
    assert certificate.verify(cycle(4))
    certificate = certify_2sat(complete(4), forced_sink=3)
    assert sinks(certificate.orientation) == [3]


def test_certificate_verify_catches_wrong_evidence():
    assert not certify_2sat(complete(3)).verify(complete(4))
    assert not Certificate(Verdict.REJECT, reason="no evidence").verify(cycle(5))
    singletons = MinorModel({i: frozenset({i}) for i in range(4)})
    assert not Certificate.reject(Witness("C4", singletons), "not a hole").verify(complete(4))
    assert Certificate.reject(Witness("C4", singletons), "a hole").verify(cycle(4))
