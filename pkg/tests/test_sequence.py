import pytest
from hypothesis import given
from hypothesis import strategies as st

from errors import A2PrimeViolation, InvalidStepError, ModeError, PreconditionError
from graphs.graph import build_graph, disjoint_union, paste
from graphs.named import bowtie, complete, complete_bipartite, cycle, path
from structural.sequence import BuildSequence, Step, StepKind, apply_steps, build_sequence
from tests.strategies import seeds
from workbench.generators import GeneratorSpec, generate

A1, A2 = StepKind.A1, StepKind.A2
C4_PLUS = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1)])


def test_p4():
    sequence = build_sequence(path(4))
    assert sequence.base_kind == "K1"
    assert [s.kind for s in sequence.steps] == [A1, A1, A1]
    assert apply_steps(sequence) == path(4)


def test_c4_plus_simplicial_vertex():
    sequence = build_sequence(C4_PLUS)
    assert sequence.base == (0, 1, 2, 3)
    assert sequence.cycle_length == 4
    assert sequence.steps == (Step(A2, 4, (0, 1)),)


def test_bowtie_from_a_single_vertex():
    sequence = build_sequence(bowtie())
    assert sequence.base_kind == "K1"
    assert apply_steps(sequence) == bowtie()


@pytest.mark.parametrize("graph", [complete_bipartite(2, 3), paste(cycle(4), [0], cycle(4), [0])])
def test_rejected_graphs_have_no_sequence(graph):
    assert build_sequence(graph) is None


def test_sequence_preconditions():
    with pytest.raises(ModeError):
        build_sequence(complete(4))
    with pytest.raises(PreconditionError):
        build_sequence(disjoint_union(complete(1), complete(1)))


def test_apply_a2_on_c4():
    g = apply_steps(BuildSequence(5, (0, 1, 2, 3), (Step(A2, 4, (0, 1)),)))
    assert g == C4_PLUS


def test_apply_a1_four_times():
    steps = tuple(Step(A1, v, (v - 1,)) for v in range(1, 5))
    g = apply_steps(BuildSequence(5, (0,), steps))
    assert g == path(5)


def test_second_a2_on_the_same_edge_violates_a2_prime():
    sequence = BuildSequence(6, (0, 1, 2, 3), (Step(A2, 4, (0, 1)), Step(A2, 5, (0, 1))))
    assert apply_steps(sequence).num_edges == 8
    with pytest.raises(A2PrimeViolation):
        apply_steps(sequence, enforce_a2_prime=True)


@pytest.mark.parametrize("sequence", [
    BuildSequence(3, (0, 1), ()),                                   # base of two vertices
    BuildSequence(2, (0,), ()),                                     # vertex 1 never added
    BuildSequence(2, (0,), (Step(A1, 0, (0,)),)),                   # vertex not new
    BuildSequence(3, (0,), (Step(A1, 1, (2,)),)),                   # target missing
    BuildSequence(5, (0, 1, 2, 3), (Step(A2, 4, (0, 2)),)),          # not an edge
    BuildSequence(2, (0,), (Step(A1, 1, (0, 0)),)),                 # A1 with two targets
    BuildSequence(5, (0, 1, 2, 5), ()),                             # base outside range
])
def test_invalid_sequences(sequence):
    with pytest.raises(InvalidStepError):
        apply_steps(sequence)


def test_outerplanar_mode_checks_a2_prime():
    sequence = build_sequence(C4_PLUS, "outerplanar")
    assert sequence is not None


@pytest.mark.property_based
@given(st.integers(4, 6), st.integers(0, 8), seeds)
def test_generated_hollowed_two_trees_round_trip(hole, extra, seed):
    g = generate(GeneratorSpec("hollowed_two_tree", {"n": hole + extra, "hole": hole}, seed))
    sequence = build_sequence(g)
    assert sequence.cycle_length == hole
    assert apply_steps(sequence) == g


@pytest.mark.property_based
@given(st.integers(1, 12), seeds)
def test_generated_block_cacti_with_short_cycles(n, seed):
    g = generate(GeneratorSpec("block_cactus", {"n": n, "max_block": 3}, seed))
    sequence = build_sequence(g)
    assert sequence.base_kind == "K1"
    assert apply_steps(sequence) == g
