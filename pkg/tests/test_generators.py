import pytest
from hypothesis import given
from hypothesis import strategies as st

from classes.cactus import is_block_cactus
from classes.reductions import is_2tree, is_hollowed_2tree
from errors import GeneratorError
from graphs.named import complete, complete_bipartite, cycle, path, star
from tests.strategies import seeds
from workbench.generators import KINDS, GeneratorSpec, generate


def test_grid_k2_is_a_four_cycle():
    g = generate(GeneratorSpec("grid", {"k": 2}))
    assert g.num_edges == 4
    assert g.is_connected() and all(g.degree(v) == 2 for v in g.vertices)


def test_grid_rows_cols():
    g = generate(GeneratorSpec("grid", {"rows": 2, "cols": 3}))
    assert (g.n, g.num_edges) == (6, 7)


@pytest.mark.parametrize("seed", [0, 1, 42, 2 ** 63])
def test_two_tree_on_three_vertices_is_a_triangle(seed):
    assert generate(GeneratorSpec("two_tree", {"n": 3}, seed)) == complete(3)


def test_hollowed_on_five_vertices():
    g = generate(GeneratorSpec("hollowed_two_tree", {"n": 5, "hole": 4}, 9))
    assert g.num_edges == 6
    assert is_hollowed_2tree(g) is not None


@pytest.mark.parametrize("kind,params,expected", [
    ("cycle", {"n": 5}, cycle(5)),
    ("complete", {"n": 4}, complete(4)),
    ("path", {"n": 3}, path(3)),
    ("star", {"n": 4}, star(3)),
    ("complete_bipartite", {"a": 2, "b": 3}, complete_bipartite(2, 3)),
])
def test_fixed_kinds(kind, params, expected):
    assert generate(GeneratorSpec(kind, params)) == expected


@pytest.mark.parametrize("kind,params", [
    ("cycle", {"n": 2}),
    ("cycle", {}),
    ("two_tree", {"n": 1}),
    ("hollowed_two_tree", {"n": 5, "hole": 3}),
    ("hollowed_two_tree", {"n": 3, "hole": 4}),
    ("block_cactus", {"n": 4, "max_block": 1}),
    ("paste_sep2", {"pieces": 0}),
    ("spiral", {"n": 4}),
])
def test_invalid_specs(kind, params):
    with pytest.raises(GeneratorError):
        generate(GeneratorSpec(kind, params))


@pytest.mark.property_based
@given(st.sampled_from(["two_tree", "hollowed_two_tree", "block_cactus", "paste_sep2"]), seeds)
def test_same_spec_same_graph(kind, seed):
    spec = GeneratorSpec(kind, {"n": 9, "hole": 5}, seed)
    assert generate(spec) == generate(GeneratorSpec(kind, {"n": 9, "hole": 5}, seed))


@pytest.mark.property_based
@given(st.integers(2, 20), seeds)
def test_two_tree_shape(n, seed):
    g = generate(GeneratorSpec("two_tree", {"n": n}, seed))
    assert g.n == n and g.num_edges == 2 * n - 3
    assert is_2tree(g) is not None


@pytest.mark.property_based
@given(st.integers(1, 20), st.integers(2, 6), seeds)
def test_block_cactus_shape(n, max_block, seed):
    g = generate(GeneratorSpec("block_cactus", {"n": n, "max_block": max_block}, seed))
    assert g.n == n and g.is_connected()
    assert is_block_cactus(g)


@pytest.mark.property_based
@given(st.integers(1, 6), seeds)
def test_paste_sep2_connected_unless_disjoint_allowed(pieces, seed):
    g = generate(GeneratorSpec("paste_sep2", {"pieces": pieces, "max_piece": 4}, seed))
    assert g.is_connected()


def test_kinds_are_all_generated():
    defaults = {"n": 6, "k": 3, "a": 2, "b": 2, "hole": 4}
    for kind in KINDS:
        assert generate(GeneratorSpec(kind, defaults)).n > 0
