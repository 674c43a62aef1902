"""
Seeded graph generators
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Mapping, Tuple

import config
from errors import GeneratorError, InvalidGraphError
from graphs.graph import Graph, build_graph, paste
from graphs import named
from workbench.rng import SplitMix64

logger = logging.getLogger(__name__)

KINDS = (
    "cycle", "complete", "path", "star", "grid", "complete_bipartite",
    "two_tree", "hollowed_two_tree", "block_cactus", "paste_sep2",
)


@dataclass(frozen=True)
class GeneratorSpec:
    """What to generate; equal specs give equal labelled graphs"""
    kind: str
    params: Mapping[str, int] = field(default_factory=dict, hash=False)
    seed: int = config.GENERATOR_DEFAULTS["seed"]

    def param(self, name: str, default: Any = None) -> int:
        value = self.params.get(name, default)
        if value is None:
            raise GeneratorError(f"{self.kind}: missing parameter '{name}'")
        return int(value)


def _attach_simplicial(edges: List[Tuple[int, int]], start: int, n: int, rng: SplitMix64):
    """Add vertices start..n-1, each joined to both ends of a random existing edge"""
    for v in range(start, n):
        a, b = rng.choice(edges)
        edges.extend([(a, v), (b, v)])


def _two_tree(spec: GeneratorSpec, rng: SplitMix64) -> Graph:
    n = spec.param("n")
    if n < 2:
        raise GeneratorError(f"two_tree needs n >= 2, got {n}")
    edges = [(0, 1)]
    _attach_simplicial(edges, 2, n, rng)
    return build_graph(n, edges)


def _hollowed_two_tree(spec: GeneratorSpec, rng: SplitMix64) -> Graph:
    n = spec.param("n")
    hole = spec.param("hole", 4)
    if hole < 4 or n < hole:
        raise GeneratorError(f"hollowed_two_tree needs hole >= 4 and n >= hole, got n={n}, hole={hole}")
    edges = [(i, (i + 1) % hole) for i in range(hole)]
    _attach_simplicial(edges, hole, n, rng)
    return build_graph(n, edges)


def _block_cactus(spec: GeneratorSpec, rng: SplitMix64) -> Graph:
    """Grow blocks (a cycle or a complete graph) at random existing vertices"""
    n = spec.param("n")
    max_block = spec.param("max_block", config.GENERATOR_DEFAULTS["max_block"])
    if n < 1 or max_block < 2:
        raise GeneratorError(f"block_cactus needs n >= 1 and max_block >= 2, got n={n}, max_block={max_block}")
    edges = []
    count = 1
    while count < n:
        anchor = rng.below(count)
        size = rng.between(2, min(max_block, n - count + 1))
        members = [anchor] + list(range(count, count + size - 1))
        if size >= 3 and rng.coin():
            edges.extend((members[i], members[(i + 1) % size]) for i in range(size))
        else:
            edges.extend((a, b) for i, a in enumerate(members) for b in members[i + 1:])
        count += size - 1
    return build_graph(n, edges)


def _paste_sep2(spec: GeneratorSpec, rng: SplitMix64) -> Graph:
    """Paste random complete graphs and cycles along cliques of size <= 2"""
    pieces = spec.param("pieces", config.GENERATOR_DEFAULTS["pieces"])
    max_piece = spec.param("max_piece", config.GENERATOR_DEFAULTS["max_piece"])
    allow_disjoint = bool(spec.params.get("allow_disjoint", 0))
    if pieces < 1 or max_piece < 1:
        raise GeneratorError("paste_sep2 needs pieces >= 1 and max_piece >= 1")

    def piece() -> Graph:
        size = rng.between(1, max_piece)
        if size >= 4 and rng.coin():
            return named.cycle(size)
        return named.complete(size)

    graph = piece()
    for _ in range(pieces - 1):
        other = piece()
        top = 2 if graph.num_edges and other.num_edges else 1
        r = rng.between(0 if allow_disjoint else 1, top)
        if r == 2:
            a, b = rng.choice(graph.edges())
            c, d = rng.choice(other.edges())
            if rng.coin():
                c, d = d, c
            graph = paste(graph, [a, b], other, [c, d])
        elif r == 1:
            graph = paste(graph, [rng.below(graph.n)], other, [rng.below(other.n)])
        else:
            graph = paste(graph, [], other, [])
    return graph


def _grid(spec: GeneratorSpec, rng: SplitMix64) -> Graph:
    if "k" in spec.params:
        return named.grid(spec.param("k"))
    return named.grid(spec.param("rows"), spec.param("cols"))


def _fixed(build: Callable[[int], Graph], minimum: int) -> Callable[[GeneratorSpec, SplitMix64], Graph]:
    def generate_fixed(spec: GeneratorSpec, rng: SplitMix64) -> Graph:
        n = spec.param("n")
        if n < minimum:
            raise GeneratorError(f"{spec.kind} needs n >= {minimum}, got {n}")
        return build(n)
    return generate_fixed


_GENERATORS: Dict[str, Callable[[GeneratorSpec, SplitMix64], Graph]] = {
    "cycle": _fixed(named.cycle, 3),
    "complete": _fixed(named.complete, 1),
    "path": _fixed(named.path, 1),
    "star": _fixed(lambda n: named.star(n - 1), 1),
    "grid": _grid,
    "complete_bipartite": lambda spec, rng: named.complete_bipartite(spec.param("a"), spec.param("b")),
    "two_tree": _two_tree,
    "hollowed_two_tree": _hollowed_two_tree,
    "block_cactus": _block_cactus,
    "paste_sep2": _paste_sep2,
}


def generate(spec: GeneratorSpec) -> Graph:
    if spec.kind not in _GENERATORS:
        raise GeneratorError(f"unknown generator kind '{spec.kind}'; expected one of {', '.join(KINDS)}")
    try:
        return _GENERATORS[spec.kind](spec, SplitMix64(spec.seed))
    except InvalidGraphError as e:
        raise GeneratorError(f"{spec.kind}: {e}") from e
