"""
Exhaustive search over 1-perfect orientations
"""
import logging
from enum import Enum
from typing import Iterator, List, Optional, Union

import config
from errors import InvalidGraphError
from graphs.graph import Graph
from oracles.orientation import Orientation

logger = logging.getLogger(__name__)


class EnumerationMode(str, Enum):
    COUNT = "count"
    COLLECT = "collect"
    FIRST = "first"


def iter_one_perfect(graph: Graph, forced_sink: Optional[int] = None) -> Iterator[Orientation]:
    """Yield every 1-perfect orientation of ``graph``.

    Edges are decided in (min, max) order, low -> high first. Orienting
    u -> v is pruned as soon as v misses an out-neighbour already chosen
    for u. With ``forced_sink`` every edge at that vertex points into it.
    """
    if forced_sink is not None and not 0 <= forced_sink < graph.n:
        raise InvalidGraphError(f"forced sink {forced_sink} is not a vertex")
    config.limit_exceeded(logger, "enumeration_edges", graph.num_edges)

    edges = graph.edges()
    out = [set() for _ in range(graph.n)]
    forward = [False] * len(edges)

    def allowed(x: int, y: int) -> bool:
        if x == forced_sink:
            return False
        return all(y in graph.adj[z] for z in out[x])

    def search(i: int) -> Iterator[Orientation]:
        if i == len(edges):
            yield Orientation(graph, tuple(forward))
            return
        u, v = edges[i]
        for x, y, fwd in ((u, v, True), (v, u, False)):
            if allowed(x, y):
                out[x].add(y)
                forward[i] = fwd
                yield from search(i + 1)
                out[x].discard(y)

    yield from search(0)


def enumerate_one_perfect(
    graph: Graph,
    mode: Union[EnumerationMode, str] = EnumerationMode.COUNT,
    forced_sink: Optional[int] = None,
) -> Union[int, List[Orientation]]:
    """Count or collect 1-perfect orientations; ``first`` returns at most one"""
    mode = EnumerationMode(mode)
    found = iter_one_perfect(graph, forced_sink)
    if mode is EnumerationMode.COUNT:
        return sum(1 for _ in found)
    if mode is EnumerationMode.FIRST:
        first = next(found, None)
        return [] if first is None else [first]
    return list(found)
