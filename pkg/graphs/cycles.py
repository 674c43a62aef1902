"""
Chordless (induced) cycle enumeration
"""
import logging
from typing import List, Tuple

from cachetools import LRUCache, cached

import config
from graphs.graph import Graph

logger = logging.getLogger(__name__)

Cycle = Tuple[int, ...]


@cached(cache=LRUCache(maxsize=512))
def chordless_cycles(graph: Graph) -> Tuple[Cycle, ...]:
    """Every induced cycle of length >= 3, once up to rotation and reflection.

    A cycle is reported starting at its smallest vertex s, in the direction
    whose second vertex is smaller than its last. Paths are extended from s
    through larger vertices only, and a candidate adjacent to an inner path
    vertex is dropped. Intended for n <= 12.
    """
    config.limit_exceeded(logger, "chordless_n", graph.n)
    found: List[Cycle] = []

    def extend(path: List[int], on_path: set):
        s, last = path[0], path[-1]
        inner = path[1:-1]
        for w in graph.neighbors(last):
            if w <= s or w in on_path:
                continue
            if any(w in graph.adj[x] for x in inner):
                continue
            if w in graph.adj[s]:
                if path[1] < w:
                    found.append(tuple(path) + (w,))
                continue
            path.append(w)
            on_path.add(w)
            extend(path, on_path)
            on_path.discard(w)
            path.pop()

    for s in range(graph.n):
        for v1 in graph.neighbors(s):
            if v1 > s:
                extend([s, v1], {s, v1})
    return tuple(found)


def cycle_edges(cycle: Cycle) -> List[Tuple[int, int]]:
    """Edges of a cycle in traversal order, as (from, to) pairs"""
    return [(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]


def holes(graph: Graph) -> Tuple[Cycle, ...]:
    """Chordless cycles of length at least four"""
    return tuple(c for c in chordless_cycles(graph) if len(c) >= 4)


def induced_cycles_through(graph: Graph, u: int, v: int) -> Tuple[Cycle, ...]:
    """Chordless cycles that use the edge {u, v}"""
    result = []
    for c in chordless_cycles(graph):
        for a, b in cycle_edges(c):
            if {a, b} == {u, v}:
                result.append(c)
                break
    return tuple(result)
