"""
Locating forbidden induced minors in rejected graphs
"""
import logging
from collections import deque
from typing import Iterable, List, Optional, Sequence, Tuple

from graphs.cycles import Cycle
from graphs.graph import Graph
from patterns.catalog import f2, pattern
from patterns.containment import ContainmentMode, MinorModel, find_containment, verify_model
from structural.certificate import Witness

logger = logging.getLogger(__name__)

REJECTION_PATTERNS = ("K2_3", "F1", "F2")


def search_witness(graph: Graph, names: Iterable[str] = REJECTION_PATTERNS,
                   labels: Sequence[int] = None) -> Optional[Witness]:
    """First pattern of ``names`` found as an induced minor, lifted through ``labels``"""
    for name in names:
        model = find_containment(graph, pattern(name).graph, ContainmentMode.INDUCED)
        if model is not None:
            logger.debug("witness %s found on %d vertices", name, graph.n)
            return Witness(name, model.remap(labels) if labels is not None else model)
    return None


def search_in(host: Graph, vertices: Iterable[int],
              names: Iterable[str] = REJECTION_PATTERNS) -> Optional[Witness]:
    sub, labels = host.induced_with_map(vertices)
    return search_witness(sub, names, labels)


def hole_model(hole: Cycle) -> MinorModel:
    """Contract a hole onto C4 (0-1-2-3-0)"""
    return MinorModel({
        0: frozenset({hole[0]}),
        1: frozenset({hole[1]}),
        2: frozenset({hole[2]}),
        3: frozenset(hole[3:]),
    })


def cycle_order(graph: Graph) -> Cycle:
    """Vertices of a cycle graph in traversal order from vertex 0"""
    order = [0]
    prev = None
    while True:
        cur = order[-1]
        nxt = min(w for w in graph.adj[cur] if w != prev)
        if nxt == order[0]:
            return tuple(order)
        prev = cur
        order.append(nxt)


def _rotate(cycle: Cycle, start: int) -> Cycle:
    i = cycle.index(start)
    return cycle[i:] + cycle[:i]


def shortest_connection(graph: Graph, a: Iterable[int], b: Iterable[int]) -> Optional[List[int]]:
    """Shortest path from the vertex set ``a`` to the vertex set ``b``"""
    sources, targets = set(a), set(b)
    common = sources & targets
    if common:
        return [min(common)]
    parent = {s: None for s in sources}
    queue = deque(sorted(sources))
    while queue:
        x = queue.popleft()
        for y in graph.neighbors(x):
            if y in parent:
                continue
            parent[y] = x
            if y in targets:
                path = [y]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return path[::-1]
            queue.append(y)
    return None


def two_holes_f2(graph: Graph, hole_a: Cycle, hole_b: Cycle) -> Tuple[Optional[Witness], List[int]]:
    """F2 from two holes joined by a shortest path, if that model is induced.

    Returns the witness (or None) and the vertices of holes plus path, the
    natural place to search when the direct model fails.
    """
    region = set(hole_a) | set(hole_b)
    if len(set(hole_a) & set(hole_b)) > 1:
        return None, sorted(region)
    path = shortest_connection(graph, hole_a, hole_b)
    if path is None:
        return None, sorted(region)
    region |= set(path)
    a = _rotate(hole_a, path[0])
    b = _rotate(hole_b, path[-1])
    model = MinorModel({
        0: frozenset(path),
        1: frozenset({a[1]}),
        2: frozenset(a[2:-1]),
        3: frozenset({a[-1]}),
        4: frozenset({b[1]}),
        5: frozenset(b[2:-1]),
        6: frozenset({b[-1]}),
    })
    if verify_model(graph, f2(), model, ContainmentMode.INDUCED):
        return Witness("F2", model), sorted(region)
    return None, sorted(region)
