"""
Chordal graphs: maximum cardinality search and elimination orderings
"""
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from errors import InvalidGraphError, PreconditionError
from graphs.graph import Graph


@dataclass(frozen=True)
class EliminationOrdering:
    """A perfect elimination ordering.

    In ``order`` the later neighbours of every vertex form a clique.
    ``build_order`` is the reverse: each vertex's earlier neighbours form a
    clique, so the graph is grown from ``build_order[0]`` by adding
    simplicial vertices.
    """
    order: Tuple[int, ...]

    @property
    def build_order(self) -> Tuple[int, ...]:
        return tuple(reversed(self.order))

    def position(self) -> dict:
        return {v: i for i, v in enumerate(self.order)}


def is_peo(graph: Graph, order: Sequence[int]) -> bool:
    if sorted(order) != list(graph.vertices):
        return False
    pos = {v: i for i, v in enumerate(order)}
    return all(
        graph.is_clique([w for w in graph.adj[v] if pos[w] > pos[v]])
        for v in order
    )


def maximum_cardinality_search(graph: Graph) -> List[int]:
    """Visit order; ties go to the lowest index"""
    weight = [0] * graph.n
    visited = [False] * graph.n
    order = []
    for _ in range(graph.n):
        v = max((u for u in graph.vertices if not visited[u]), key=lambda u: (weight[u], -u))
        visited[v] = True
        order.append(v)
        for w in graph.adj[v]:
            if not visited[w]:
                weight[w] += 1
    return order


def is_chordal(graph: Graph) -> Optional[EliminationOrdering]:
    """A verified PEO when the graph is chordal, otherwise None"""
    order = tuple(reversed(maximum_cardinality_search(graph)))
    if is_peo(graph, order):
        return EliminationOrdering(order)
    return None


def simplicial_vertices(graph: Graph, within: set = None) -> List[int]:
    alive = set(graph.vertices) if within is None else within
    return [v for v in sorted(alive) if graph.is_clique(sorted(graph.adj[v] & alive))]


def peo_starting_at(graph: Graph, v: int) -> EliminationOrdering:
    """A PEO eliminating ``v`` last, so that ``build_order[0] == v``.

    Repeatedly deletes the lowest-index simplicial vertex other than v. A
    chordal graph that is not complete has two non-adjacent simplicial
    vertices, so one of them always differs from v.
    """
    if not 0 <= v < graph.n:
        raise InvalidGraphError(f"vertex {v} out of range for n={graph.n}")
    alive = set(graph.vertices)
    deleted = []
    while len(alive) > 1:
        candidates = [u for u in simplicial_vertices(graph, alive) if u != v]
        if not candidates:
            raise PreconditionError("peo_starting_at needs a chordal graph")
        deleted.append(candidates[0])
        alive.discard(candidates[0])
    deleted.append(v)
    return EliminationOrdering(tuple(deleted))
