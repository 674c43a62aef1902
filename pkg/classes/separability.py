"""
Separability at most 2 and cyclically orientable graphs
"""
from itertools import combinations
from typing import Iterable

from graphs.graph import Graph


def separates(graph: Graph, u: int, v: int, cut: Iterable[int]) -> bool:
    """True when deleting ``cut`` leaves no u-v path"""
    blocked = set(cut)
    seen = {u}
    stack = [u]
    while stack:
        x = stack.pop()
        for y in graph.adj[x]:
            if y == v:
                return False
            if y not in seen and y not in blocked:
                seen.add(y)
                stack.append(y)
    return True


def separability_at_most_2(graph: Graph) -> bool:
    """Every non-adjacent pair in a component is split by at most two other vertices.

    Candidate separators of size 0, 1 and 2 are tried exhaustively.
    """
    component = {}
    for i, comp in enumerate(graph.components()):
        for x in comp:
            component[x] = i

    for u in graph.vertices:
        for v in range(u + 1, graph.n):
            if graph.has_edge(u, v) or component[u] != component[v]:
                continue
            others = [w for w in graph.vertices if w != u and w != v]
            if not any(
                separates(graph, u, v, cut)
                for size in (1, 2)
                for cut in combinations(others, size)
            ):
                return False
    return True


def has_clique_of_size(graph: Graph, k: int) -> bool:
    def grow(clique, candidates):
        if len(clique) == k:
            return True
        for i, w in enumerate(candidates):
            if grow(clique + [w], [x for x in candidates[i + 1:] if x in graph.adj[w]]):
                return True
        return False

    return grow([], list(graph.vertices))


def is_cyclically_orientable(graph: Graph) -> bool:
    """No K4 subgraph and separability at most 2"""
    return not has_clique_of_size(graph, 4) and separability_at_most_2(graph)
