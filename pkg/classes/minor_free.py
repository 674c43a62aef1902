"""
K4-minor-free (series-parallel) and outerplanar graphs
"""
from typing import Dict, Set

from graphs.graph import Graph
from patterns.catalog import k2_3, k2_3_plus
from patterns.containment import ContainmentMode, find_containment


def is_k4_minor_free(graph: Graph) -> bool:
    """Series-parallel reduction.

    Delete vertices of degree <= 1 and suppress vertices of degree 2 (their
    neighbours become adjacent, parallel edges collapse). The graph has no
    K4 minor iff this empties it.
    """
    adj: Dict[int, Set[int]] = {v: set(graph.adj[v]) for v in graph.vertices}
    stack = list(adj)
    while stack:
        v = stack.pop()
        if v not in adj or len(adj[v]) > 2:
            continue
        nbrs = adj.pop(v)
        for w in nbrs:
            adj[w].discard(v)
        if len(nbrs) == 2:
            a, b = nbrs
            adj[a].add(b)
            adj[b].add(a)
        stack.extend(nbrs)
    return not adj


def is_outerplanar(graph: Graph) -> bool:
    """No K4, K2,3 or K2,3+ induced minor.

    For the complete pattern K4 an induced minor is the same as a minor, so
    that part is decided by the series-parallel reduction.
    """
    if not is_k4_minor_free(graph):
        return False
    for pattern in (k2_3(), k2_3_plus()):
        if find_containment(graph, pattern, ContainmentMode.INDUCED) is not None:
            return False
    return True
