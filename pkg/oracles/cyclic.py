"""
Brute-force oracle for cyclic orientations
"""
import logging
from typing import List, Tuple

import config
from graphs.cycles import chordless_cycles, cycle_edges
from graphs.graph import Graph

logger = logging.getLogger(__name__)


def cyclic_orientation_exists(graph: Graph) -> bool:
    """True iff some orientation makes every chordless cycle a directed cycle.

    Backtracks over edge directions; a cycle whose decided edges disagree
    on the direction of travel is pruned immediately.
    """
    config.limit_exceeded(logger, "cyclic_n", graph.n)
    edges = graph.edges()
    if not edges:
        return True

    # per cycle: (edge index, True when traversal goes low -> high)
    cycles: List[List[Tuple[int, bool]]] = []
    for c in chordless_cycles(graph):
        cycles.append([(graph.edge_index[(min(a, b), max(a, b))], a < b) for a, b in cycle_edges(c)])
    by_edge: List[List[int]] = [[] for _ in edges]
    for ci, members in enumerate(cycles):
        for ei, _ in members:
            by_edge[ei].append(ci)

    forward: List = [None] * len(edges)

    def consistent(ci: int) -> bool:
        sense = None
        for ei, along in cycles[ci]:
            if forward[ei] is None:
                continue
            agrees = forward[ei] == along
            if sense is None:
                sense = agrees
            elif sense != agrees:
                return False
        return True

    def search(i: int) -> bool:
        if i == len(edges):
            return True
        for choice in (True, False):
            forward[i] = choice
            if all(consistent(ci) for ci in by_edge[i]) and search(i + 1):
                return True
        forward[i] = None
        return False

    return search(0)
