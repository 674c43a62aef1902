"""
2-trees and hollowed 2-trees by simplicial degree-2 reduction
"""
import logging
from dataclasses import dataclass
from typing import Dict, Optional, Set, Tuple

from graphs.graph import Graph, build_graph

logger = logging.getLogger(__name__)

Removal = Tuple[int, Tuple[int, int]]


@dataclass(frozen=True)
class ReductionTrace:
    """Removed vertices (with their two neighbours) and what was left.

    Labels are those of the input graph; ``residue_labels[i]`` is the input
    label of residue vertex i.
    """
    n: int
    removed: Tuple[Removal, ...]
    residue: Graph
    residue_labels: Tuple[int, ...]

    def replay(self) -> Graph:
        """Re-add the removed vertices in reverse order"""
        labels = self.residue_labels
        edges = [(labels[a], labels[b]) for a, b in self.residue.edges()]
        for v, (a, b) in reversed(self.removed):
            edges.extend([(v, a), (v, b)])
        return build_graph(self.n, edges)


def reduce_simplicial_degree2(graph: Graph) -> ReductionTrace:
    """Greedily delete the lowest-index degree-2 vertex with adjacent neighbours"""
    adj: Dict[int, Set[int]] = {v: set(graph.adj[v]) for v in graph.vertices}
    removed = []
    while True:
        pick = None
        for v in sorted(adj):
            if len(adj[v]) == 2:
                a, b = sorted(adj[v])
                if b in adj[a]:
                    pick = (v, (a, b))
                    break
        if pick is None:
            break
        v, (a, b) = pick
        adj[a].discard(v)
        adj[b].discard(v)
        del adj[v]
        removed.append(pick)
    residue, labels = graph.induced_with_map(adj)
    return ReductionTrace(graph.n, tuple(removed), residue, labels)


def _is_cycle(graph: Graph) -> bool:
    return graph.n >= 3 and graph.is_connected() and all(graph.degree(v) == 2 for v in graph.vertices)


def is_2tree(graph: Graph) -> Optional[ReductionTrace]:
    """Trace with residue K2, or None; K1 is not a 2-tree"""
    trace = reduce_simplicial_degree2(graph)
    if trace.residue.n == 2 and trace.residue.num_edges == 1:
        return trace
    return None


def is_hollowed_2tree(graph: Graph) -> Optional[ReductionTrace]:
    """Trace with a cycle of length >= 4 as residue, or None"""
    trace = reduce_simplicial_degree2(graph)
    if trace.residue.n >= 4 and _is_cycle(trace.residue):
        return trace
    return None
