"""
Orientations of a host graph and their basic predicates
"""
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Sequence, Set, Tuple

from errors import InvalidGraphError, NotATreeError
from graphs.graph import Graph

Arc = Tuple[int, int]


@dataclass(frozen=True)
class Orientation:
    """One direction per host edge.

    ``forward[i]`` refers to ``host.edges()[i] = (u, v)`` with u < v and is
    True when the arc is u -> v.
    """
    host: Graph
    forward: Tuple[bool, ...]

    def __post_init__(self):
        if len(self.forward) != self.host.num_edges:
            raise InvalidGraphError(
                f"orientation has {len(self.forward)} directions for {self.host.num_edges} edges"
            )

    @classmethod
    def from_arcs(cls, host: Graph, arcs: Iterable[Arc]) -> "Orientation":
        directions: Dict[int, bool] = {}
        for x, y in arcs:
            if not host.has_edge(x, y):
                raise InvalidGraphError(f"arc ({x}, {y}) is not an edge of the host")
            i = host.edge_index[(min(x, y), max(x, y))]
            if i in directions:
                raise InvalidGraphError(f"edge {host.edges()[i]} oriented twice")
            directions[i] = x < y
        if len(directions) != host.num_edges:
            missing = [e for i, e in enumerate(host.edges()) if i not in directions]
            raise InvalidGraphError(f"edges without a direction: {missing}")
        return cls(host, tuple(directions[i] for i in range(host.num_edges)))

    def arcs(self) -> List[Arc]:
        return [(u, v) if fwd else (v, u) for (u, v), fwd in zip(self.host.edges(), self.forward)]

    @cached_property
    def _out(self) -> Tuple[frozenset, ...]:
        out: List[Set[int]] = [set() for _ in range(self.host.n)]
        for x, y in self.arcs():
            out[x].add(y)
        return tuple(frozenset(s) for s in out)

    def out_neighbors(self, v: int) -> frozenset:
        return self._out[v]

    def out_degree(self, v: int) -> int:
        return len(self._out[v])

    def in_neighbors(self, v: int) -> frozenset:
        return frozenset(u for u in self.host.adj[v] if v in self._out[u])

    def has_arc(self, x: int, y: int) -> bool:
        return y in self._out[x]

    def reversed(self) -> "Orientation":
        return Orientation(self.host, tuple(not f for f in self.forward))


def is_one_perfect(orientation: Orientation) -> bool:
    """Every out-neighbourhood is a clique of the host"""
    host = orientation.host
    return all(host.is_clique(sorted(orientation.out_neighbors(v))) for v in host.vertices)


def is_in_tournament(orientation: Orientation) -> bool:
    """Every in-neighbourhood is a clique (a fraternal orientation)"""
    host = orientation.host
    return all(host.is_clique(sorted(orientation.in_neighbors(v))) for v in host.vertices)


def sinks(orientation: Orientation) -> List[int]:
    return [v for v in orientation.host.vertices if not orientation.out_neighbors(v)]


def is_in_tree(orientation: Orientation) -> bool:
    """True iff the tree host is oriented toward a single root"""
    host = orientation.host
    if not host.is_connected() or host.num_edges != host.n - 1:
        raise NotATreeError("is_in_tree needs a tree host")
    roots = sinks(orientation)
    if len(roots) != 1:
        return False
    root = roots[0]
    dist = {root: 0}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in host.adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return all(dist[y] < dist[x] for x, y in orientation.arcs())


def merge_orientations(host: Graph, parts: Sequence[Tuple[Orientation, Sequence[int]]]) -> Orientation:
    """Combine orientations of subgraphs whose edge sets partition the host's.

    Each part is an orientation together with the host label of each of its
    vertices.
    """
    arcs = []
    for orientation, labels in parts:
        arcs.extend((labels[x], labels[y]) for x, y in orientation.arcs())
    return Orientation.from_arcs(host, arcs)
