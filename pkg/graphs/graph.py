"""
Immutable simple undirected graphs on vertices 0..n-1
"""
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Sequence, Tuple

from errors import InvalidGraphError, NotAnEdgeError

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple graph with dense 0-based vertex indices.

    ``adj[v]`` is the neighbour set of ``v``. Instances are hashable and
    compare by their labelled structure. Build them with ``build_graph``;
    the constructor assumes the adjacency is already valid.
    """
    n: int
    adj: Tuple[frozenset, ...]

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    @property
    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def _edges(self) -> Tuple[Edge, ...]:
        return tuple((u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v)

    def edges(self) -> Tuple[Edge, ...]:
        """Edges (u, v) with u < v in lexicographic order"""
        return self._edges

    @cached_property
    def edge_index(self) -> dict:
        return {e: i for i, e in enumerate(self._edges)}

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return tuple(sorted(self.adj[v]))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adj[u]

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(a, b) for i, a in enumerate(vs) for b in vs[i + 1:])

    def components(self) -> List[Tuple[int, ...]]:
        """Connected components as sorted vertex tuples, ordered by smallest vertex"""
        seen = [False] * self.n
        result = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            queue = deque([start])
            comp = []
            while queue:
                x = queue.popleft()
                comp.append(x)
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        queue.append(y)
            result.append(tuple(sorted(comp)))
        return result

    def is_connected(self) -> bool:
        """K0 counts as disconnected, K1 as connected"""
        return self.n > 0 and len(self.components()) == 1

    def complement(self) -> "Graph":
        everyone = frozenset(range(self.n))
        return Graph(self.n, tuple(everyone - self.adj[v] - {v} for v in range(self.n)))

    def contract(self, u: int, v: int) -> "Graph":
        """Merge the endpoints of edge {u, v}.

        The merged vertex keeps the smaller index; indices above the larger
        endpoint shift down by one.
        """
        if not self.has_edge(u, v):
            raise NotAnEdgeError(f"({u}, {v}) is not an edge")
        keep, drop = min(u, v), max(u, v)

        def relabel(x):
            if x == drop:
                return keep
            return x - 1 if x > drop else x

        edges = []
        for a, b in self._edges:
            ra, rb = relabel(a), relabel(b)
            if ra != rb:
                edges.append((ra, rb))
        return build_graph(self.n - 1, edges)

    def induced_with_map(self, vertices: Iterable[int]) -> Tuple["Graph", Tuple[int, ...]]:
        """Induced subgraph plus the original label of each new vertex"""
        labels = tuple(sorted(set(vertices)))
        for x in labels:
            if not 0 <= x < self.n:
                raise InvalidGraphError(f"vertex {x} out of range for n={self.n}")
        index = {x: i for i, x in enumerate(labels)}
        adj = tuple(frozenset(index[y] for y in self.adj[x] if y in index) for x in labels)
        return Graph(len(labels), adj), labels

    def induced(self, vertices: Iterable[int]) -> "Graph":
        return self.induced_with_map(vertices)[0]

    def without(self, vertices: Iterable[int]) -> "Graph":
        gone = set(vertices)
        return self.induced(v for v in range(self.n) if v not in gone)


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Normalize an edge list into a Graph; duplicate and reversed pairs collapse"""
    if n < 0:
        raise InvalidGraphError(f"vertex count must be non-negative, got {n}")
    adj = [set() for _ in range(n)]
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidGraphError(f"edge ({u}, {v}) references a vertex outside 0..{n - 1}")
        if u == v:
            raise InvalidGraphError(f"self-loop at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(frozenset(s) for s in adj))


def transform(graph: Graph, kind: str, arg=None) -> Graph:
    """Apply ``complement``, ``contract`` (arg = edge) or ``induce`` (arg = vertex set)"""
    if kind == "complement":
        return graph.complement()
    if kind == "contract":
        u, v = arg
        return graph.contract(u, v)
    if kind == "induce":
        return graph.induced(arg)
    raise ValueError(f"unknown transform kind: {kind}")


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    return paste(g1, [], g2, [])


def paste(g1: Graph, clique1: Sequence[int], g2: Graph, clique2: Sequence[int]) -> Graph:
    """Paste two graphs along cliques of equal size.

    G1 keeps its labels; the vertices of G2 outside ``clique2`` follow as
    n1, n1+1, ... in increasing order, and ``clique2[i]`` is identified with
    ``clique1[i]``.
    """
    if len(clique1) != len(clique2):
        raise InvalidGraphError("paste lists have unequal length")
    for graph, clique in ((g1, clique1), (g2, clique2)):
        if len(set(clique)) != len(clique) or any(not 0 <= x < graph.n for x in clique):
            raise InvalidGraphError(f"invalid paste list {list(clique)}")
        if not graph.is_clique(clique):
            raise InvalidGraphError(f"paste list {list(clique)} is not a clique")

    mapping = dict(zip(clique2, clique1))
    nxt = g1.n
    for v in range(g2.n):
        if v not in mapping:
            mapping[v] = nxt
            nxt += 1
    edges = list(g1.edges()) + [(mapping[a], mapping[b]) for a, b in g2.edges()]
    return build_graph(nxt, edges)
