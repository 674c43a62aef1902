"""
Named graph constructors
"""
from itertools import combinations

from errors import InvalidGraphError
from graphs.graph import Graph, build_graph


def empty(n: int) -> Graph:
    return build_graph(n, [])


def complete(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidGraphError(f"a cycle needs at least 3 vertices, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0"""
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}; the first side is 0..a-1"""
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def grid(rows: int, cols: int = None) -> Graph:
    """rows x cols grid; vertex (r, c) has index r * cols + c"""
    cols = rows if cols is None else cols
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return build_graph(rows * cols, edges)


def bowtie() -> Graph:
    """Two triangles sharing vertex 0"""
    return build_graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
