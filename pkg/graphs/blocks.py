"""
Block-cut decomposition and rooted tree orientations
"""
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Mapping, Tuple

from errors import DisconnectedGraphError, InvalidGraphError, NotATreeError
from graphs.graph import Graph, build_graph


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks, cut vertices and block-tree adjacency of a connected graph.

    Blocks are listed in DFS discovery order (the order in which the DFS from
    vertex 0 first enters each block). ``tree_edges`` holds (block index,
    cut vertex) pairs, sorted.
    """
    host: Graph
    blocks: Tuple[FrozenSet[int], ...]
    cut_vertices: FrozenSet[int]
    tree_edges: Tuple[Tuple[int, int], ...]

    def block_graph(self, index: int) -> Tuple[Graph, Tuple[int, ...]]:
        """Induced graph of a block and the host label of each of its vertices"""
        return self.host.induced_with_map(self.blocks[index])

    def blocks_containing(self, v: int) -> List[int]:
        return [i for i, b in enumerate(self.blocks) if v in b]

    def cut_vertices_of(self, index: int) -> List[int]:
        return sorted(self.blocks[index] & self.cut_vertices)

    def block_node(self, index: int) -> int:
        return index

    def cut_node(self, v: int) -> int:
        return len(self.blocks) + sorted(self.cut_vertices).index(v)

    def node_label(self, node: int) -> Tuple[str, int]:
        """('block', i) or ('cut', v) for a node of ``block_tree()``"""
        if node < len(self.blocks):
            return ("block", node)
        return ("cut", sorted(self.cut_vertices)[node - len(self.blocks)])

    def block_tree(self) -> Graph:
        """The block tree: nodes 0..b-1 are blocks, then cut vertices in increasing order"""
        cuts = sorted(self.cut_vertices)
        position = {v: len(self.blocks) + i for i, v in enumerate(cuts)}
        return build_graph(len(self.blocks) + len(cuts), [(i, position[v]) for i, v in self.tree_edges])

    def end_blocks(self) -> List[int]:
        """Blocks holding at most one cut vertex"""
        return [i for i in range(len(self.blocks)) if len(self.blocks[i] & self.cut_vertices) <= 1]


def blocks_and_cut_vertices(graph: Graph) -> BlockDecomposition:
    """Lowpoint DFS (Hopcroft-Tarjan) with an edge stack, iterative"""
    if not graph.is_connected():
        raise DisconnectedGraphError("blocks_and_cut_vertices needs a connected graph")
    n = graph.n
    if n == 1:
        return BlockDecomposition(graph, (frozenset({0}),), frozenset(), ())

    disc = [-1] * n
    low = [0] * n
    disc[0] = low[0] = 0
    timer = 1
    edge_stack = []
    found = []
    cuts = set()
    root_children = 0
    stack = [(0, -1, iter(graph.neighbors(0)))]

    while stack:
        v, parent, neighbours = stack[-1]
        descended = False
        for w in neighbours:
            if disc[w] == -1:
                edge_stack.append((v, w))
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, v, iter(graph.neighbors(w))))
                descended = True
                break
            if w != parent and disc[w] < disc[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], disc[w])
        if descended:
            continue

        stack.pop()
        if not stack:
            break
        p = stack[-1][0]
        low[p] = min(low[p], low[v])
        if low[v] >= disc[p]:
            members = set()
            while True:
                edge = edge_stack.pop()
                members.update(edge)
                if edge == (p, v):
                    break
            found.append((disc[v], frozenset(members)))
            if stack[-1][1] == -1:
                root_children += 1
            else:
                cuts.add(p)

    if root_children > 1:
        cuts.add(0)

    blocks = tuple(block for _, block in sorted(found, key=lambda item: item[0]))
    tree_edges = tuple(sorted((i, c) for i, block in enumerate(blocks) for c in block if c in cuts))
    return BlockDecomposition(graph, blocks, frozenset(cuts), tree_edges)


def is_biconnected(graph: Graph) -> bool:
    """Connected without cut vertices; K1 and K2 count as biconnected"""
    return graph.is_connected() and len(blocks_and_cut_vertices(graph).blocks) == 1


@dataclass(frozen=True)
class RootedTreeOrientation:
    """Orientation of a tree with every arc pointing toward ``root``"""
    root: int
    parent: Mapping[int, int] = field(default_factory=dict)

    def arcs(self) -> List[Tuple[int, int]]:
        return sorted(self.parent.items())

    def path_to_root(self, node: int) -> List[int]:
        result = [node]
        while result[-1] != self.root:
            result.append(self.parent[result[-1]])
        return result


def rooted_tree_orientation(tree: Graph, root: int) -> RootedTreeOrientation:
    if not 0 <= root < tree.n:
        raise InvalidGraphError(f"root {root} is not a vertex")
    if not tree.is_connected() or tree.num_edges != tree.n - 1:
        raise NotATreeError("rooted_tree_orientation needs an acyclic connected graph")

    parent: Dict[int, int] = {}
    seen = {root}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in tree.neighbors(x):
            if y not in seen:
                seen.add(y)
                parent[y] = x
                queue.append(y)
    return RootedTreeOrientation(root, parent)
