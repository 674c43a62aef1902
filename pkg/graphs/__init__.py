"""
Graph values, decompositions and transformations
"""
from .graph import Graph, build_graph, transform, paste, disjoint_union
from .blocks import (
    BlockDecomposition,
    RootedTreeOrientation,
    blocks_and_cut_vertices,
    is_biconnected,
    rooted_tree_orientation,
)
from .cycles import chordless_cycles, cycle_edges, holes, induced_cycles_through
from . import named

__all__ = [
    'Graph', 'build_graph', 'transform', 'paste', 'disjoint_union',
    'BlockDecomposition', 'RootedTreeOrientation', 'blocks_and_cut_vertices',
    'is_biconnected', 'rooted_tree_orientation',
    'chordless_cycles', 'cycle_edges', 'holes', 'induced_cycles_through',
    'named',
]
