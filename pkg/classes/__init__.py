"""
Recognizers for the graph classes the structural results quantify over
"""
from .chordal import (
    EliminationOrdering,
    is_chordal,
    is_peo,
    maximum_cardinality_search,
    peo_starting_at,
    simplicial_vertices,
)
from .reductions import ReductionTrace, is_2tree, is_hollowed_2tree, reduce_simplicial_degree2
from .minor_free import is_k4_minor_free, is_outerplanar
from .cactus import block_is_complete, block_is_cycle, cycle_blocks, is_block_cactus
from .separability import (
    has_clique_of_size,
    is_cyclically_orientable,
    separability_at_most_2,
    separates,
)
from .registry import CLASSES, in_class

__all__ = [
    'EliminationOrdering', 'is_chordal', 'is_peo', 'maximum_cardinality_search',
    'peo_starting_at', 'simplicial_vertices',
    'ReductionTrace', 'is_2tree', 'is_hollowed_2tree', 'reduce_simplicial_degree2',
    'is_k4_minor_free', 'is_outerplanar',
    'block_is_complete', 'block_is_cycle', 'cycle_blocks', 'is_block_cactus',
    'has_clique_of_size', 'is_cyclically_orientable', 'separability_at_most_2', 'separates',
    'CLASSES', 'in_class',
]
