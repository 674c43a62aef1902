"""
Ground-truth deciders for 1-perfect orientability
"""
from .orientation import (
    Orientation,
    is_in_tournament,
    is_in_tree,
    is_one_perfect,
    merge_orientations,
    sinks,
)
from .enumeration import EnumerationMode, enumerate_one_perfect, iter_one_perfect
from .twosat import TwoSatInstance, TwoSatResult, TwoSatSolver, build_instance, is_1po_2sat
from .cyclic import cyclic_orientation_exists

__all__ = [
    'Orientation', 'is_one_perfect', 'is_in_tournament', 'is_in_tree', 'sinks',
    'merge_orientations',
    'EnumerationMode', 'enumerate_one_perfect', 'iter_one_perfect',
    'TwoSatInstance', 'TwoSatResult', 'TwoSatSolver', 'build_instance', 'is_1po_2sat',
    'cyclic_orientation_exists',
]
