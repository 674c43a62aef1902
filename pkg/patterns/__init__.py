"""
Forbidden-pattern catalog and the minor / induced-minor containment engine
"""
from .containment import (
    ContainmentMode,
    ContainmentSearch,
    MinorModel,
    find_containment,
    verify_model,
)
from .catalog import (
    HOLE,
    OBSTRUCTION_1PO,
    OBSTRUCTION_OUTERPLANAR,
    OBSTRUCTION_SEPARABILITY,
    Pattern,
    catalog,
    f1,
    f2,
    f3,
    f4,
    grid_f1_model,
    is_transcribed,
    k2_3,
    k2_3_plus,
    obstructions,
    pattern,
    pattern_names,
)

__all__ = [
    'ContainmentMode', 'ContainmentSearch', 'MinorModel', 'find_containment', 'verify_model',
    'Pattern', 'catalog', 'pattern', 'pattern_names', 'obstructions', 'is_transcribed',
    'f1', 'f2', 'f3', 'f4', 'k2_3', 'k2_3_plus', 'grid_f1_model',
    'OBSTRUCTION_1PO', 'OBSTRUCTION_OUTERPLANAR', 'OBSTRUCTION_SEPARABILITY', 'HOLE',
]
