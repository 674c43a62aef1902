"""
Class predicates under their stable command-line names
"""
from typing import Callable, Dict

from classes.cactus import is_block_cactus
from classes.chordal import is_chordal
from classes.minor_free import is_k4_minor_free, is_outerplanar
from classes.reductions import is_2tree, is_hollowed_2tree
from classes.separability import is_cyclically_orientable, separability_at_most_2
from graphs.graph import Graph


def _every_component(predicate: Callable[[Graph], bool]) -> Callable[[Graph], bool]:
    def check(graph: Graph) -> bool:
        return all(predicate(graph.induced(comp)) for comp in graph.components())
    return check


CLASSES: Dict[str, Callable[[Graph], bool]] = {
    "chordal": lambda g: is_chordal(g) is not None,
    "2tree": lambda g: is_2tree(g) is not None,
    "h2tree": lambda g: is_hollowed_2tree(g) is not None,
    "k4mf": is_k4_minor_free,
    "outerplanar": is_outerplanar,
    "blockcactus": _every_component(is_block_cactus),
    "sep2": separability_at_most_2,
    "co": is_cyclically_orientable,
}


def in_class(name: str, graph: Graph) -> bool:
    if name not in CLASSES:
        raise KeyError(f"unknown class {name!r}; expected one of {', '.join(CLASSES)}")
    return CLASSES[name](graph)
