"""
Recognition of 1-perfectly orientable graphs by block structure
"""
import logging
from enum import Enum
from typing import Callable, List, Optional, Sequence, Union

import config
from classes.cactus import cycle_blocks, is_block_cactus
from classes.minor_free import is_k4_minor_free, is_outerplanar
from errors import ModeError, PreconditionError
from graphs.blocks import BlockDecomposition, blocks_and_cut_vertices, rooted_tree_orientation
from graphs.cycles import holes
from graphs.graph import Graph
from oracles.orientation import Orientation, merge_orientations
from oracles.twosat import is_1po_2sat
from patterns.catalog import OBSTRUCTION_1PO, obstructions
from structural.biconnected import (
    classify_block,
    core_witness,
    orient_chordal_with_sink,
    orient_sink_free,
)
from structural.certificate import BlockLabel, Certificate, Witness
from structural.witness import cycle_order, search_in, search_witness, two_holes_f2

logger = logging.getLogger(__name__)

RootOrienter = Callable[[Graph, Sequence[int], BlockDecomposition, int], Orientation]


class RecognitionMode(str, Enum):
    K4MF = "k4mf"
    OUTERPLANAR = "outerplanar"


def check_mode(graph: Graph, mode: Union[RecognitionMode, str]) -> RecognitionMode:
    mode = RecognitionMode(mode)
    if mode is RecognitionMode.K4MF and not is_k4_minor_free(graph):
        raise ModeError(mode.value, "graph has a K4 minor; use the 2-SAT recognizer")
    if mode is RecognitionMode.OUTERPLANAR and not is_outerplanar(graph):
        raise ModeError(mode.value, "graph is not outerplanar; use the 2-SAT recognizer")
    return mode


def label_blocks(decomposition: BlockDecomposition) -> List[BlockLabel]:
    return [classify_block(decomposition.block_graph(i)[0]) for i in range(len(decomposition.blocks))]


def _chordal_root(block: Graph, labels: Sequence[int], decomposition: BlockDecomposition,
                  index: int) -> Orientation:
    # sink at the block's first cut vertex when it has one
    cuts = decomposition.cut_vertices_of(index)
    sink = labels.index(cuts[0]) if cuts else 0
    return orient_chordal_with_sink(block, sink)


def _sink_free_root(block: Graph, labels: Sequence[int], decomposition: BlockDecomposition,
                    index: int) -> Orientation:
    return orient_sink_free(block)


def orient_block_tree(graph: Graph, decomposition: BlockDecomposition, root: int,
                      orient_root: RootOrienter) -> Orientation:
    """Orient the root block with ``orient_root``; every other block B with
    tree arc (B, v) gets a chordal orientation whose only sink is v."""
    tree = decomposition.block_tree()
    towards_root = rooted_tree_orientation(tree, decomposition.block_node(root))
    parts = []
    for i in range(len(decomposition.blocks)):
        block, labels = decomposition.block_graph(i)
        if i == root:
            orientation = orient_root(block, labels, decomposition, i)
        else:
            _, cut = decomposition.node_label(towards_root.parent[decomposition.block_node(i)])
            orientation = orient_chordal_with_sink(block, labels.index(cut))
        parts.append((orientation, labels))
    return merge_orientations(graph, parts)


def build_orientation(graph: Graph, decomposition: BlockDecomposition = None,
                      labels: Sequence[BlockLabel] = None) -> Orientation:
    """1-perfect orientation of a connected accepted graph"""
    if graph.n == 1:
        return Orientation(graph, ())
    decomposition = decomposition or blocks_and_cut_vertices(graph)
    labels = labels or label_blocks(decomposition)
    hollowed = [i for i, label in enumerate(labels) if label is BlockLabel.HOLLOWED]
    if BlockLabel.OTHER in labels or len(hollowed) > 1:
        raise PreconditionError("build_orientation called on a rejected graph")
    if hollowed:
        return orient_block_tree(graph, decomposition, hollowed[0], _sink_free_root)
    return orient_block_tree(graph, decomposition, 0, _chordal_root)


def _block_hole(decomposition: BlockDecomposition, index: int):
    block, labels = decomposition.block_graph(index)
    return tuple(labels[x] for x in holes(block)[0])


def _two_hole_witness(graph: Graph, hole_a, hole_b) -> Optional[Witness]:
    witness, region = two_holes_f2(graph, hole_a, hole_b)
    if witness is None:
        witness = search_in(graph, region)
    return witness


def _recognize_connected(graph: Graph) -> Certificate:
    if graph.n == 1:
        return Certificate.accept(Orientation(graph, ()), "K1")
    decomposition = blocks_and_cut_vertices(graph)
    labels = label_blocks(decomposition)
    others = [i for i, label in enumerate(labels) if label is BlockLabel.OTHER]
    hollowed = [i for i, label in enumerate(labels) if label is BlockLabel.HOLLOWED]

    if not others and len(hollowed) <= 1:
        orientation = build_orientation(graph, decomposition, labels)
        reason = "all blocks are 2-trees" if not hollowed else \
            f"all blocks are 2-trees except block {hollowed[0]}, a hollowed 2-tree"
        return Certificate.accept(orientation, reason)

    if others:
        i = others[0]
        block, block_labels = decomposition.block_graph(i)
        witness = core_witness(block)
        if witness is not None:
            witness = Witness(witness.pattern, witness.model.remap(block_labels))
        reason = f"block {i} is neither a 2-tree nor a hollowed 2-tree"
    else:
        i, j = hollowed[:2]
        witness = _two_hole_witness(graph, _block_hole(decomposition, i), _block_hole(decomposition, j))
        reason = f"blocks {i} and {j} both contain a hole"

    if witness is None:
        witness = search_witness(graph)
    if witness is None:
        raise AssertionError("structural reject without a K2,3, F1 or F2 model")
    return Certificate.reject(witness, reason)


def recognize(graph: Graph, mode: Union[RecognitionMode, str] = RecognitionMode.K4MF) -> Certificate:
    """Decide 1-perfect orientability of a K4-minor-free or outerplanar graph.

    Raises ModeError when the graph is outside the mode's class. Components
    are decided separately; the first rejecting component supplies the
    witness.
    """
    check_mode(graph, mode)
    if graph.n == 0:
        return Certificate.accept(Orientation(graph, ()), "empty graph")
    components = graph.components()
    if len(components) == 1:
        return _recognize_connected(graph)

    parts = []
    for comp in components:
        sub, labels = graph.induced_with_map(comp)
        certificate = _recognize_connected(sub)
        if not certificate.accepted:
            witness = Witness(certificate.witness.pattern, certificate.witness.model.remap(labels))
            return Certificate.reject(witness, f"component {list(labels)}: {certificate.reason}")
        parts.append((certificate.orientation, labels))
    return Certificate.accept(merge_orientations(graph, parts), "every component accepted")


def recognize_block_cactus(graph: Graph) -> Certificate:
    """Accept iff at most one block is a cycle of length at least four"""
    if not graph.is_connected():
        raise PreconditionError("recognize_block_cactus needs a connected graph")
    if not is_block_cactus(graph):
        raise PreconditionError("recognize_block_cactus needs a block-cactus graph")
    decomposition = blocks_and_cut_vertices(graph)
    long_cycles = cycle_blocks(decomposition, 4)

    if len(long_cycles) <= 1:
        if long_cycles:
            orientation = orient_block_tree(graph, decomposition, long_cycles[0], _sink_free_root)
            reason = f"block {long_cycles[0]} is the only cycle of length at least four"
        else:
            orientation = orient_block_tree(graph, decomposition, 0, _chordal_root)
            reason = "no cycle of length at least four"
        return Certificate.accept(orientation, reason)

    i, j = long_cycles[:2]
    cycles = []
    for index in (i, j):
        block, labels = decomposition.block_graph(index)
        cycles.append(tuple(labels[x] for x in cycle_order(block)))
    witness = _two_hole_witness(graph, *cycles) or search_witness(graph)
    if witness is None:
        raise AssertionError("block-cactus reject without a K2,3, F1 or F2 model")
    return Certificate.reject(witness, f"blocks {i} and {j} are cycles of length at least four")


def certify_2sat(graph: Graph, forced_sink: int = None) -> Certificate:
    """General-graph certificate from the 2-SAT oracle.

    Rejections carry a catalog obstruction when one is found (unrooted
    question, desk-scale host), otherwise the conflicting edge variable.
    """
    result = is_1po_2sat(graph, forced_sink)
    if result:
        return Certificate.accept(result.orientation, "2-SAT instance satisfiable", sink=forced_sink)
    reason = f"2-SAT conflict on edge {result.conflict_edge}"
    witness = None
    if forced_sink is None and graph.n <= config.LIMITS["containment_host"]:
        names = [p.name for p in obstructions(OBSTRUCTION_1PO)]
        witness = search_witness(graph, names)
    return Certificate.reject(witness, reason, sink=forced_sink)
