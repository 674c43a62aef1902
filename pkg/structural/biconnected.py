"""
Biconnected K4-minor-free graphs: classification, orientations, recognition
"""
import logging

from classes.chordal import peo_starting_at
from classes.minor_free import is_k4_minor_free
from classes.reductions import is_2tree, is_hollowed_2tree, reduce_simplicial_degree2
from errors import InvalidGraphError, PreconditionError
from graphs.blocks import is_biconnected
from graphs.cycles import holes
from graphs.graph import Graph
from oracles.orientation import Orientation
from structural.certificate import BlockLabel, Certificate, Witness
from structural.witness import cycle_order, hole_model, search_witness

logger = logging.getLogger(__name__)


def classify_block(block: Graph) -> BlockLabel:
    if block.n < 2 or not is_biconnected(block):
        raise PreconditionError("classify_block needs a biconnected graph on at least 2 vertices")
    if is_2tree(block) is not None:
        return BlockLabel.TWO_TREE_LIKE
    if is_hollowed_2tree(block) is not None:
        return BlockLabel.HOLLOWED
    return BlockLabel.OTHER


def orient_chordal_with_sink(graph: Graph, v: int) -> Orientation:
    """Orient v_i -> v_j iff i > j along a build order starting at v; v is the only sink"""
    if not 0 <= v < graph.n:
        raise InvalidGraphError(f"vertex {v} out of range for n={graph.n}")
    if not graph.is_connected():
        raise PreconditionError("orient_chordal_with_sink needs a connected graph")
    order = peo_starting_at(graph, v).build_order
    pos = {x: i for i, x in enumerate(order)}
    return Orientation.from_arcs(
        graph, [(a, b) if pos[a] > pos[b] else (b, a) for a, b in graph.edges()]
    )


def orient_sink_free(graph: Graph) -> Orientation:
    """Sink-free 1-perfect orientation of a 2-tree or hollowed 2-tree.

    The base (the hole, or the first triangle of a 2-tree) is oriented
    cyclically; every vertex re-attached after it points at both of its
    neighbours.
    """
    if graph.n < 3:
        raise PreconditionError("orient_sink_free needs at least 3 vertices")
    trace = is_hollowed_2tree(graph)
    if trace is not None:
        base = [trace.residue_labels[x] for x in cycle_order(trace.residue)]
        attached = trace.removed
    else:
        trace = is_2tree(graph)
        if trace is None:
            raise PreconditionError("orient_sink_free needs a 2-tree or a hollowed 2-tree")
        first, (a, b) = trace.removed[-1]
        base = [a, b, first]
        attached = trace.removed[:-1]

    arcs = [(base[i], base[(i + 1) % len(base)]) for i in range(len(base))]
    for v, (a, b) in attached:
        arcs.extend([(v, a), (v, b)])
    return Orientation.from_arcs(graph, arcs)


def _require_class(graph: Graph):
    if graph.n == 0 or not is_biconnected(graph):
        raise PreconditionError("expected a biconnected graph")
    if not is_k4_minor_free(graph):
        raise PreconditionError("expected a K4-minor-free graph")


def core_witness(block: Graph):
    """K2,3 or F1 in a biconnected block that is neither a 2-tree nor a hollowed 2-tree.

    The search runs on the part left after stripping simplicial degree-2
    vertices, and on the whole block if that fails.
    """
    trace = reduce_simplicial_degree2(block)
    witness = search_witness(trace.residue, ("K2_3", "F1"), trace.residue_labels)
    if witness is None:
        witness = search_witness(block, ("K2_3", "F1", "F2"))
    return witness


def recognize_biconnected(graph: Graph) -> Certificate:
    _require_class(graph)
    if graph.n == 1:
        return Certificate.accept(Orientation(graph, ()), "K1")
    if graph.n == 2:
        return Certificate.accept(orient_chordal_with_sink(graph, 1), "K2")
    if is_2tree(graph) is not None:
        return Certificate.accept(orient_sink_free(graph), "2-tree: sink-free orientation")
    if is_hollowed_2tree(graph) is not None:
        return Certificate.accept(orient_sink_free(graph), "hollowed 2-tree: sink-free orientation")

    witness = core_witness(graph)
    if witness is None:
        raise AssertionError("biconnected K4-minor-free reject without a K2,3 or F1 model")
    return Certificate.reject(witness, "block is neither a 2-tree nor a hollowed 2-tree")


def hole_witness(graph: Graph) -> Witness:
    found = holes(graph)
    if not found:
        raise AssertionError("non-chordal graph without a hole")
    return Witness("C4", hole_model(found[0]))


def recognize_biconnected_rooted(graph: Graph, v: int) -> Certificate:
    """Is there a 1-perfect orientation with v as a sink?"""
    _require_class(graph)
    if not 0 <= v < graph.n:
        raise InvalidGraphError(f"vertex {v} out of range for n={graph.n}")
    if graph.n == 1:
        return Certificate.accept(Orientation(graph, ()), "K1", sink=v)
    if is_2tree(graph) is not None:
        return Certificate.accept(orient_chordal_with_sink(graph, v), f"2-tree rooted at {v}", sink=v)
    return Certificate.reject(
        hole_witness(graph),
        "not chordal: every 1-perfect orientation orients the hole cyclically, so no sink exists",
        sink=v,
    )
