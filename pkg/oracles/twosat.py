"""
2-SAT recognition of 1-perfectly orientable graphs

One boolean variable per edge {u, v} (u < v), true when the edge is
oriented u -> v. Literals use the signed DIMACS convention: +(i+1) is
variable i, -(i+1) its negation.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from errors import InvalidGraphError
from graphs.graph import Edge, Graph
from oracles.orientation import Orientation, is_one_perfect

logger = logging.getLogger(__name__)

Clause = Tuple[int, int]


@dataclass(frozen=True)
class TwoSatInstance:
    num_vars: int
    var_of_edge: Dict[Edge, int] = field(hash=False)
    clauses: Tuple[Clause, ...] = ()

    def __post_init__(self):
        for clause in self.clauses:
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"clause {clause} references an undeclared variable")

    def arc_literal(self, x: int, y: int) -> int:
        """Literal meaning 'the edge {x, y} is oriented x -> y'"""
        var = self.var_of_edge[(min(x, y), max(x, y))] + 1
        return var if x < y else -var


class TwoSatSolver:
    """Implication-graph SCC solver (iterative Tarjan)"""

    def __init__(self, instance: TwoSatInstance):
        self.instance = instance
        self.num_nodes = 2 * instance.num_vars
        self.succ: List[List[int]] = [[] for _ in range(self.num_nodes)]
        for a, b in instance.clauses:
            # a or b  ==  (not a -> b) and (not b -> a)
            self.succ[self._node(-a)].append(self._node(b))
            self.succ[self._node(-b)].append(self._node(a))

    @staticmethod
    def _node(lit: int) -> int:
        return 2 * (abs(lit) - 1) + (0 if lit > 0 else 1)

    def components(self) -> List[int]:
        """Component id per node, numbered in reverse topological order"""
        n = self.num_nodes
        index = [-1] * n
        low = [0] * n
        comp = [-1] * n
        on_stack = [False] * n
        stack: List[int] = []
        counter = 0
        found = 0

        for root in range(n):
            if index[root] != -1:
                continue
            work = [(root, 0)]
            while work:
                v, i = work.pop()
                if i == 0:
                    index[v] = low[v] = counter
                    counter += 1
                    stack.append(v)
                    on_stack[v] = True
                recurse = False
                succ = self.succ[v]
                while i < len(succ):
                    w = succ[i]
                    i += 1
                    if index[w] == -1:
                        work.append((v, i))
                        work.append((w, 0))
                        recurse = True
                        break
                    if on_stack[w]:
                        low[v] = min(low[v], index[w])
                if recurse:
                    continue
                if low[v] == index[v]:
                    while True:
                        w = stack.pop()
                        on_stack[w] = False
                        comp[w] = found
                        if w == v:
                            break
                    found += 1
                if work:
                    parent = work[-1][0]
                    low[parent] = min(low[parent], low[v])
        return comp

    def solve(self) -> Tuple[Optional[List[bool]], Optional[int]]:
        """Return (assignment, None) or (None, conflicting variable).

        A variable is true when its positive literal's component comes
        later in topological order, i.e. was emitted first by Tarjan.
        """
        comp = self.components()
        values = []
        for var in range(self.instance.num_vars):
            pos, neg = comp[2 * var], comp[2 * var + 1]
            if pos == neg:
                return None, var
            values.append(pos < neg)
        return values, None


@dataclass(frozen=True)
class TwoSatResult:
    satisfiable: bool
    orientation: Optional[Orientation]
    num_vars: int
    num_clauses: int
    conflict_edge: Optional[Edge] = None

    def __bool__(self):
        return self.satisfiable


def build_instance(graph: Graph, forced_sink: Optional[int] = None) -> TwoSatInstance:
    """Clauses forbidding two out-arcs to non-adjacent neighbours"""
    var_of_edge = {e: i for i, e in enumerate(graph.edges())}
    skeleton = TwoSatInstance(len(var_of_edge), var_of_edge)
    clauses: List[Clause] = []
    for v in graph.vertices:
        nbrs = graph.neighbors(v)
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1:]:
                if not graph.has_edge(a, b):
                    clauses.append((-skeleton.arc_literal(v, a), -skeleton.arc_literal(v, b)))
    if forced_sink is not None:
        if not 0 <= forced_sink < graph.n:
            raise InvalidGraphError(f"forced sink {forced_sink} is not a vertex")
        for u in graph.neighbors(forced_sink):
            lit = skeleton.arc_literal(u, forced_sink)
            clauses.append((lit, lit))
    return TwoSatInstance(len(var_of_edge), var_of_edge, tuple(clauses))


def decode(graph: Graph, values: Sequence[bool]) -> Orientation:
    return Orientation(graph, tuple(bool(x) for x in values))


def is_1po_2sat(graph: Graph, forced_sink: Optional[int] = None) -> TwoSatResult:
    instance = build_instance(graph, forced_sink)
    values, conflict = TwoSatSolver(instance).solve()
    logger.debug("2-SAT: %d vars, %d clauses, satisfiable=%s",
                 instance.num_vars, len(instance.clauses), values is not None)
    if values is None:
        return TwoSatResult(False, None, instance.num_vars, len(instance.clauses),
                            conflict_edge=graph.edges()[conflict])
    orientation = decode(graph, values)
    if not is_one_perfect(orientation):
        raise AssertionError("2-SAT assignment decoded to an orientation that is not 1-perfect")
    return TwoSatResult(True, orientation, instance.num_vars, len(instance.clauses))
