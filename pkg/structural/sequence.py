"""
Construction sequences: a base (K1 or a cycle) grown by pendant (A1) and
simplicial degree-2 (A2) attachments
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional, Set, Tuple, Union

from errors import A2PrimeViolation, InvalidStepError, PreconditionError
from graphs.cycles import induced_cycles_through
from graphs.graph import Graph, build_graph
from structural.recognize import RecognitionMode, check_mode
from structural.witness import cycle_order

logger = logging.getLogger(__name__)


class StepKind(str, Enum):
    A1 = "A1"   # attach a new vertex to one existing vertex
    A2 = "A2"   # attach a new vertex to both ends of an existing edge


@dataclass(frozen=True)
class Step:
    kind: StepKind
    vertex: int
    targets: Tuple[int, ...]


@dataclass(frozen=True)
class BuildSequence:
    """``base`` lists one vertex (K1) or a cycle in traversal order"""
    n: int
    base: Tuple[int, ...]
    steps: Tuple[Step, ...]

    @property
    def base_kind(self) -> str:
        return "K1" if len(self.base) == 1 else "cycle"

    @property
    def cycle_length(self) -> int:
        return 0 if len(self.base) == 1 else len(self.base)


def apply_steps(sequence: BuildSequence, enforce_a2_prime: bool = False) -> Graph:
    """Replay a sequence; labels are kept.

    With ``enforce_a2_prime`` an A2 step is refused when its target edge
    already lies in two or more induced cycles.
    """
    n = sequence.n
    base = sequence.base
    if len(base) == 2 or len(set(base)) != len(base) or not base:
        raise InvalidStepError(f"base must be one vertex or a cycle, got {list(base)}")
    if any(not 0 <= v < n for v in base):
        raise InvalidStepError(f"base vertex outside 0..{n - 1}")

    present: Set[int] = set(base)
    edges = [] if len(base) == 1 else [(base[i], base[(i + 1) % len(base)]) for i in range(len(base))]
    adjacency: Dict[int, Set[int]] = {v: set() for v in range(n)}
    for a, b in edges:
        adjacency[a].add(b)
        adjacency[b].add(a)

    for number, step in enumerate(sequence.steps):
        v = step.vertex
        if not 0 <= v < n or v in present:
            raise InvalidStepError(f"step {number}: vertex {v} is not a new vertex")
        if any(t not in present for t in step.targets):
            raise InvalidStepError(f"step {number}: target {list(step.targets)} not present")
        if step.kind is StepKind.A1:
            if len(step.targets) != 1:
                raise InvalidStepError(f"step {number}: A1 needs one target")
        else:
            if len(step.targets) != 2:
                raise InvalidStepError(f"step {number}: A2 needs two targets")
            u, w = step.targets
            if w not in adjacency[u]:
                raise InvalidStepError(f"step {number}: ({u}, {w}) is not an edge")
            if enforce_a2_prime:
                current = build_graph(n, edges)
                through = induced_cycles_through(current, u, w)
                if len(through) >= 2:
                    raise A2PrimeViolation(
                        f"step {number}: edge ({u}, {w}) lies in {len(through)} induced cycles"
                    )
        for t in step.targets:
            edges.append((v, t))
            adjacency[v].add(t)
            adjacency[t].add(v)
        present.add(v)

    if len(present) != n:
        raise InvalidStepError(f"sequence covers {len(present)} of {n} vertices")
    return build_graph(n, edges)


def build_sequence(graph: Graph, mode: Union[RecognitionMode, str] = RecognitionMode.K4MF
                   ) -> Optional[BuildSequence]:
    """Reverse-engineer a construction by peeling pendant and simplicial
    degree-2 vertices (lowest index first) down to K1 or a cycle"""
    if not graph.is_connected():
        raise PreconditionError("build_sequence needs a connected graph")
    mode = check_mode(graph, mode)

    adj: Dict[int, Set[int]] = {v: set(graph.adj[v]) for v in graph.vertices}
    peeled = []
    while len(adj) > 1:
        pick = None
        for v in sorted(adj):
            if len(adj[v]) == 1:
                pick = Step(StepKind.A1, v, tuple(adj[v]))
                break
            if len(adj[v]) == 2:
                a, b = sorted(adj[v])
                if b in adj[a]:
                    pick = Step(StepKind.A2, v, (a, b))
                    break
        if pick is None:
            break
        for t in pick.targets:
            adj[t].discard(pick.vertex)
        del adj[pick.vertex]
        peeled.append(pick)

    if len(adj) == 1:
        base = tuple(adj)
    else:
        rest, labels = graph.induced_with_map(adj)
        if rest.n < 4 or not all(rest.degree(v) == 2 for v in rest.vertices):
            logger.debug("build_sequence stuck with %d vertices left", rest.n)
            return None
        base = tuple(labels[x] for x in cycle_order(rest))

    sequence = BuildSequence(graph.n, base, tuple(reversed(peeled)))
    if mode is RecognitionMode.OUTERPLANAR:
        apply_steps(sequence, enforce_a2_prime=True)
    return sequence
