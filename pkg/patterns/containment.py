"""
Minor and induced-minor models: verification and backtracking search
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Union

import config
from errors import MalformedModelError
from graphs.graph import Graph

logger = logging.getLogger(__name__)

UNUSED = -1


class ContainmentMode(str, Enum):
    MINOR = "minor"
    INDUCED = "induced"


@dataclass(frozen=True)
class MinorModel:
    """Branch set (a set of host vertices) for every pattern vertex"""
    branch_sets: Mapping[int, FrozenSet[int]]

    def as_dict(self) -> Dict[str, List[int]]:
        return {str(k): sorted(self.branch_sets[k]) for k in sorted(self.branch_sets)}

    def remap(self, labels: Sequence[int]) -> "MinorModel":
        """Translate host vertices through ``labels`` (subgraph index -> host label)"""
        return MinorModel({k: frozenset(labels[x] for x in s) for k, s in self.branch_sets.items()})

    def used_vertices(self) -> FrozenSet[int]:
        return frozenset().union(*self.branch_sets.values()) if self.branch_sets else frozenset()


def _connected(graph: Graph, vertices: FrozenSet[int]) -> bool:
    start = min(vertices)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in graph.adj[x]:
            if y in vertices and y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(vertices)


def _touch(graph: Graph, a: FrozenSet[int], b: FrozenSet[int]) -> bool:
    return any(graph.adj[x] & b for x in a)


def verify_model(host: Graph, pattern: Graph, model: MinorModel,
                 mode: Union[ContainmentMode, str] = ContainmentMode.INDUCED) -> bool:
    mode = ContainmentMode(mode)
    sets = model.branch_sets
    if set(sets) != set(range(pattern.n)):
        raise MalformedModelError(
            f"branch sets keyed by {sorted(sets)}, expected 0..{pattern.n - 1}"
        )
    for k, s in sets.items():
        if not s:
            raise MalformedModelError(f"branch set {k} is empty")
        for x in s:
            if not isinstance(x, int) or not 0 <= x < host.n:
                raise MalformedModelError(f"branch set {k} holds {x!r}, not a host vertex")

    seen = set()
    for s in sets.values():
        if seen & s:
            return False
        seen |= s
    if not all(_connected(host, frozenset(s)) for s in sets.values()):
        return False

    for a in range(pattern.n):
        for b in range(a + 1, pattern.n):
            touching = _touch(host, frozenset(sets[a]), frozenset(sets[b]))
            if pattern.has_edge(a, b) and not touching:
                return False
            if mode is ContainmentMode.INDUCED and touching and not pattern.has_edge(a, b):
                return False
    return True


class ContainmentSearch:
    """Backtracking assignment of host vertices to branch sets.

    Host vertices are taken by decreasing degree and offered the pattern
    slots by decreasing pattern degree, then "unused". Sets are bitmasks.
    A branch is cut when (induced mode) two adjacent host vertices land in
    slots that are non-adjacent in the pattern, when too few host vertices
    remain to fill the empty slots, or when some branch set can no longer
    become connected through the unassigned vertices.
    """

    def __init__(self, host: Graph, pattern: Graph, mode: Union[ContainmentMode, str]):
        self.host = host
        self.pattern = pattern
        self.induced = ContainmentMode(mode) is ContainmentMode.INDUCED
        self.adjmask = [sum(1 << w for w in host.adj[v]) for v in host.vertices]
        self.order = sorted(host.vertices, key=lambda v: (-host.degree(v), v))
        self.slots = sorted(pattern.vertices, key=lambda a: (-pattern.degree(a), a))
        self.sets = [0] * pattern.n
        self.nodes = 0

    def _reach(self, start: int, allowed: int) -> int:
        seen = frontier = start
        while frontier:
            nbrs = 0
            f = frontier
            while f:
                low = f & -f
                nbrs |= self.adjmask[low.bit_length() - 1]
                f ^= low
            frontier = nbrs & allowed & ~seen
            seen |= frontier
        return seen

    def _can_connect(self, s: int, free: int) -> bool:
        return self._reach(s & -s, s | free) & s == s

    def _neighbourhood(self, s: int) -> int:
        nbrs = 0
        while s:
            low = s & -s
            nbrs |= self.adjmask[low.bit_length() - 1]
            s ^= low
        return nbrs

    def _complete(self) -> bool:
        """Do the current sets already form a model with every other vertex unused?"""
        if not all(self.sets):
            return False
        if not all(self._can_connect(s, 0) for s in self.sets):
            return False
        for a, b in self.pattern.edges():
            if not self._neighbourhood(self.sets[a]) & self.sets[b]:
                return False
        return True

    def _feasible(self, free: int) -> bool:
        empty = sum(1 for s in self.sets if not s)
        if empty > bin(free).count("1"):
            return False
        return all(self._can_connect(s, free) for s in self.sets if s)

    def _search(self, i: int, free: int) -> bool:
        self.nodes += 1
        if self._complete():
            return True
        if i == len(self.order):
            return False
        x = self.order[i]
        bit = 1 << x
        free &= ~bit
        nbrs = self.adjmask[x]

        for a in self.slots:
            if self.induced and any(
                b != a and self.sets[b] & nbrs and not self.pattern.has_edge(a, b)
                for b in range(self.pattern.n)
            ):
                continue
            self.sets[a] |= bit
            if self._feasible(free) and self._search(i + 1, free):
                return True
            self.sets[a] &= ~bit

        if self._feasible(free) and self._search(i + 1, free):
            return True
        return False

    def run(self) -> Optional[MinorModel]:
        h = self.pattern.n
        if h == 0:
            return MinorModel({})
        if self.host.n < h or self.host.num_edges < self.pattern.num_edges:
            return None
        full = (1 << self.host.n) - 1
        found = self._search(0, full)
        logger.debug("containment search visited %d nodes (found=%s)", self.nodes, found)
        if not found:
            return None
        return MinorModel({
            a: frozenset(v for v in self.host.vertices if self.sets[a] >> v & 1)
            for a in range(h)
        })


def find_containment(host: Graph, pattern: Graph,
                     mode: Union[ContainmentMode, str] = ContainmentMode.INDUCED) -> Optional[MinorModel]:
    """Some (induced) minor model of ``pattern`` in ``host``, or None if none exists"""
    config.limit_exceeded(logger, "containment_host", host.n)
    config.limit_exceeded(logger, "containment_pattern", pattern.n)
    model = ContainmentSearch(host, pattern, mode).run()
    if model is not None and not verify_model(host, pattern, model, mode):
        raise AssertionError("containment search produced an invalid model")
    return model
