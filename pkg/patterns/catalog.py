"""
Catalog of forbidden induced minors
"""
import json
import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Dict, List

import config
from errors import PatternError
from graphs.graph import Graph, build_graph, disjoint_union
from graphs.named import complete, complete_bipartite, cycle, grid
from patterns.containment import MinorModel

logger = logging.getLogger(__name__)

FIGURES_FILE = Path(__file__).parent / "figures.json"

# Pattern roles
OBSTRUCTION_1PO = "1po-obstruction"
OBSTRUCTION_OUTERPLANAR = "outerplanar-obstruction"
OBSTRUCTION_SEPARABILITY = "separability-obstruction"
HOLE = "hole"


@dataclass(frozen=True)
class Pattern:
    name: str
    graph: Graph
    role: str
    description: str = ""


def k2_3() -> Graph:
    """K_{2,3}; the degree-3 vertices are 0 and 1"""
    return complete_bipartite(2, 3)


def k2_3_plus() -> Graph:
    return build_graph(5, list(k2_3().edges()) + [(0, 1)])


def f1() -> Graph:
    """Two 4-cycles 0-2-3-1 and 0-4-5-1 sharing the edge 01"""
    return build_graph(6, [(0, 1), (0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 1)])


def f2() -> Graph:
    """Two 4-cycles 0-1-2-3 and 0-4-5-6 sharing vertex 0"""
    return build_graph(7, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0)])


def f3(k: int) -> Graph:
    """Complement of C_2k, k >= 3"""
    if k < 3:
        raise PatternError(f"F3_k needs k >= 3, got {k}")
    return cycle(2 * k).complement()


def f4(k: int) -> Graph:
    """Complement of K2 + C_(2k+1), k >= 1"""
    if k < 1:
        raise PatternError(f"F4_k needs k >= 1, got {k}")
    return disjoint_union(complete(2), cycle(2 * k + 1)).complement()


_FIXED = {
    "K4": (lambda: complete(4), OBSTRUCTION_OUTERPLANAR, "complete graph on four vertices"),
    "K2_3": (k2_3, OBSTRUCTION_1PO, "complete bipartite graph K2,3"),
    "K2_3_plus": (k2_3_plus, OBSTRUCTION_OUTERPLANAR, "K2,3 plus the edge between its degree-3 vertices"),
    "F1": (f1, OBSTRUCTION_1PO, "two 4-cycles sharing an edge"),
    "F2": (f2, OBSTRUCTION_1PO, "two 4-cycles sharing a vertex"),
    "C4": (lambda: cycle(4), HOLE, "a hole, contracted to four vertices"),
}

_FAMILY = re.compile(r"^(F3|F4)_(\d+)$")


@lru_cache(maxsize=1)
def _figures() -> Dict[str, dict]:
    with open(FIGURES_FILE) as f:
        raw = json.load(f)
    return {name: entry for name, entry in raw.items() if not name.startswith("_")}


def is_transcribed(name: str) -> bool:
    entry = _figures().get(name)
    return entry is not None and entry.get("status") == "transcribed" and entry.get("edges") is not None


def pattern(name: str) -> Pattern:
    """Look up a pattern by its stable name (``F3_4``, ``F4_2`` for families)"""
    if name in _FIXED:
        build, role, description = _FIXED[name]
        return Pattern(name, build(), role, description)

    match = _FAMILY.match(name)
    if match:
        family, k = match.group(1), int(match.group(2))
        low, high = config.FAMILY_RANGES[family]
        if not low <= k <= high:
            raise PatternError(f"{name}: k must lie in {low}..{high}")
        if family == "F3":
            return Pattern(name, f3(k), OBSTRUCTION_1PO, f"complement of C{2 * k}")
        return Pattern(name, f4(k), OBSTRUCTION_1PO, f"complement of K2 + C{2 * k + 1}")

    entry = _figures().get(name)
    if entry is None:
        raise PatternError(f"unknown pattern: {name}")
    if not is_transcribed(name):
        raise PatternError(f"pattern {name} has not been transcribed yet")
    graph = build_graph(entry["n"], [tuple(e) for e in entry["edges"]])
    return Pattern(name, graph, entry["role"], entry.get("description", ""))


def pattern_names() -> List[str]:
    """Every stable name, transcribed or not, families at their smallest k"""
    return list(_FIXED) + ["F3_3", "F4_1"] + list(_figures())


def catalog(max_f3: int = 3, max_f4: int = 1) -> List[Pattern]:
    """All available patterns; untranscribed figure entries are skipped"""
    result = [pattern(name) for name in ("K4", "K2_3", "K2_3_plus", "F1", "F2")]
    result += [pattern(f"F3_{k}") for k in range(3, max_f3 + 1)]
    result += [pattern(f"F4_{k}") for k in range(1, max_f4 + 1)]
    skipped = []
    for name in _figures():
        if is_transcribed(name):
            result.append(pattern(name))
        else:
            skipped.append(name)
    if skipped:
        logger.warning("catalog: skipping untranscribed patterns %s", ", ".join(skipped))
    result.append(pattern("C4"))
    return result


def obstructions(role: str = OBSTRUCTION_1PO, max_f3: int = 3, max_f4: int = 1) -> List[Pattern]:
    return [p for p in catalog(max_f3, max_f4) if p.role == role]


# Grid coordinates (row, col) of an induced model of F1 in the 6x6 grid
GRID_F1_CELLS = {
    0: [(1, 1), (1, 2), (1, 3), (1, 4)],
    1: [(2, 1), (2, 2), (2, 3), (2, 4)],
    2: [(0, 0), (1, 0)],
    3: [(2, 0), (3, 0)],
    4: [(1, 5), (0, 5)],
    5: [(2, 5)],
}


def grid_f1_model():
    """The 6x6 grid and an induced-minor model of F1 inside it"""
    host = grid(6)
    model = MinorModel({p: frozenset(r * 6 + c for r, c in cells) for p, cells in GRID_F1_CELLS.items()})
    return host, model
