"""
Crosscheck harness: structural recognizers against independent oracles
over every small connected graph
"""
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import pandas as pd
from tqdm import tqdm

import config
from classes.chordal import is_chordal
from classes.minor_free import is_k4_minor_free, is_outerplanar
from classes.reductions import is_2tree
from classes.separability import is_cyclically_orientable
from errors import InvalidStepError, UnknownSuiteError
from graphs.blocks import is_biconnected
from graphs.cycles import holes
from graphs.graph import Graph
from oracles.cyclic import cyclic_orientation_exists
from oracles.enumeration import EnumerationMode, enumerate_one_perfect, iter_one_perfect
from oracles.orientation import is_in_tree, sinks
from oracles.twosat import is_1po_2sat
from patterns.catalog import pattern
from patterns.containment import ContainmentMode, find_containment
from structural.biconnected import recognize_biconnected_rooted
from structural.recognize import RecognitionMode, recognize
from structural.sequence import build_sequence
from structural.witness import search_witness
from workbench.corpus import connected_up_to
from workbench.serialize import GRAPH6_HEADER, from_graph6, read_graph6_lines, to_graph6

logger = logging.getLogger(__name__)

# (predicate names, their values) for each failed comparison on one graph
Finding = Tuple[Tuple[str, ...], Tuple]

# brute-force cyclic orientation search is only run on graphs this small
CYCLIC_ORACLE_N = 6


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    max_n: int
    check: Callable[[Graph], List[Finding]]


@dataclass(frozen=True)
class Disagreement:
    graph6: str
    suite: str
    predicates: Tuple[str, ...]
    verdicts: Tuple


@dataclass
class CrosscheckReport:
    """Outcome of a sweep; empty ``disagreements`` means every equivalence held"""
    n_max: int
    graphs_checked: int
    disagreements: List[Disagreement] = field(default_factory=list)
    suites: Tuple[str, ...] = ()
    per_suite: Dict[str, int] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def to_dataframe(self) -> pd.DataFrame:
        rows = [
            {
                'graph6': d.graph6,
                'suite': d.suite,
                'predicates': " vs ".join(d.predicates),
                'verdicts': " / ".join(str(v) for v in d.verdicts),
            }
            for d in self.disagreements
        ]
        return pd.DataFrame(rows, columns=['graph6', 'suite', 'predicates', 'verdicts'])

    def summary_frame(self) -> pd.DataFrame:
        counts = {}
        for d in self.disagreements:
            counts[d.suite] = counts.get(d.suite, 0) + 1
        return pd.DataFrame([
            {
                'suite': name,
                'max_n': min(self.n_max, SUITES[name].max_n),
                'graphs': self.per_suite.get(name, 0),
                'disagreements': counts.get(name, 0),
            }
            for name in self.suites
        ])


def _compare(names: Sequence[str], values: Sequence) -> List[Finding]:
    values = tuple(values)
    return [] if len(set(values)) <= 1 else [(tuple(names), values)]


def _free_of(graph: Graph, names: Iterable[str]) -> bool:
    return search_witness(graph, names) is None


# -- suites --------------------------------------------------------------------

def check_twosat_vs_enumeration(graph: Graph) -> List[Finding]:
    findings = []
    for sink in [None, *graph.vertices]:
        sat = bool(is_1po_2sat(graph, sink))
        found = bool(enumerate_one_perfect(graph, EnumerationMode.FIRST, sink))
        label = "" if sink is None else f"[sink={sink}]"
        findings += _compare((f"is_1po_2sat{label}", f"enumerate_one_perfect{label}"), (sat, found))
    return findings


def check_sink_uniqueness(graph: Graph) -> List[Finding]:
    worst = max((len(sinks(o)) for o in iter_one_perfect(graph)), default=0)
    return [] if worst <= 1 else [(("max_sinks", "bound"), (worst, 1))]


def check_holes_cyclic(graph: Graph) -> List[Finding]:
    cycles = holes(graph)
    if not cycles:
        return []
    for orientation in iter_one_perfect(graph):
        for cycle in cycles:
            k = len(cycle)
            ahead = all(orientation.has_arc(cycle[i], cycle[(i + 1) % k]) for i in range(k))
            behind = all(orientation.has_arc(cycle[(i + 1) % k], cycle[i]) for i in range(k))
            if not (ahead or behind):
                return [(("hole_cyclic", "expected"), (False, True))]
    return []


def check_trees(graph: Graph) -> List[Finding]:
    if graph.num_edges != graph.n - 1:
        return []
    orientations = enumerate_one_perfect(graph, EnumerationMode.COLLECT)
    findings = _compare(("one_perfect_count", "n"), (len(orientations), graph.n))
    if not all(is_in_tree(o) for o in orientations):
        findings.append((("all_in_trees", "expected"), (False, True)))
    return findings


def check_cyclic_orientability(graph: Graph) -> List[Finding]:
    characterization = is_cyclically_orientable(graph)
    findings = _compare(
        ("is_cyclically_orientable", "K4_K2_3_induced_minor_free"),
        (characterization, _free_of(graph, ("K4", "K2_3"))),
    )
    if graph.n <= CYCLIC_ORACLE_N:
        findings += _compare(
            ("is_cyclically_orientable", "cyclic_orientation_exists"),
            (characterization, cyclic_orientation_exists(graph)),
        )
    return findings


def _sequence_found(graph: Graph, mode: RecognitionMode) -> bool:
    try:
        return build_sequence(graph, mode) is not None
    except InvalidStepError:
        return False


def _four_way(graph: Graph, mode: RecognitionMode, forbidden: Sequence[str]) -> List[Finding]:
    certificate = recognize(graph, mode)
    findings = _compare(
        ("is_1po_2sat", "induced_minor_free", "block_condition", "build_sequence"),
        (
            bool(is_1po_2sat(graph)),
            _free_of(graph, forbidden),
            certificate.accepted,
            _sequence_found(graph, mode),
        ),
    )
    if not certificate.verify(graph):
        findings.append((("certificate_verifies", "expected"), (False, True)))
    return findings


def check_k4mf_recognizer(graph: Graph) -> List[Finding]:
    if not is_k4_minor_free(graph):
        return []
    return _four_way(graph, RecognitionMode.K4MF, ("K2_3", "F1", "F2"))


def check_outerplanar_recognizer(graph: Graph) -> List[Finding]:
    if not is_outerplanar(graph):
        return []
    return _four_way(graph, RecognitionMode.OUTERPLANAR, ("K2_3", "F1", "F2"))


def check_k4mf_obstructions(graph: Graph) -> List[Finding]:
    one_perfect = bool(is_1po_2sat(graph))
    return _compare(
        ("1po_and_k4mf", "1po_and_cyclically_orientable", "K4_K2_3_F1_F2_free"),
        (
            one_perfect and is_k4_minor_free(graph),
            one_perfect and is_cyclically_orientable(graph),
            _free_of(graph, ("K4", "K2_3", "F1", "F2")),
        ),
    )


def check_outerplanar_obstructions(graph: Graph) -> List[Finding]:
    return _compare(
        ("1po_and_outerplanar", "K4_K2_3_K2_3_plus_F1_F2_free"),
        (
            bool(is_1po_2sat(graph)) and is_outerplanar(graph),
            _free_of(graph, ("K4", "K2_3", "K2_3_plus", "F1", "F2")),
        ),
    )


def check_rooted(graph: Graph) -> List[Finding]:
    if graph.n < 2 or not is_biconnected(graph) or not is_k4_minor_free(graph):
        return []
    findings = []
    verdicts = []
    for v in graph.vertices:
        certificate = recognize_biconnected_rooted(graph, v)
        verdicts.append(certificate.accepted)
        findings += _compare(
            (f"recognize_biconnected_rooted[{v}]", f"is_1po_2sat[sink={v}]"),
            (certificate.accepted, bool(is_1po_2sat(graph, v))),
        )
        if not certificate.verify(graph):
            findings.append(((f"rooted_certificate_verifies[{v}]", "expected"), (False, True)))
    if len(set(verdicts)) > 1:
        findings.append((("rooted_verdict_independent_of_root", "expected"), (False, True)))
    return findings


def check_biconnected_chordal(graph: Graph) -> List[Finding]:
    if graph.n < 2 or not is_biconnected(graph) or not is_k4_minor_free(graph):
        return []
    return _compare(("is_chordal", "is_2tree"), (is_chordal(graph) is not None, is_2tree(graph) is not None))


def check_k4_minor(graph: Graph) -> List[Finding]:
    engine = find_containment(graph, pattern("K4").graph, ContainmentMode.MINOR) is None
    return _compare(("is_k4_minor_free", "find_containment_K4"), (is_k4_minor_free(graph), engine))


def check_graph6(graph: Graph) -> List[Finding]:
    code = to_graph6(graph)
    decoded = from_graph6(code)
    findings = _compare(("with_header", "without_header"), (from_graph6(GRAPH6_HEADER + code), decoded))
    findings += _compare(("read_graph6_lines", "from_graph6"), (next(read_graph6_lines(code + "\n")), decoded))
    findings += _compare(("round_trip", "expected"), (decoded == graph, True))
    return findings


SUITES: Dict[str, Suite] = {
    s.name: s for s in [
        Suite("twosat-vs-enumeration", "2-SAT oracle agrees with exhaustive search, every forced sink", 6,
              check_twosat_vs_enumeration),
        Suite("sink-uniqueness", "every 1-perfect orientation has at most one sink", 6, check_sink_uniqueness),
        Suite("holes-cyclic", "every hole is oriented cyclically in every 1-perfect orientation", 6,
              check_holes_cyclic),
        Suite("trees", "a tree on n vertices has exactly n 1-perfect orientations, all in-trees", 7, check_trees),
        Suite("cyclic-orientability", "cyclically orientable iff K4/K2,3-induced-minor-free", 7,
              check_cyclic_orientability),
        Suite("k4mf-recognizer", "four-way equivalence on K4-minor-free graphs", 8, check_k4mf_recognizer),
        Suite("outerplanar-recognizer", "four-way equivalence on outerplanar graphs", 8,
              check_outerplanar_recognizer),
        Suite("k4mf-obstructions", "1-p.o. and K4-minor-free iff {K4,K2,3,F1,F2}-free", 7,
              check_k4mf_obstructions),
        Suite("outerplanar-obstructions", "1-p.o. and outerplanar iff {K4,K2,3,K2,3+,F1,F2}-free", 7,
              check_outerplanar_obstructions),
        Suite("rooted", "rooted recognizer agrees with forced-sink 2-SAT, for every root", 8, check_rooted),
        Suite("biconnected-chordal", "biconnected K4-minor-free: chordal iff 2-tree", 8,
              check_biconnected_chordal),
        Suite("k4-minor", "series-parallel reduction agrees with the containment engine", 7, check_k4_minor),
        Suite("graph6", "graph6 codes round-trip with and without header", 8, check_graph6),
    ]
}


# Short ids accepted wherever a suite name is.
SUITE_ALIASES: Dict[str, str] = {
    "lemma29": "sink-uniqueness",
    "lemma22": "holes-cyclic",
    "lemma210": "trees",
    "thm28": "cyclic-orientability",
    "thm51": "k4mf-recognizer",
    "thm61": "outerplanar-recognizer",
    "cor52": "k4mf-obstructions",
    "cor62": "outerplanar-obstructions",
    "lemma42": "biconnected-chordal",
}


def resolve_suites(names: Optional[Iterable[str]]) -> Tuple[str, ...]:
    """Canonical suite names, aliases mapped; sets come back in registry order"""
    if names is None:
        return tuple(SUITES)
    unordered = isinstance(names, (set, frozenset))
    names = tuple(dict.fromkeys(SUITE_ALIASES.get(n, n) for n in names))
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise UnknownSuiteError(
            f"unknown suite(s) {', '.join(unknown)}; expected one of {', '.join([*SUITES, *SUITE_ALIASES])}")
    if unordered:
        order = list(SUITES)
        names = tuple(sorted(names, key=order.index))
    return names


def check_graph(code: str, suite_names: Sequence[str]) -> List[Disagreement]:
    """Run the applicable suites on one graph; failures are recorded, not raised"""
    graph = from_graph6(code)
    result = []
    for name in suite_names:
        suite = SUITES[name]
        if graph.n > suite.max_n:
            continue
        try:
            findings = suite.check(graph)
        except Exception as e:
            logger.error("%s raised on %s: %s", name, code, e)
            findings = [(("exception",), (f"{type(e).__name__}: {e}",))]
        result.extend(Disagreement(code, name, predicates, verdicts) for predicates, verdicts in findings)
    return result


def _check_task(task: Tuple[str, Tuple[str, ...]]) -> List[Disagreement]:
    return check_graph(*task)


def crosscheck(n_max: int, suites: Iterable[str] = None, workers: int = None,
               progress: bool = False, corpus_kwargs: dict = None) -> CrosscheckReport:
    """Sweep the selected suites over every connected graph with 1..n_max vertices.

    Graphs are spread over a process pool; the merged report is ordered by
    graph6 string, then suite name.
    """
    names = resolve_suites(suites)
    started = time.time()
    graphs = connected_up_to(n_max, **(corpus_kwargs or {}))
    codes = sorted(to_graph6(g) for g in graphs)
    sizes = {code: from_graph6(code).n for code in codes}
    per_suite = {name: sum(1 for c in codes if sizes[c] <= SUITES[name].max_n) for name in names}

    workers = workers or config.WORKERS
    tasks = [(code, names) for code in codes]
    logger.info("Crosscheck n<=%d: %d graphs, suites %s, %d worker(s)", n_max, len(codes), ", ".join(names), workers)

    if workers <= 1:
        results = [_check_task(t) for t in tqdm(tasks, desc="crosscheck", disable=not progress)]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunk = max(1, len(tasks) // (workers * 8))
            results = list(tqdm(pool.map(_check_task, tasks, chunksize=chunk),
                                total=len(tasks), desc="crosscheck", disable=not progress))

    disagreements = sorted(
        (d for batch in results for d in batch),
        key=lambda d: (d.graph6, d.suite),
    )
    report = CrosscheckReport(
        n_max=n_max,
        graphs_checked=len(codes),
        disagreements=disagreements,
        suites=names,
        per_suite=per_suite,
        elapsed=time.time() - started,
    )
    if report.ok:
        logger.info("Crosscheck finished in %.1fs: no disagreements", report.elapsed)
    else:
        logger.warning("Crosscheck finished in %.1fs: %d disagreements", report.elapsed, len(disagreements))
    return report
