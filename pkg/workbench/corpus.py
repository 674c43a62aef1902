"""
Exhaustive enumeration of small connected graphs, one per isomorphism class
"""
import logging
from collections import defaultdict
from pathlib import Path
from typing import Dict, List, Tuple, Union

import networkx as nx
from tqdm import tqdm

import config
from errors import EnumerationRangeError
from graphs.graph import Graph, build_graph
from workbench.serialize import from_graph6, read_graph6_lines, to_graph6, to_networkx
from workbench.storage import CorpusCache

logger = logging.getLogger(__name__)


def invariant(graph: Graph) -> Tuple:
    """Isomorphism invariant: edge count, degree sequence, sorted neighbour-degree profiles"""
    degrees = [graph.degree(v) for v in graph.vertices]
    profiles = sorted(
        (degrees[v], tuple(sorted(degrees[u] for u in graph.adj[v]))) for v in graph.vertices
    )
    return graph.num_edges, tuple(profiles)


def _extend(previous: List[Graph], n: int, progress: bool) -> List[Graph]:
    """Every connected graph has a non-cut vertex, so joining a new vertex to
    each non-empty subset of each (n-1)-vertex representative reaches all of them"""
    buckets: Dict[Tuple, List[nx.Graph]] = defaultdict(list)
    found: List[Graph] = []
    new = n - 1
    for base in tqdm(previous, desc=f"n={n}", disable=not progress, leave=False):
        base_edges = list(base.edges())
        for mask in range(1, 1 << new):
            candidate = build_graph(n, base_edges + [(u, new) for u in range(new) if mask >> u & 1])
            key = invariant(candidate)
            bucket = buckets[key]
            shape = to_networkx(candidate)
            if any(nx.is_isomorphic(shape, other) for other in bucket):
                continue
            bucket.append(shape)
            found.append(candidate)
    logger.debug("n=%d: %d classes in %d invariant buckets", n, len(found), len(buckets))
    return found


def _canonical_sort(graphs: List[Graph]) -> List[Graph]:
    return sorted(graphs, key=to_graph6)


def _builtin(n: int, cache: CorpusCache, use_cache: bool, progress: bool) -> List[Graph]:
    if n == 1:
        return [build_graph(1, [])]

    def compute() -> List[str]:
        previous = _builtin(n - 1, cache, use_cache, progress)
        return [to_graph6(g) for g in _canonical_sort(_extend(previous, n, progress))]

    key = config.CORPUS_KEY.format(n=n)
    codes = cache.get_or_fetch(key, compute) if use_cache else compute()
    return [from_graph6(code) for code in codes]


def load_corpus(path: Union[str, Path], n: int) -> List[Graph]:
    """Connected graphs on ``n`` vertices from a graph6 file, one graph per line"""
    text = Path(path).read_text()
    graphs = [g for g in read_graph6_lines(text) if g.n == n and g.is_connected()]
    logger.info("Loaded %d connected graphs with n=%d from %s", len(graphs), n, path)
    return graphs


def enumerate_connected(n: int, corpus: Union[str, Path] = None, use_cache: bool = True,
                        progress: bool = False, cache: CorpusCache = None) -> List[Graph]:
    """All connected graphs on ``n`` vertices, sorted by graph6.

    Built-in enumeration covers n <= 8; larger n needs a graph6 ``corpus``.
    """
    if n < 1:
        raise EnumerationRangeError(f"n must be at least 1, got {n}")
    if corpus is not None:
        return load_corpus(corpus, n)
    if n > config.LIMITS["builtin_enumeration_n"]:
        raise EnumerationRangeError(
            f"built-in enumeration stops at n={config.LIMITS['builtin_enumeration_n']}; "
            f"pass a graph6 corpus for n={n}"
        )
    return _builtin(n, cache or CorpusCache(), use_cache, progress)


def connected_up_to(n_max: int, **kwargs) -> List[Graph]:
    graphs: List[Graph] = []
    for n in range(1, n_max + 1):
        graphs.extend(enumerate_connected(n, **kwargs))
    return graphs
