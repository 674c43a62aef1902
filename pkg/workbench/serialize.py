"""
Text formats: graph6, edge list, DOT and JSON
"""
import json
import re
from enum import Enum
from typing import Iterator, List, Optional, Union

import networkx as nx

import config
from errors import InvalidGraphError, ParseError, UnsupportedFormatError
from graphs.graph import Graph, build_graph
from oracles.orientation import Orientation
from patterns.containment import MinorModel
from structural.certificate import Certificate, Verdict, Witness


class TextFormat(str, Enum):
    GRAPH6 = "graph6"
    EDGELIST = "edgelist"
    DOT = "dot"
    JSON = "json"


GRAPH6_HEADER = ">>graph6<<"
_BIAS = 63


# -- graph6 ------------------------------------------------------------------

def to_networkx(graph: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(graph.vertices)
    g.add_edges_from(graph.edges())
    return g


def to_graph6(graph: Graph) -> str:
    """graph6 without header, as written by networkx"""
    if graph.n >= 2 ** 36:
        raise InvalidGraphError(f"graph6 cannot encode n={graph.n}")
    return nx.to_graph6_bytes(to_networkx(graph), header=False).decode("ascii").strip()


def _check_graph6(text: str, line: int, offset: int) -> None:
    """Raise ParseError at the first offending column; networkx reports no positions"""
    if not text:
        raise ParseError("empty graph6 string", line, offset + 1)
    for i, ch in enumerate(text):
        if not _BIAS <= ord(ch) <= 126:
            raise ParseError(f"character {ch!r} is outside the graph6 range", line, offset + i + 1)

    values = [ord(ch) - _BIAS for ch in text]
    if values[0] < 63:
        n, start = values[0], 1
    elif len(values) >= 2 and values[1] == 63:
        if len(values) < 8:
            raise ParseError("truncated 36-bit vertex count", line, offset + len(text) + 1)
        n, start = 0, 8
        for v in values[2:8]:
            n = (n << 6) | v
    else:
        if len(values) < 4:
            raise ParseError("truncated 18-bit vertex count", line, offset + len(text) + 1)
        n, start = 0, 4
        for v in values[1:4]:
            n = (n << 6) | v

    needed = n * (n - 1) // 2
    expected = (needed + 5) // 6
    body = values[start:]
    if len(body) != expected:
        column = offset + start + min(len(body), expected) + 1
        raise ParseError(f"expected {expected} edge bytes for n={n}, got {len(body)}", line, column)
    if expected and body[-1] & ((1 << (expected * 6 - needed)) - 1):
        raise ParseError("non-zero padding bits", line, offset + len(text))


def from_graph6(text: str, line: int = 1) -> Graph:
    offset = 0
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):]
        offset = len(GRAPH6_HEADER)
    text = text.rstrip("\r\n")
    _check_graph6(text, line, offset)
    try:
        shape = nx.from_graph6_bytes(text.encode("ascii"))
    except (nx.NetworkXError, ValueError) as exc:
        raise ParseError(f"invalid graph6 string: {exc}", line, offset + 1) from exc
    return build_graph(shape.number_of_nodes(), list(shape.edges()))

def read_graph6_lines(text: str) -> Iterator[Graph]:
    """One graph per non-empty line, as in a corpus file"""
    for number, raw in enumerate(text.splitlines(), start=1):
        if raw.strip():
            yield from_graph6(raw.strip(), line=number)


# -- edge list ---------------------------------------------------------------

_HEADER = re.compile(r"^\s*n\s*=\s*(\S*)\s*$")


def to_edgelist(graph: Graph) -> str:
    lines = [f"n={graph.n}"] + [f"{u} {v}" for u, v in graph.edges()]
    return "\n".join(lines)


def _int_token(token: str, line: int, column: int) -> int:
    if not re.fullmatch(r"\d+", token):
        raise ParseError(f"expected a non-negative integer, got {token!r}", line, column)
    return int(token)


def from_edgelist(text: str) -> Graph:
    """Optional ``n=<N>`` first line, then ``u v`` per line; ``#`` starts a comment"""
    n: Optional[int] = None
    edges = []
    positions = []
    seen_content = False
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        if not content.strip():
            continue
        header = _HEADER.match(content)
        if header:
            if seen_content:
                raise ParseError("the n= header must come first", number, content.index("n") + 1)
            n = _int_token(header.group(1), number, content.index("=") + 2)
            seen_content = True
            continue
        seen_content = True
        tokens = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", content)]
        if len(tokens) != 2:
            column = tokens[2][1] if len(tokens) > 2 else len(content.rstrip()) + 1
            raise ParseError(f"expected 'u v', got {content.strip()!r}", number, column)
        u = _int_token(tokens[0][0], number, tokens[0][1])
        v = _int_token(tokens[1][0], number, tokens[1][1])
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", number, tokens[1][1])
        edges.append((u, v))
        positions.append((number, tokens))

    if n is None:
        n = max((max(e) for e in edges), default=-1) + 1
    for (u, v), (number, tokens) in zip(edges, positions):
        for value, (_, column) in zip((u, v), tokens):
            if value >= n:
                raise ParseError(f"vertex {value} outside 0..{n - 1}", number, column)
    return build_graph(n, edges)


# -- DOT ---------------------------------------------------------------------

def _dot_graph(graph: Graph, attributes: dict = None) -> str:
    attributes = attributes or {}
    lines = ["graph G {"]
    for v in graph.vertices:
        lines.append(f"  {v}{attributes.get(v, '')};")
    lines.extend(f"  {u} -- {v};" for u, v in graph.edges())
    lines.append("}")
    return "\n".join(lines)


def _dot_orientation(orientation: Orientation) -> str:
    lines = ["digraph G {"]
    lines.extend(f"  {v};" for v in orientation.host.vertices)
    lines.extend(f"  {x} -> {y};" for x, y in orientation.arcs())
    lines.append("}")
    return "\n".join(lines)


def _dot_witness(graph: Graph, witness: Witness) -> str:
    palette = config.BRANCH_SET_PALETTE
    attributes = {}
    for k, members in witness.model.branch_sets.items():
        colour = palette[k % len(palette)]
        for x in members:
            attributes[x] = f' [label="{x}/{k}", style=filled, fillcolor="{colour}"]'
    return _dot_graph(graph, attributes)


_DOT_EDGE = re.compile(r"^\s*(\d+)\s*(--|->)\s*(\d+)\s*;?\s*(\[.*\])?\s*;?\s*$")
_DOT_NODE = re.compile(r"^\s*(\d+)\s*(\[.*\])?\s*;?\s*$")


def from_dot(text: str) -> Union[Graph, Orientation]:
    """Read the DOT subset this module writes: ``graph`` gives a Graph,
    ``digraph`` an Orientation of the underlying graph"""
    lines = text.splitlines()
    directed = None
    n = 0
    edges = []
    for number, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("//"):
            continue
        if directed is None:
            head = re.match(r"^(strict\s+)?(di)?graph\b[^{]*\{\s*$", stripped)
            if not head:
                raise ParseError("expected 'graph {' or 'digraph {'", number, 1)
            directed = bool(head.group(2))
            continue
        if stripped == "}":
            break
        edge = _DOT_EDGE.match(raw)
        if edge:
            arrow = edge.group(2)
            if (arrow == "->") != directed:
                raise ParseError(f"'{arrow}' does not match the graph kind", number, raw.index(arrow) + 1)
            u, v = int(edge.group(1)), int(edge.group(3))
            edges.append((u, v))
            n = max(n, u + 1, v + 1)
            continue
        node = _DOT_NODE.match(raw)
        if node:
            n = max(n, int(node.group(1)) + 1)
            continue
        raise ParseError(f"unrecognized DOT statement {stripped!r}", number, len(raw) - len(raw.lstrip()) + 1)
    else:
        if directed is None:
            raise ParseError("empty DOT document", 1, 1)
        raise ParseError("missing closing '}'", len(lines), 1)

    try:
        graph = build_graph(n, edges)
        return Orientation.from_arcs(graph, edges) if directed else graph
    except InvalidGraphError as e:
        raise ParseError(str(e), 1, 1) from e


# -- JSON --------------------------------------------------------------------

def graph_to_json(graph: Graph) -> str:
    return json.dumps({"n": graph.n, "edges": [list(e) for e in graph.edges()]})


def certificate_to_dict(certificate: Certificate) -> dict:
    """Fixed field order: verdict, orientation, witness, reason (then sink for rooted questions)"""
    data = {
        "verdict": certificate.verdict.value,
        "orientation": None if certificate.orientation is None
        else [list(arc) for arc in certificate.orientation.arcs()],
        "witness": None if certificate.witness is None
        else {"pattern": certificate.witness.pattern, "branch_sets": certificate.witness.model.as_dict()},
        "reason": certificate.reason,
    }
    if certificate.sink is not None:
        data["sink"] = certificate.sink
    return data


def certificate_to_json(certificate: Certificate, indent: int = None) -> str:
    return json.dumps(certificate_to_dict(certificate), indent=indent)


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno) from e


def from_json(text: str, host: Graph = None) -> Union[Graph, Certificate]:
    """A graph object ``{"n", "edges"}`` or a certificate; accepting
    certificates need ``host`` to rebuild their orientation"""
    data = _load_json(text)
    if not isinstance(data, dict):
        raise ParseError("expected a JSON object", 1, 1)
    try:
        if "verdict" not in data:
            return build_graph(int(data["n"]), [tuple(e) for e in data["edges"]])
        verdict = Verdict(data["verdict"])
        orientation = None
        if data.get("orientation") is not None:
            if host is None:
                raise ParseError("an accepting certificate needs its host graph", 1, 1)
            orientation = Orientation.from_arcs(host, [tuple(a) for a in data["orientation"]])
        witness = None
        if data.get("witness") is not None:
            sets = data["witness"]["branch_sets"]
            model = MinorModel({int(k): frozenset(v) for k, v in sets.items()})
            witness = Witness(data["witness"]["pattern"], model)
        return Certificate(verdict, orientation, witness, data.get("reason", ""), data.get("sink"))
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, ParseError):
            raise
        raise ParseError(f"invalid JSON document: {e}", 1, 1) from e


# -- dispatch ----------------------------------------------------------------

def serialize(value: Union[Graph, Orientation, Certificate], fmt: Union[TextFormat, str],
              host: Graph = None) -> str:
    """Render a graph, orientation or certificate.

    DOT certificates draw the orientation (accept) or colour the witness
    branch sets on ``host`` (reject).
    """
    fmt = TextFormat(fmt)
    if isinstance(value, Graph):
        if fmt is TextFormat.GRAPH6:
            return to_graph6(value)
        if fmt is TextFormat.EDGELIST:
            return to_edgelist(value)
        if fmt is TextFormat.DOT:
            return _dot_graph(value)
        return graph_to_json(value)
    if isinstance(value, Orientation):
        if fmt is TextFormat.DOT:
            return _dot_orientation(value)
        if fmt is TextFormat.JSON:
            return json.dumps([list(a) for a in value.arcs()])
    if isinstance(value, Certificate):
        if fmt is TextFormat.JSON:
            return certificate_to_json(value)
        if fmt is TextFormat.DOT:
            if value.orientation is not None:
                return _dot_orientation(value.orientation)
            if value.witness is not None and host is not None:
                return _dot_witness(host, value.witness)
    raise UnsupportedFormatError(f"cannot write {type(value).__name__} as {fmt.value}")


def parse(text: str, fmt: Union[TextFormat, str], host: Graph = None):
    fmt = TextFormat(fmt)
    if fmt is TextFormat.GRAPH6:
        return from_graph6(text.strip())
    if fmt is TextFormat.EDGELIST:
        return from_edgelist(text)
    if fmt is TextFormat.DOT:
        return from_dot(text)
    return from_json(text, host)


def detect_format(text: str) -> TextFormat:
    """Best guess for untagged input: JSON, DOT, edge list, else graph6"""
    stripped = text.strip()
    if stripped.startswith("{"):
        return TextFormat.JSON
    if re.match(r"^(strict\s+)?(di)?graph\b", stripped):
        return TextFormat.DOT
    if stripped.startswith(GRAPH6_HEADER) or re.fullmatch(r"[?-~]+", stripped):
        return TextFormat.GRAPH6
    return TextFormat.EDGELIST
