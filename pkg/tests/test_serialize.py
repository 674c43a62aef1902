"""graph6, edge list, DOT and JSON formats"""
import json

import networkx as nx
import pytest
from hypothesis import given

from errors import ParseError, UnsupportedFormatError
from graphs.named import complete, complete_bipartite, cycle, empty, path
from oracles.orientation import Orientation
from structural.recognize import recognize
from tests.strategies import graphs
from workbench.serialize import (
    TextFormat,
    certificate_to_json,
    detect_format,
    from_dot,
    from_edgelist,
    from_graph6,
    from_json,
    parse,
    read_graph6_lines,
    serialize,
    to_edgelist,
    to_graph6,
    to_networkx,
)


@pytest.mark.parametrize("graph,code", [
    (empty(0), "?"),
    (complete(1), "@"),
    (complete(2), "A_"),
    (empty(2), "A?"),
])
def test_graph6_known_codes(graph, code):
    assert to_graph6(graph) == code
    assert from_graph6(code) == graph


def test_graph6_header_is_accepted():
    assert from_graph6(">>graph6<<A_") == complete(2)


def test_graph6_long_vertex_count():
    code = to_graph6(empty(63))
    assert code.startswith("~??~")
    assert from_graph6(code) == empty(63)


@pytest.mark.parametrize("code,column", [
    ("A", 2),        # missing edge byte
    ("A__", 3),      # one byte too many
    ("A`", 2),       # padding bit set
    ("A ", 2),       # outside the printable graph6 range
    ("", 1),
])
def test_graph6_errors(code, column):
    with pytest.raises(ParseError) as info:
        from_graph6(code)
    assert info.value.column == column


def test_read_graph6_lines_reports_line_numbers():
    graphs_read = list(read_graph6_lines("@\n\nA_\n"))
    assert graphs_read == [complete(1), complete(2)]
    with pytest.raises(ParseError) as info:
        list(read_graph6_lines("@\nA\n"))
    assert info.value.line == 2


@pytest.mark.property_based
@given(graphs(min_n=1, max_n=10))
def test_graph6_matches_networkx(g):
    reference = nx.to_graph6_bytes(to_networkx(g), header=False).decode().strip()
    assert to_graph6(g) == reference
    assert from_graph6(reference) == g


def test_graph6_goes_through_networkx_codec(monkeypatch):
    calls = []
    write, read = nx.to_graph6_bytes, nx.from_graph6_bytes

    def spy_write(g, **kwargs):
        calls.append("write")
        return write(g, **kwargs)

    def spy_read(data):
        calls.append("read")
        return read(data)

    monkeypatch.setattr(nx, "to_graph6_bytes", spy_write)
    monkeypatch.setattr(nx, "from_graph6_bytes", spy_read)
    assert from_graph6(to_graph6(cycle(5))) == cycle(5)
    assert calls == ["write", "read"]


def test_graph6_rejects_padding_before_networkx(monkeypatch):
    monkeypatch.setattr(nx, "from_graph6_bytes", lambda data: pytest.fail("decoder reached"))
    with pytest.raises(ParseError) as info:
        from_graph6("A`")
    assert info.value.column == 2


def test_edgelist_p3():
    assert to_edgelist(path(3)) == "n=3\n0 1\n1 2"
    assert from_edgelist("n=3\n0 1\n1 2") == path(3)


def test_edgelist_without_header_and_with_comments():
    text = "# a path\n0 1  # first edge\n\n1 2\n"
    assert from_edgelist(text) == path(3)


def test_edgelist_header_keeps_isolated_vertices():
    assert from_edgelist("n=4\n0 1").n == 4


@pytest.mark.parametrize("text,line,column", [
    ("n=2\n0 5", 2, 3),
    ("0 0", 1, 3),
    ("0 x", 1, 3),
    ("0 1 2", 1, 5),
    ("0 1\nn=3", 2, 1),
    ("n=-1", 1, 3),
])
def test_edgelist_errors(text, line, column):
    with pytest.raises(ParseError) as info:
        from_edgelist(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_dot_graph_round_trip():
    text = serialize(cycle(4), TextFormat.DOT)
    assert text.startswith("graph G {")
    assert from_dot(text) == cycle(4)


def test_dot_orientation_round_trip():
    o = Orientation.from_arcs(path(3), [(0, 1), (2, 1)])
    text = serialize(o, "dot")
    assert "2 -> 1;" in text
    assert from_dot(text) == o


def test_dot_witness_colours_branch_sets():
    g = complete_bipartite(2, 3)
    text = serialize(recognize(g), TextFormat.DOT, host=g)
    assert text.count("fillcolor") == 5
    assert from_dot(text) == g


@pytest.mark.parametrize("text", [
    "strict graph G {\n  0 -- 1;\n",
    "digraph G {\n  0 -- 1;\n}",
    "graph G {\n  0 -- 1 -- 2;\n}",
    "node [shape=box];",
    "",
])
def test_dot_errors(text):
    with pytest.raises(ParseError):
        from_dot(text)


def test_certificate_json_field_order():
    data = json.loads(certificate_to_json(recognize(cycle(4))))
    assert list(data) == ["verdict", "orientation", "witness", "reason"]
    assert data["verdict"] == "accept" and data["witness"] is None


def test_rejecting_certificate_json():
    g = complete_bipartite(2, 3)
    data = json.loads(serialize(recognize(g), "json"))
    assert data["orientation"] is None
    assert data["witness"]["pattern"] == "K2_3"
    assert sorted(int(k) for k in data["witness"]["branch_sets"]) == [0, 1, 2, 3, 4]


def test_certificate_json_round_trip():
    for g in (cycle(5), complete_bipartite(2, 3)):
        certificate = recognize(g)
        assert from_json(certificate_to_json(certificate), host=g) == certificate


def test_accepting_certificate_needs_its_host():
    with pytest.raises(ParseError):
        from_json(certificate_to_json(recognize(cycle(4))))


def test_graph_json():
    text = serialize(path(3), TextFormat.JSON)
    assert json.loads(text) == {"n": 3, "edges": [[0, 1], [1, 2]]}
    assert parse(text, "json") == path(3)


@pytest.mark.parametrize("text", ['{"n": 2, "edges": [[0, 1]', "[1, 2]", '{"edges": []}', '{"verdict": "maybe"}'])
def test_json_errors(text):
    with pytest.raises(ParseError):
        from_json(text)


def test_json_error_position():
    with pytest.raises(ParseError) as info:
        from_json('{\n  "n": 3,\n  "edges": [[0, 1],]\n}')
    assert info.value.line == 3


def test_unsupported_combinations():
    o = Orientation.from_arcs(path(2), [(0, 1)])
    with pytest.raises(UnsupportedFormatError):
        serialize(o, TextFormat.GRAPH6)
    with pytest.raises(UnsupportedFormatError):
        serialize(recognize(complete_bipartite(2, 3)), TextFormat.DOT)


@pytest.mark.parametrize("text,fmt", [
    ('{"n": 1, "edges": []}', TextFormat.JSON),
    ("graph G {\n}", TextFormat.DOT),
    ("digraph {\n}", TextFormat.DOT),
    ("A_", TextFormat.GRAPH6),
    (">>graph6<<A_", TextFormat.GRAPH6),
    ("n=3\n0 1", TextFormat.EDGELIST),
    ("0 1\n1 2", TextFormat.EDGELIST),
])
def test_detect_format(text, fmt):
    assert detect_format(text) is fmt
