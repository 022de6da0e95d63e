import io
import random

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

import oracle
from strongdom.errors import ParseError
from strongdom.graph import Graph, complete, enumerate_labeled_graphs, path, random_graph
from strongdom.io import (
    ReportRecord,
    dumps_report,
    emit_report,
    load_report,
    parse_edge_list,
    parse_graph6,
    write_edge_list,
    write_graph6,
)
from test_graph import graphs


def test_edge_list_examples():
    assert parse_edge_list("3 2\n0 1\n1 2\n") == path(3)
    assert write_edge_list(path(3)) == "3 2\n0 1\n1 2\n"
    assert write_edge_list(parse_edge_list("3 2\n2 1\n\n1 0\n")) == "3 2\n0 1\n1 2\n"


@pytest.mark.parametrize("text,line", [
    ("2 1\n0 0\n", 2),
    ("3 1\n0 5\n", 2),
    ("3 2\n0 1\n", 3),
    ("3 1\n0 1\n1 2\n", 3),
    ("3 x\n", 1),
    ("3 2\n0 1\n1 0\n", 3),
    ("3 1\n0 1 2\n", 2),
    ("", 1),
])
def test_edge_list_errors_carry_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_edge_list(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_graph6_examples():
    assert parse_graph6("A_") == complete(2)
    assert write_graph6(complete(2)) == "A_"
    assert parse_graph6("E???") == Graph(6)
    assert parse_graph6(">>graph6<<A_\n") == complete(2)


@pytest.mark.parametrize("bad", ["", "A", "A_?", "A`", "B\x20", "~??", "~??~??", "~~?????~?"])
def test_graph6_rejects(bad):
    with pytest.raises(ParseError):
        parse_graph6(bad)


def test_graph6_prefix_sizes():
    for n in (62, 63, 500):
        g = random_graph(n, 0.02, n)
        text = write_graph6(g)
        assert text.startswith("~") == (n > 62)
        assert parse_graph6(text) == g


def test_graph6_matches_textbook_encoder_exhaustively():
    for n in range(1, 6):
        for g in enumerate_labeled_graphs(n):
            s = write_graph6(g)
            assert s == oracle.graph6_encode(g.n, g.edges)
            assert parse_graph6(s) == g


def test_graph6_fuzzed_round_trip():
    rng = random.Random(7)
    for _ in range(1000):
        g = random_graph(rng.randint(1, 40), rng.random(), rng.randrange(10**9))
        assert parse_graph6(write_graph6(g)) == g


@settings(max_examples=300, suppress_health_check=[HealthCheck.too_slow])
@given(graphs(max_n=12), st.integers(0, 10**6), st.integers(0, 255))
def test_mutated_graph6_never_crashes(g, pos, byte):
    text = write_graph6(g)
    i = pos % (len(text) + 1)
    mutated = text[:i] + chr(byte) + text[i + 1:]
    try:
        h = parse_graph6(mutated)
    except ParseError:
        return
    assert isinstance(h, Graph)


@settings(max_examples=300)
@given(graphs(max_n=10), st.integers(0, 10**6), st.integers(0, 127))
def test_mutated_edge_list_never_crashes(g, pos, byte):
    text = write_edge_list(g)
    i = pos % len(text)
    mutated = text[:i] + chr(byte) + text[i + 1:]
    try:
        h = parse_edge_list(mutated)
    except ParseError:
        return
    assert isinstance(h, Graph)


@settings(max_examples=200)
@given(graphs(max_n=10))
def test_edge_list_round_trip(g):
    assert parse_edge_list(write_edge_list(g)) == g


def _record(i):
    return ReportRecord("edge-deletion", {"graph6": "A_", "index": i}, {"gamma_st_G": i, "lower": "2/3"},
                        "applicable", i % 3 != 0, i % 2 == 0, None, {"methods": {"G": "bnb"}})


def test_report_round_trip():
    assert dumps_report([]) == ""
    recs = [_record(i) for i in range(1000)]
    buf = io.StringIO()
    assert emit_report(recs, buf) == 1000
    text = buf.getvalue()
    assert text.count("\n") == 1000
    assert load_report(text) == recs
    assert load_report(io.StringIO(text)) == recs


def test_report_line_has_theorem_and_quantities():
    line = dumps_report([_record(1)])
    assert '"theorem":"edge-deletion"' in line and '"quantities"' in line and '"pass":true' in line


def test_report_key_order_is_stable():
    a = dumps_report([_record(4)])
    assert a == dumps_report([ReportRecord.from_dict(load_report(a)[0].to_dict())])


def test_report_errors_carry_line():
    good = dumps_report([_record(1)])
    with pytest.raises(ParseError) as info:
        load_report(good + "{not json\n")
    assert info.value.line == 2
    with pytest.raises(ParseError) as info:
        load_report(good + good + '{"theorem": "x"}\n')
    assert info.value.line == 3
    with pytest.raises(ParseError):
        load_report("[1, 2]\n")
