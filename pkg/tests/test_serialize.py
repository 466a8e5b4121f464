from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prodcolor.arcshift import SetColoring
from prodcolor.errors import ParseError
from prodcolor.fractional import FractionalColoring
from prodcolor.graphs import CATALOG, Digraph, Graph, add_loops, complete_digraph, named
from prodcolor.serialize import (
    coloring_from_obj,
    coloring_to_obj,
    digraph_from_obj,
    digraph_to_dot,
    digraph_to_obj,
    fractional_coloring_from_obj,
    fractional_coloring_to_obj,
    graph_from_obj,
    graph_to_dot,
    graph_to_obj,
    parse_digraph,
    parse_graph,
    serialize_digraph,
    serialize_graph,
    set_coloring_from_obj,
    set_coloring_to_obj,
)
from prodcolor.solvers import Coloring


def test_catalog_round_trips():
    for name in CATALOG:
        g = named(name)
        assert parse_graph(serialize_graph(g)) == g
        assert graph_from_obj(graph_to_obj(g)) == g


def test_round_trip_with_loops():
    g = add_loops(named("petersen"))
    assert parse_graph(serialize_graph(g)) == g
    assert graph_from_obj(graph_to_obj(g)) == g


def test_parse_path_example():
    g = parse_graph("3 2\n0 1\n1 2")
    assert g.n == 3
    assert g.edges == frozenset({(0, 1), (1, 2)})


def test_parse_digraph_digon():
    d = parse_digraph("2 2\n0 -> 1\n1 -> 0")
    assert d.arcs == frozenset({(0, 1), (1, 0)})


def test_digraph_round_trips():
    for d in (complete_digraph(4), Digraph.from_arcs(3, [(0, 1), (2, 1)])):
        assert parse_digraph(serialize_digraph(d)) == d
        assert digraph_from_obj(digraph_to_obj(d)) == d


def test_parse_skips_blanks_and_comments():
    g = parse_graph("# a path\n3 2\n\n0 1\n# middle\n1 2\n")
    assert g.edges == frozenset({(0, 1), (1, 2)})


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError, match="line 2.*out of range"):
        parse_graph("2 1\n0 5")
    with pytest.raises(ParseError, match="line 3.*self-edge"):
        parse_graph("3 2\n0 1\n2 2")
    with pytest.raises(ParseError, match="line 2.*expected"):
        parse_graph("2 1\n0 1 junk")
    with pytest.raises(ParseError, match="line 1.*header"):
        parse_graph("nonsense")
    with pytest.raises(ParseError, match="promises 3 edges"):
        parse_graph("3 3\n0 1\n1 2")
    with pytest.raises(ParseError, match="line 1"):
        parse_graph("")
    with pytest.raises(ParseError, match="line 2.*expected 'x -> y'"):
        parse_digraph("2 1\n0 1")
    with pytest.raises(ParseError, match="self-arc"):
        parse_digraph("2 1\n1 -> 1")


def test_loop_header_round_trip():
    g = Graph.from_edges(4, [(0, 1)], loops=[2, 0])
    text = serialize_graph(g)
    assert text.splitlines()[0] == "4 1 loops: 0 2"
    assert parse_graph(text) == g


def test_one_based_display():
    g = Graph.from_edges(3, [(0, 2)], loops=[1])
    text = serialize_graph(g, one_based=True)
    assert text.splitlines()[0] == "3 1 loops: 2"
    assert "1 3" in text
    d = Digraph.from_arcs(2, [(0, 1)])
    assert "1 -> 2" in serialize_digraph(d, one_based=True)


def test_dot_output():
    g = Graph.from_edges(2, [(0, 1)], loops=[0])
    dot = graph_to_dot(g)
    assert dot.startswith("graph {")
    assert "0 -- 1;" in dot and "0 -- 0;" in dot
    d = digraph_to_dot(Digraph.from_arcs(2, [(1, 0)]))
    assert d.startswith("digraph {") and "1 -> 0;" in d


def test_coloring_objects():
    c = Coloring((0, 1, 2, 0), 3)
    assert coloring_from_obj(coloring_to_obj(c)) == c
    sc = SetColoring((frozenset({0, 1}), frozenset({2, 3})), 4, 2)
    assert set_coloring_from_obj(set_coloring_to_obj(sc)) == sc
    sc_any = SetColoring((frozenset(), frozenset({1})), 2, None)
    assert set_coloring_from_obj(set_coloring_to_obj(sc_any)) == sc_any


def test_fractional_coloring_objects():
    fc = FractionalColoring(
        (frozenset({0, 2}), frozenset({1, 3})),
        (Fraction(1, 2), Fraction(3, 2)),
    )
    obj = fractional_coloring_to_obj(fc)
    assert obj["value"] == [2, 1]
    assert fractional_coloring_from_obj(obj) == fc


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_random_graph_round_trips(data):
    n = data.draw(st.integers(0, 7))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = data.draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    loops = data.draw(st.lists(st.integers(0, max(n - 1, 0)), max_size=n)) if n else []
    g = Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep], loops)
    assert parse_graph(serialize_graph(g)) == g
    assert graph_from_obj(graph_to_obj(g)) == g
