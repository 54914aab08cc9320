import pytest

from cfcolor import fileio
from cfcolor.coloring import ListAssignment, PartialColoring
from cfcolor.errors import InputFormatError
from cfcolor.graphs import Hypergraph
from cfcolor.smallgraphs import cycle_graph


def test_graph_round_trip():
    g = cycle_graph(5)
    assert fileio.parse_graph(fileio.format_graph(g)) == g


def test_graph_comments_and_blanks_ignored():
    text = "c a comment\n\np graph 2 1\nc another\ne 1 2\n"
    g = fileio.parse_graph(text)
    assert g.n == 2 and g.m == 1


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("e 1 2\n", "before header"),
        ("p graph 2 1\ne 1 1\n", "self-loop"),
        ("p graph 2 2\ne 1 2\ne 2 1\n", "duplicate edge"),
        ("p graph 2 1\ne 1 3\n", "out of range"),
        ("p graph 2 2\ne 1 2\n", "declares 2 edges"),
        ("p graph 2 1\nq 1 2\n", "unexpected record"),
        ("", "missing"),
    ],
)
def test_graph_errors_carry_context(text, fragment):
    with pytest.raises(InputFormatError, match=fragment):
        fileio.parse_graph(text)


def test_graph_errors_carry_line_numbers():
    with pytest.raises(InputFormatError, match="line 3"):
        fileio.parse_graph("c x\np graph 2 1\ne 1 1\n")


def test_hypergraph_round_trip():
    h = Hypergraph(4, [(0, 1, 2), (2, 3)])
    assert fileio.parse_hypergraph(fileio.format_hypergraph(h)) == h


def test_hypergraph_rejects_empty_edge():
    with pytest.raises(InputFormatError, match="empty"):
        fileio.parse_hypergraph("p hgraph 2 1\nh\n")


def test_formula_round_trip():
    from cfcolor.reductions import FIGURE_FORMULA

    text = fileio.format_formula(FIGURE_FORMULA)
    assert fileio.parse_formula(text) == FIGURE_FORMULA


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("p cnf 3 1\n1 2 0\n", "exactly 3"),
        ("p cnf 3 1\n1 2 -3 0\n", "positive"),
        ("p cnf 3 1\n1 2 4 0\n", "out of range"),
        ("p cnf 3 1\n1 2 3\n", "end in 0"),
        ("p cnf 3 1\n1 1 2 0\n", "distinct"),
    ],
)
def test_formula_errors(text, fragment):
    with pytest.raises(InputFormatError, match=fragment):
        fileio.parse_formula(text)


def test_coloring_round_trip():
    f = PartialColoring({0: 3, 2: 1})
    assert dict(fileio.parse_coloring(fileio.format_coloring(f), 3).items()) == {
        0: 3,
        2: 1,
    }


def test_coloring_rejects_double_assignment():
    with pytest.raises(InputFormatError, match="twice"):
        fileio.parse_coloring("v 1 2\nv 1 3\n", 2)


def test_lists_round_trip_explicit_and_range():
    lists = ListAssignment([(1, 5, 9), ("range", 1, 100)])
    text = fileio.format_lists(lists)
    back = fileio.parse_lists(text, 2)
    assert list(back.colors(0)) == [1, 5, 9]
    assert back.is_range(1)
    assert back.size(1) == 99
    assert back.contains(1, 99) and not back.contains(1, 100)


def test_lists_requires_every_vertex():
    with pytest.raises(InputFormatError, match="no list"):
        fileio.parse_lists("l 1 1 2\n", 2)
