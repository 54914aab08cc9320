import pytest

from cfcolor.coloring import ListAssignment, PartialColoring
from cfcolor.graphs import Hypergraph, derived_hypergraph
from cfcolor.smallgraphs import cycle_graph, path_graph, star_graph
from cfcolor.verify import is_pimds, is_pids, verify_cf


def test_valid_partial_coloring_with_witnesses():
    h = Hypergraph(4, [(0, 1, 2), (1, 2, 3)])
    f = PartialColoring({0: 5, 3: 5})
    report = verify_cf(h, f)
    assert report.valid
    assert [w.edge_index for w in report.witnesses] == [0, 1]
    assert report.witnesses[0].vertex == 0
    assert report.witnesses[0].color == 5


def test_smallest_unique_color_is_the_witness():
    h = Hypergraph(3, [(0, 1, 2)])
    f = PartialColoring({0: 9, 1: 2, 2: 4})
    report = verify_cf(h, f)
    assert report.witnesses[0].color == 2
    assert report.witnesses[0].vertex == 1


def test_edge_with_no_unique_color_fails():
    h = Hypergraph(4, [(0, 1), (2, 3)])
    f = PartialColoring({0: 1, 1: 1, 2: 1, 3: 2})
    report = verify_cf(h, f)
    assert not report.valid
    assert report.edge_violations == (0,)


def test_fully_uncolored_edge_fails():
    h = Hypergraph(3, [(0, 1), (1, 2)])
    f = PartialColoring({0: 1})
    report = verify_cf(h, f)
    assert not report.valid
    assert report.edge_violations == (1,)


def test_list_violations_reported():
    h = Hypergraph(2, [(0, 1)])
    f = PartialColoring({0: 7})
    lists = ListAssignment([(1, 2), (1, 2)])
    report = verify_cf(h, f, lists=lists)
    assert not report.valid
    assert report.list_violations == (0,)


def test_totality_enforced_when_requested():
    h = Hypergraph(3, [(0, 1), (1, 2)])
    f = PartialColoring({0: 1, 1: 2})
    assert verify_cf(h, f).valid
    report = verify_cf(h, f, require_total=True)
    assert not report.valid
    assert report.totality_violations == (2,)


def test_report_lines_mention_each_violation():
    h = Hypergraph(2, [(0, 1)])
    f = PartialColoring({0: 1, 1: 1})
    lines = "\n".join(verify_cf(h, f).lines())
    assert "no" in lines
    assert "edge 0" in lines


def test_is_pimds_on_star():
    g = star_graph(3)
    assert is_pimds(g, {0, 1})
    assert not is_pimds(g, {0})
    assert not is_pimds(g, {1, 2})
    assert not is_pimds(g, set())


def test_is_pids_on_path():
    g = path_graph(3)
    assert is_pids(g, {1})
    assert not is_pids(g, {0})
    assert not is_pids(g, {0, 2})


def test_c4_has_no_pids():
    g = cycle_graph(4)
    for mask in range(16):
        s = {v for v in range(4) if mask >> v & 1}
        assert not is_pids(g, s)


def test_pimds_matches_cf_definition():
    # a PIMDS is exactly a 1-colored set hitting every open neighborhood once
    g = cycle_graph(4)
    s = {0, 1}
    assert is_pimds(g, s)
    f = PartialColoring({v: 1 for v in s})
    assert verify_cf(derived_hypergraph(g, "open"), f).valid
