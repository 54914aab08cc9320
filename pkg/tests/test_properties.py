import random

from hypothesis import given, settings
from hypothesis import strategies as st

from cfcolor import fileio, solve
from cfcolor.coloring import ListAssignment, PartialColoring
from cfcolor.graphs import Graph, Hypergraph
from cfcolor.verify import verify_cf
from util import brute_force_cf, cf_valid


@st.composite
def graphs(draw, max_n=6):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, keep in zip(pairs, mask) if keep])


@st.composite
def hypergraphs(draw, max_n=6, max_m=5):
    n = draw(st.integers(min_value=1, max_value=max_n))
    m = draw(st.integers(min_value=1, max_value=max_m))
    edges = [
        draw(
            st.lists(
                st.integers(min_value=0, max_value=n - 1),
                min_size=1,
                max_size=n,
                unique=True,
            )
        )
        for _ in range(m)
    ]
    return Hypergraph(n, edges)


@st.composite
def colorings(draw, n, max_color=4):
    mapping = draw(
        st.dictionaries(
            st.integers(min_value=0, max_value=n - 1),
            st.integers(min_value=1, max_value=max_color),
        )
    )
    return PartialColoring(mapping)


@given(hypergraphs(), st.data())
@settings(max_examples=150, deadline=None)
def test_verify_matches_direct_definition(h, data):
    f = data.draw(colorings(h.n))
    for total in (False, True):
        assert (
            verify_cf(h, f, require_total=total).valid
            == cf_valid(h, f, require_total=total)
        )


@given(hypergraphs(max_n=5, max_m=4), st.data())
@settings(max_examples=80, deadline=None)
def test_solver_agrees_with_enumeration(h, data):
    entries = [
        tuple(
            sorted(
                data.draw(
                    st.lists(
                        st.integers(min_value=1, max_value=4),
                        min_size=1,
                        max_size=2,
                        unique=True,
                    )
                )
            )
        )
        for _ in range(h.n)
    ]
    lists = ListAssignment(entries)
    for total in (False, True):
        inst = solve.SolveInstance.from_hypergraph(h, require_total=total)
        mine = solve.solve_list_cf(inst, lists)
        ref = brute_force_cf(h, lists, require_total=total)
        assert (mine is None) == (ref is None)
        if mine is not None:
            assert cf_valid(h, mine, require_total=total)


@given(st.integers(min_value=1, max_value=3), st.integers(min_value=1, max_value=3))
@settings(max_examples=20, deadline=None)
def test_canonical_assignments_are_k_assignments(n, k):
    total = 0
    for entries in solve.canonical_assignments(n, k):
        total += 1
        assert len(entries) == n
        for lst in entries:
            assert len(lst) == len(set(lst)) == k
            assert all(1 <= c <= k * n for c in lst)
        if total > 2000:
            break
    assert total >= 1


@given(graphs())
@settings(max_examples=100, deadline=None)
def test_graph_format_round_trip(g):
    assert fileio.parse_graph(fileio.format_graph(g)) == g


@given(graphs())
@settings(max_examples=100, deadline=None)
def test_pimds_search_is_sound_and_complete(g):
    from util import all_pimds

    found = solve.find_pimds(g)
    everything = all_pimds(g)
    assert (found is None) == (not everything)
    if found is not None:
        assert found in everything


@given(graphs(max_n=5))
@settings(max_examples=60, deadline=None)
def test_one_choosable_iff_one_colorable(g):
    for variant in ("cn-star", "cn"):
        inst = solve.SolveInstance.from_graph(g, variant)
        chooser = solve.decide_choosable(inst, 1).answer
        lists = ListAssignment.uniform(g.n, [1])
        colorable = solve.solve_list_cf(inst, lists) is not None
        assert chooser == colorable
        # spot-check against one random singleton assignment
        rng = random.Random(g.n * 31 + g.m)
        entries = [(rng.randint(1, 3),) for _ in range(g.n)]
        alt = solve.solve_list_cf(inst, ListAssignment(entries)) is not None
        if chooser:
            assert alt
