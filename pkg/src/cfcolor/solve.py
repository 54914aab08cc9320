"""Exact desk-scale decision procedures and oracles.

Everything here is exhaustive search with explicit resource budgets:
exceeding a budget raises BudgetExceededError, never returns a wrong
answer.
"""

from __future__ import annotations

from dataclasses import dataclass

from cfcolor import kernels
from cfcolor.coloring import ListAssignment, PartialColoring
from cfcolor.errors import BudgetExceededError
from cfcolor.graphs import Graph, Hypergraph, derived_hypergraph
from cfcolor.verify import verify_cf

DEFAULT_NODE_BUDGET = 20_000_000
DEFAULT_ASSIGNMENT_BUDGET = 5_000_000
MAX_DENSE_COLORS = 2_000_000

VARIANTS = ("on-star", "cn-star", "on", "cn")


@dataclass(frozen=True)
class SolveInstance:
    """A hypergraph to CF-color, plus the totality requirement."""

    hypergraph: Hypergraph
    require_total: bool = False
    variant: str | None = None

    @classmethod
    def from_graph(cls, g, variant):
        """Build the ON*/CN*/ON/CN instance for a graph.

        ON variants require no isolated vertices; star variants use
        partial-coloring semantics.
        """
        if variant not in VARIANTS:
            raise ValueError(f"unknown variant {variant!r}")
        mode = "open" if variant.startswith("on") else "closed"
        return cls(
            hypergraph=derived_hypergraph(g, mode),
            require_total=not variant.endswith("star"),
            variant=variant,
        )

    @classmethod
    def from_hypergraph(cls, h, require_total=False):
        return cls(hypergraph=h, require_total=require_total)


def _dense_colors(lists, n_cap):
    """Map a ListAssignment onto dense kernel colors.

    Returns (dense_lists, colors_by_dense, symmetric).  When all lists
    are identical the search is color-symmetric and the shared list is
    truncated to the first n_cap colors (no solution uses more distinct
    colors than there are vertices).
    """
    entries = [lists.entry(v) for v in range(lists.n)]
    symmetric = len(set(entries)) <= 1
    if symmetric and entries:
        shared = list(lists.colors(0))[: max(n_cap, 1)]
        dense = list(range(len(shared)))
        return [dense] * lists.n, shared, True

    universe = sorted({c for v in range(lists.n) for c in lists.colors(v)})
    if len(universe) > MAX_DENSE_COLORS:
        raise BudgetExceededError(
            f"color universe of size {len(universe)} exceeds the dense-color cap"
        )
    dense_of = {c: i for i, c in enumerate(universe)}
    dense_lists = [[dense_of[c] for c in lists.colors(v)] for v in range(lists.n)]
    return dense_lists, universe, False


def solve_list_cf(inst, lists, budget=DEFAULT_NODE_BUDGET):
    """Exhaustive backtracking search for an L-CF(*) coloring.

    Returns a coloring passing verify_cf, or None iff no such coloring
    exists.  Raises BudgetExceededError when the node budget trips.
    """
    h = inst.hypergraph
    if lists.n != h.n:
        raise ValueError("list assignment must cover every vertex")
    dense_lists, colors_by_dense, symmetric = _dense_colors(lists, h.n)
    status, assignment, nodes = kernels.solve_cf(
        h.n,
        [list(e) for e in h.edges],
        dense_lists,
        inst.require_total,
        symmetric,
        budget,
    )
    if status == 2:
        raise BudgetExceededError(
            f"solve_list_cf exceeded {budget} nodes", nodes=nodes
        )
    if status == 1:
        return None
    f = PartialColoring(
        {v: colors_by_dense[c] for v, c in enumerate(assignment) if c >= 0}
    )
    report = verify_cf(h, f, lists=lists, require_total=inst.require_total)
    if not report.valid:  # pragma: no cover - kernel contract
        raise AssertionError("solver produced a coloring that fails verification")
    return f


def chromatic_number(inst, budget=DEFAULT_NODE_BUDGET):
    """Least k such that the constant assignment {1..k} admits a CF(*)
    coloring, together with a witness coloring."""
    for k in range(1, inst.hypergraph.n + 2):
        lists = ListAssignment.uniform(inst.hypergraph.n, range(1, k + 1))
        f = solve_list_cf(inst, lists, budget=budget)
        if f is not None:
            return k, f
    raise AssertionError("distinct colors always yield a CF coloring")


@dataclass(frozen=True)
class ChoosabilityCertificate:
    """Outcome of a choosability decision.

    On "no", `witness` is the canonically smallest k-assignment with no
    valid coloring (confirmed by solve_list_cf returning None); on "yes"
    the check was exhaustive and there is nothing to exhibit.
    """

    answer: bool
    witness: ListAssignment | None = None


def canonical_assignments(n, k):
    """All k-assignments over {1..k*n} up to color renaming.

    Lists are built vertex by vertex; scanning lists in vertex order and
    each list ascending, a color larger than every color introduced so
    far may only appear as previous-max + 1.  Yields lists-of-tuples in
    lexicographic order, so the first failing assignment found is the
    canonically smallest.
    """

    def extend(prefix, max_used):
        if len(prefix) == n:
            yield list(prefix)
            return
        for subset in _canonical_k_subsets(k, max_used):
            prefix.append(subset)
            yield from extend(prefix, max(max_used, subset[-1]))
            prefix.pop()

    yield from extend([], 0)


def _canonical_k_subsets(k, max_used):
    """Sorted k-subsets of {1..max_used+k} whose above-max part is the
    contiguous prefix max_used+1, max_used+2, ...; lexicographic order."""
    out = []
    for fresh in range(0, k + 1):
        old_needed = k - fresh
        fresh_part = tuple(range(max_used + 1, max_used + 1 + fresh))
        for old_part in _sorted_subsets(max_used, old_needed):
            out.append(old_part + fresh_part)
    out.sort()
    return out


def _sorted_subsets(limit, size):
    from itertools import combinations

    return [tuple(c) for c in combinations(range(1, limit + 1), size)]


def decide_choosable(
    inst,
    k,
    budget=DEFAULT_NODE_BUDGET,
    assignment_budget=DEFAULT_ASSIGNMENT_BUDGET,
):
    """Is the instance k-CF(*)-choosable?

    For k = 1 the constant singleton assignment is the hardest one (any
    monochromatic solution transfers to arbitrary singleton lists), so
    only it is checked.  For k >= 2 every canonical k-assignment is
    enumerated.
    """
    if k < 1:
        raise ValueError("k must be positive")
    n = inst.hypergraph.n
    if k == 1:
        lists = ListAssignment.uniform(n, [1])
        f = solve_list_cf(inst, lists, budget=budget)
        if f is None:
            return ChoosabilityCertificate(answer=False, witness=lists)
        return ChoosabilityCertificate(answer=True)

    count = 0
    for entries in canonical_assignments(n, k):
        count += 1
        if count > assignment_budget:
            raise BudgetExceededError(
                f"choosability enumeration exceeded {assignment_budget} assignments"
            )
        lists = ListAssignment(entries)
        f = solve_list_cf(inst, lists, budget=budget)
        if f is None:
            return ChoosabilityCertificate(answer=False, witness=lists)
    return ChoosabilityCertificate(answer=True)


def decide_choosable_unrestricted(
    inst, k, universe_size, budget=DEFAULT_NODE_BUDGET
):
    """Brute-force choosability over all k-assignments drawn from
    {1..universe_size}, with no symmetry pruning.  Cross-check oracle for
    the canonical enumeration; only usable on tiny instances."""
    from itertools import combinations, product

    n = inst.hypergraph.n
    subsets = [tuple(c) for c in combinations(range(1, universe_size + 1), k)]
    for entries in product(subsets, repeat=n):
        lists = ListAssignment(list(entries))
        if solve_list_cf(inst, lists, budget=budget) is None:
            return ChoosabilityCertificate(answer=False, witness=lists)
    return ChoosabilityCertificate(answer=True)


def _find_exact_one(sets, n, budget):
    if any(not s for s in sets):
        return None
    status, members, nodes = kernels.exact_one(n, [list(s) for s in sets], budget)
    if status == 2:
        raise BudgetExceededError(f"exact-one search exceeded {budget} nodes")
    if status == 1:
        return None
    return frozenset(members)


def find_pimds(g, budget=DEFAULT_NODE_BUDGET):
    """Some perfect induced matching dominating set of g, or None.

    A set S qualifies iff every vertex of g has exactly one neighbor in
    S, i.e. S hits every open neighborhood exactly once.
    """
    result = _find_exact_one([g.adj[v] for v in range(g.n)], g.n, budget)
    if result is not None:
        from cfcolor.verify import is_pimds

        assert is_pimds(g, result)
    return result


def find_pids(g, budget=DEFAULT_NODE_BUDGET):
    """Some perfect independent dominating set of g, or None.

    A set S qualifies iff S hits every closed neighborhood exactly once.
    """
    result = _find_exact_one(
        [g.closed_neighborhood(v) for v in range(g.n)], g.n, budget
    )
    if result is not None:
        from cfcolor.verify import is_pids

        assert is_pids(g, result)
    return result


MAX_FORMULA_VARIABLES = 30


def solve_one_in_three(formula):
    """Truth assignment giving every clause exactly one true variable,
    or None.  Exhaustive over 2^n with per-clause pruning; variables are
    tried True first, so the first solution is lexicographically
    greedy in x1, x2, ...
    """
    n = formula.n
    if n > MAX_FORMULA_VARIABLES:
        raise BudgetExceededError(
            f"formula has {n} variables, budget is {MAX_FORMULA_VARIABLES}"
        )
    clauses = [tuple(c) for c in formula.clauses]
    m = len(clauses)
    in_clauses = [[] for _ in range(n)]
    for ci, c in enumerate(clauses):
        for x in c:
            in_clauses[x].append(ci)
    true_cnt = [0] * m
    und_cnt = [3] * m
    value = [False] * n

    def search(x):
        if x == n:
            return all(t == 1 for t in true_cnt)
        for val in (True, False):
            value[x] = val
            ok = True
            for ci in in_clauses[x]:
                und_cnt[ci] -= 1
                if val:
                    true_cnt[ci] += 1
            for ci in in_clauses[x]:
                if true_cnt[ci] > 1 or (true_cnt[ci] == 0 and und_cnt[ci] == 0):
                    ok = False
                    break
            if ok and search(x + 1):
                return True
            for ci in in_clauses[x]:
                und_cnt[ci] += 1
                if val:
                    true_cnt[ci] -= 1
        value[x] = False
        return False

    if search(0):
        return frozenset(x for x in range(n) if value[x])
    return None
