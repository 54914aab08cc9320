"""Randomized coloring machinery: the near-uniform hypergraph colorer
(random sampling plus resampling of bad hyperedges) and the full
K_{1,k}-free CFCN* pipeline.

All randomness flows from explicit seeds; identical inputs and seed give
identical output.  Correctness is enforced by post-hoc verification and
seed retries, never by trusting the probabilistic guarantee.
"""

from __future__ import annotations

import math
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from cfcolor.coloring import ListAssignment, PartialColoring
from cfcolor.errors import BudgetExceededError
from cfcolor.graphs import (
    Graph,
    Hypergraph,
    derived_hypergraph,
    greedy_color_classes,
    hypergraph_stats,
    max_star,
    maximal_independent_set,
)
from cfcolor.solve import SolveInstance, solve_list_cf
from cfcolor.verify import verify_cf

FULL_ALPHA_FLOOR = 2**12
FULL_ALPHA_LOG_COEFF = 136
FULL_LIST_FACTOR = 32
FULL_B_FLOOR = 2**12
FULL_B_LOG_COEFF = 272
FULL_R_COEFF = 2**18


class ResampleFailure(RuntimeError):
    """The resampling loop hit its round cap; retry with a fresh seed."""

    def __init__(self, rounds, worst_edge):
        super().__init__(
            f"no good coloring after {rounds} resampling rounds "
            f"(worst edge {worst_edge})"
        )
        self.rounds = rounds
        self.worst_edge = worst_edge


class PipelineError(RuntimeError):
    """The pipeline failed; `stage` names where."""

    def __init__(self, stage, message):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage


@dataclass(frozen=True)
class LemmaConfig:
    """Knobs of the near-uniform colorer.

    Defaults are the full-scale analysis thresholds: lists of size 32 * (max
    edge size), an edge is bad while at least 7/8 of its vertices carry
    non-unique colors, success means at least 1/8 of every edge is
    uniquely colored, and the minimum edge size must reach
    max(2^12, ceil(136 ln(16 Gamma))) unless alpha_override is set.
    """

    rng_seed: int
    list_factor: int = FULL_LIST_FACTOR
    bad_fraction: Fraction = Fraction(7, 8)
    unique_fraction: Fraction = Fraction(1, 8)
    alpha_override: int | None = None
    max_rounds: int = 1000

    def __post_init__(self):
        if not (0 < self.unique_fraction <= 1 - self.bad_fraction):
            raise ValueError("need 0 < unique_fraction <= 1 - bad_fraction")
        if self.list_factor < 1:
            raise ValueError("list_factor must be >= 1")
        if self.max_rounds < 1:
            raise ValueError("max_rounds must be >= 1")


def count_non_unique(edge, f):
    """Number of vertices of the edge whose color repeats inside it.

    Every vertex of the edge must be colored.
    """
    colors = []
    for v in edge:
        c = f.get(v)
        if c is None:
            raise ValueError(f"vertex {v} of the edge is uncolored")
        colors.append(c)
    counts = Counter(colors)
    return sum(1 for c in colors if counts[c] > 1)


def required_alpha(gamma, cfg):
    if cfg.alpha_override is not None:
        return cfg.alpha_override
    return max(FULL_ALPHA_FLOOR, math.ceil(FULL_ALPHA_LOG_COEFF * math.log(16 * gamma)))


def near_uniform_color(h, lists, cfg):
    """Sample-and-resample coloring of a near-uniform hypergraph.

    Colors every vertex uniformly from its list; while some edge E has
    X_E >= bad_fraction * |E| non-uniquely colored vertices, resamples
    all vertices of the lowest-index such edge.  On success every edge
    sees at least unique_fraction * |E| unique colors.
    """
    if lists.n != h.n:
        raise ValueError("lists must cover every vertex")
    _, gamma, min_size, max_size = hypergraph_stats(h)
    alpha = required_alpha(gamma, cfg)
    if h.m and min_size < alpha:
        raise ValueError(
            f"minimum edge size {min_size} below required alpha {alpha}"
        )
    need = cfg.list_factor * max_size
    for v in range(h.n):
        if lists.size(v) < need:
            raise ValueError(
                f"list of vertex {v} has {lists.size(v)} colors, need {need}"
            )

    rng = random.Random(cfg.rng_seed)
    color = [lists.sample(v, rng) for v in range(h.n)]

    def non_unique(edge):
        counts = Counter(color[v] for v in edge)
        return sum(1 for v in edge if counts[color[v]] > 1)

    def first_bad():
        for i, edge in enumerate(h.edges):
            if non_unique(edge) >= cfg.bad_fraction * len(edge):
                return i
        return None

    rounds = 0
    bad = first_bad()
    while bad is not None:
        if rounds >= cfg.max_rounds:
            raise ResampleFailure(rounds, bad)
        for v in h.edges[bad]:
            color[v] = lists.sample(v, rng)
        rounds += 1
        bad = first_bad()

    f = PartialColoring({v: color[v] for v in range(h.n)})
    for edge in h.edges:
        unique = len(edge) - count_non_unique(edge, f)
        if unique < cfg.unique_fraction * len(edge):  # pragma: no cover
            raise AssertionError("resampling terminated with a bad edge")
    return f, rounds


@dataclass(frozen=True)
class PipelineConfig:
    """Constants of the CFCN* pipeline.

    Full-scale values: b = min{s, max{2^12, 272 ln(4 Delta)}} and required
    list size r = ceil(2^18 k ln Delta).  scaled_mode marks runs with
    desk-scale replacement constants; the constants in effect are always
    recorded in the trace.
    """

    rng_seed: int
    b_floor: int = FULL_B_FLOOR
    b_log_coeff: float = FULL_B_LOG_COEFF
    r_coeff: float = FULL_R_COEFF
    scaled_mode: bool = False
    k_override: int | None = None
    retry_limit: int = 10
    lemma_list_factor: int = FULL_LIST_FACTOR
    lemma_max_rounds: int = 200
    solver_budget: int = 20_000_000

    def __post_init__(self):
        if self.b_floor < 1 or self.r_coeff <= 0 or self.b_log_coeff < 0:
            raise ValueError("pipeline constants must be positive")
        if self.retry_limit < 1:
            raise ValueError("retry_limit must be >= 1")

    @classmethod
    def full(cls, rng_seed, **kw):
        return cls(rng_seed=rng_seed, **kw)

    @classmethod
    def scaled(
        cls,
        rng_seed,
        b_floor=2,
        b_log_coeff=0.0,
        r_coeff=32.0,
        lemma_max_rounds=200,
        **kw,
    ):
        return cls(
            rng_seed=rng_seed,
            b_floor=b_floor,
            b_log_coeff=b_log_coeff,
            r_coeff=r_coeff,
            scaled_mode=True,
            lemma_max_rounds=lemma_max_rounds,
            **kw,
        )


@dataclass
class PipelineTrace:
    """Everything a pipeline run decided, for audit and invariants."""

    k: int = 0
    delta: int = 0
    r: int = 0
    b: int = 0
    s: int = 0
    independent_set: frozenset = frozenset()
    classes: tuple = ()
    part_b: frozenset = frozenset()
    part_c: frozenset = frozenset()
    f1: PartialColoring | None = None
    removed_x: dict = field(default_factory=dict)
    removed_y: dict = field(default_factory=dict)
    reduced_lists: ListAssignment | None = None
    h2_coloring: PartialColoring | None = None
    resample_rounds: int = 0
    final: PartialColoring | None = None
    attempts: int = 0
    delegated: bool = False
    small_k_regime: bool = False
    scaled_mode: bool = False
    constants: dict = field(default_factory=dict)
    failures: tuple = ()

    def lines(self):
        out = [
            f"k {self.k}",
            f"delta {self.delta}",
            f"r {self.r}",
            f"s {self.s}",
            f"b {self.b}",
            f"attempts {self.attempts}",
            f"delegated {'yes' if self.delegated else 'no'}",
            f"scaled {'yes' if self.scaled_mode else 'no'}",
            "constants "
            + " ".join(f"{k}={v}" for k, v in sorted(self.constants.items())),
            "A " + " ".join(str(v) for v in sorted(self.independent_set)),
        ]
        for i, cls_ in enumerate(self.classes):
            out.append(f"class {i + 1} " + " ".join(str(v) for v in sorted(cls_)))
        out.append("B " + " ".join(str(v) for v in sorted(self.part_b)))
        out.append("C " + " ".join(str(v) for v in sorted(self.part_c)))
        for u in sorted(self.removed_x):
            xs = " ".join(str(c) for c in sorted(self.removed_x[u]))
            ys = " ".join(str(c) for c in sorted(self.removed_y[u]))
            out.append(f"removed {u} X [{xs}] Y [{ys}]")
        out.append(f"rounds {self.resample_rounds}")
        if self.final is not None:
            for v, c in sorted(self.final.items()):
                out.append(f"color {v} {c}")
        return out


def color_h1(g, a_set, b_set, lists, budget=20_000_000):
    """Color the independent core so every vertex of A u B sees a unique
    color among its closed A-neighbors.

    Greedy: each a in A takes a list color unused by any A-vertex sharing
    a conflict edge with it; a greedy dead end falls back to the exact
    solver on the A-neighborhood hypergraph.  Requires
    |L_a| >= (k-1)b + 2 in the pipeline's parlance; callers check sizes.
    """
    a_sorted = sorted(a_set)
    a_index = {a: i for i, a in enumerate(a_sorted)}
    edges = []
    for v in sorted(a_set | b_set):
        edge = [w for w in g.closed_neighborhood(v) if w in a_set]
        if edge:
            edges.append(edge)
        elif v in b_set:
            raise PipelineError(
                "color_h1", f"vertex {v} in B has no neighbor in A"
            )

    conflicts = {a: set() for a in a_sorted}
    for edge in edges:
        for x in edge:
            conflicts[x].update(w for w in edge if w != x)

    f = {}
    greedy_ok = True
    for a in a_sorted:
        taken = {f[w] for w in conflicts[a] if w in f}
        chosen = None
        for c in lists.colors(a):
            if c not in taken:
                chosen = c
                break
        if chosen is None:
            greedy_ok = False
            break
        f[a] = chosen

    if not greedy_ok:
        h1 = Hypergraph(
            len(a_sorted), [[a_index[w] for w in e] for e in edges]
        )
        inst = SolveInstance.from_hypergraph(h1)
        sub = solve_list_cf(inst, lists.restrict(a_sorted), budget=budget)
        if sub is None:
            raise PipelineError("color_h1", "A-core hypergraph is uncolorable")
        f = {a_sorted[i]: c for i, c in sub.items()}

    coloring = PartialColoring(f)
    for edge in edges:
        counts = Counter(coloring.get(w) for w in edge if w in coloring)
        if not any(k == 1 for k in counts.values()):  # pragma: no cover
            raise AssertionError("H1 coloring left an edge without a witness")
    return coloring


def _witness_color(g, w, a_set, f1):
    """Smallest color appearing exactly once among the closed
    A-neighbors of w under f1."""
    cells = [f1.get(x) for x in g.closed_neighborhood(w) if x in a_set]
    counts = Counter(c for c in cells if c is not None)
    unique = [c for c, k in counts.items() if k == 1]
    if not unique:
        raise PipelineError("reduce_lists", f"vertex {w} has no A-witness")
    return min(unique)


def reduce_lists(g, b_set, f1, lists, k=None, b=None):
    """Strike protected colors from the lists of B.

    For u in B, X_u holds the colors of u's A-neighbors (each A-vertex is
    its own witness) and Y_u the witness colors of u's closed B-neighbors;
    the reduced list is L_u minus both.  Returns (assignment over sorted(B),
    X_u map, Y_u map).
    """
    a_set = set(f1.domain)
    b_sorted = sorted(b_set)
    removed_x = {}
    removed_y = {}
    entries = []
    for u in b_sorted:
        xs = {f1[a] for a in g.adj[u] if a in a_set}
        ys = {
            _witness_color(g, w, a_set, f1)
            for w in g.closed_neighborhood(u)
            if w in b_set
        }
        if k is not None and len(xs) > k - 1:
            raise PipelineError("reduce_lists", f"|X_{u}| = {len(xs)} > k-1")
        if k is not None and b is not None and len(ys) > (k - 1) * (b - 1) + 1:
            raise PipelineError(
                "reduce_lists", f"|Y_{u}| = {len(ys)} exceeds (k-1)(b-1)+1"
            )
        reduced = lists.without(u, xs | ys)
        if not reduced:
            raise PipelineError("reduce_lists", f"vertex {u} left with empty list")
        removed_x[u] = frozenset(xs)
        removed_y[u] = frozenset(ys)
        entries.append(reduced)
    return ListAssignment(entries) if entries else None, removed_x, removed_y


def _check_structure(g, gp, old_of_new, a_set, b_set, c_set, k, b):
    for i in range(gp.n):
        v = old_of_new[i]
        in_a = sum(1 for w in g.adj[v] if w in a_set)
        if not (1 <= in_a <= k - 1):
            raise PipelineError(
                "structure",
                f"vertex {v} has {in_a} A-neighbors, expected 1..{k - 1}",
            )
    for v in c_set:
        in_b = sum(1 for w in g.adj[v] if w in b_set)
        if not (b <= in_b <= (k - 1) * b):
            raise PipelineError(
                "structure",
                f"C-vertex {v} has {in_b} B-neighbors, expected {b}..{(k - 1) * b}",
            )


def cfcn_pipeline(g, lists, cfg):
    """Full CFCN* list-coloring pipeline for K_{1,k}-free graphs.

    Builds a maximal independent core A, greedily classes the rest, colors
    A exactly, then resamples the near-uniform B-neighborhood hypergraph
    for the deep classes.  The output always passes verification against
    the closed-neighborhood hypergraph and the original lists; failed
    attempts retry with fresh seeds, and after retry_limit attempts the
    run delegates to the exact solver (recorded in the trace).

    Returns (coloring, trace).
    """
    if lists.n != g.n:
        raise ValueError("lists must cover every vertex")
    k = cfg.k_override if cfg.k_override is not None else max_star(g) + 1
    if k < 2:
        k = 2
    delta = g.max_degree()
    log_delta = math.log(delta) if delta >= 2 else 0.0
    r = math.ceil(cfg.r_coeff * k * log_delta)
    for v in range(g.n):
        if lists.size(v) < max(r, 1):
            raise ValueError(
                f"list of vertex {v} has {lists.size(v)} colors, pipeline needs {r}"
            )

    closed = derived_hypergraph(g, "closed")
    trace = PipelineTrace(
        k=k,
        delta=delta,
        r=r,
        scaled_mode=cfg.scaled_mode,
        small_k_regime=(k <= log_delta / 8),
        constants={
            "b_floor": cfg.b_floor,
            "b_log_coeff": cfg.b_log_coeff,
            "r_coeff": cfg.r_coeff,
            "list_factor": cfg.lemma_list_factor,
        },
    )
    failures = []

    for attempt in range(cfg.retry_limit):
        trace.attempts = attempt + 1
        try:
            f, rounds = _attempt(
                g, lists, cfg, k, delta, log_delta, trace, seed=cfg.rng_seed + attempt
            )
        except (ResampleFailure, PipelineError) as exc:
            failures.append(f"attempt {attempt + 1}: {exc}")
            continue
        report = verify_cf(closed, f, lists=lists, require_total=False)
        if report.valid:
            trace.final = f
            trace.resample_rounds = rounds
            trace.failures = tuple(failures)
            return f, trace
        failures.append(
            f"attempt {attempt + 1}: verification failed on edges "
            f"{report.edge_violations[:5]}"
        )

    # every randomized attempt failed: fall back to the exact solver in
    # place of the general-graph construction this pipeline does not carry
    trace.delegated = True
    trace.failures = tuple(failures)
    inst = SolveInstance.from_hypergraph(closed)
    f = solve_list_cf(inst, lists, budget=cfg.solver_budget)
    if f is None:
        raise PipelineError("delegate", "exact solver found no coloring")
    trace.final = f
    return f, trace


def _attempt(g, lists, cfg, k, delta, log_delta, trace, seed):
    a_set = set(maximal_independent_set(g))
    gp, old_of_new = g.remove_vertices(a_set)
    classes_local = greedy_color_classes(gp)
    classes = tuple(
        frozenset(old_of_new[v] for v in cls_) for cls_ in classes_local
    )
    s = len(classes)
    log_term = (
        math.ceil(cfg.b_log_coeff * math.log(4 * delta))
        if cfg.b_log_coeff > 0 and delta >= 1
        else 0
    )
    b = min(s, max(cfg.b_floor, log_term))
    b_set = set().union(*classes[:b]) if classes else set()
    c_set = set().union(*classes[b:]) if s > b else set()

    trace.independent_set = frozenset(a_set)
    trace.classes = classes
    trace.s = s
    trace.b = b
    trace.part_b = frozenset(b_set)
    trace.part_c = frozenset(c_set)

    _check_structure(g, gp, old_of_new, a_set, b_set, c_set, k, b)

    needed = (k - 1) * b + 2
    for a in a_set:
        if lists.size(a) < needed:
            raise PipelineError(
                "color_h1", f"list of {a} has {lists.size(a)} colors, need {needed}"
            )
    f1 = color_h1(g, a_set, b_set, lists, budget=cfg.solver_budget)
    trace.f1 = f1

    if not c_set:
        trace.removed_x = {}
        trace.removed_y = {}
        trace.reduced_lists = None
        trace.h2_coloring = None
        return f1, 0

    reduced, removed_x, removed_y = reduce_lists(g, b_set, f1, lists, k=k, b=b)
    trace.removed_x = removed_x
    trace.removed_y = removed_y
    trace.reduced_lists = reduced

    b_sorted = sorted(b_set)
    b_index = {v: i for i, v in enumerate(b_sorted)}
    h2_edges = []
    for v in sorted(c_set):
        edge = [b_index[w] for w in g.adj[v] if w in b_set]
        h2_edges.append(edge)
    h2 = Hypergraph(len(b_sorted), h2_edges)

    _, gamma, _, _ = hypergraph_stats(h2)
    if gamma > delta * delta:
        raise PipelineError("h2", f"Gamma {gamma} exceeds Delta^2 {delta * delta}")

    lemma_cfg = LemmaConfig(
        rng_seed=seed,
        list_factor=cfg.lemma_list_factor,
        alpha_override=b,
        max_rounds=cfg.lemma_max_rounds,
    )
    try:
        f2_local, rounds = near_uniform_color(h2, reduced, lemma_cfg)
    except ValueError as exc:
        # reduced lists or edge sizes below the lemma's thresholds; treat
        # as a failed attempt so the run can delegate
        raise PipelineError("h2", str(exc)) from exc
    f2 = PartialColoring({b_sorted[i]: c for i, c in f2_local.items()})
    trace.h2_coloring = f2
    return f1.union(f2), rounds
