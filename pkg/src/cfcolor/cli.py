"""Command-line entry point.

Decision subcommands exit 0 for yes, 1 for no, 2 when a resource budget
tripped; all subcommands exit 3 on malformed input.  Randomized paths
require an explicit --seed; identical command and seed give byte-identical
output.
"""

from __future__ import annotations

import argparse
import math
import random
import sys
from pathlib import Path

from cfcolor import fileio, prob, reductions, solve
from cfcolor.coloring import ListAssignment
from cfcolor.errors import BudgetExceededError, InputFormatError
from cfcolor.graphs import (
    derived_hypergraph,
    extended_double_cover,
    hypergraph_stats,
    line_graph,
    max_star,
    random_graph,
    random_hypergraph,
)
from cfcolor.verify import verify_cf

EXIT_YES = 0
EXIT_NO = 1
EXIT_RESOURCE = 2
EXIT_INPUT = 3


def _read(path):
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from exc


def _write(path, text):
    Path(path).write_text(text)


def _load_lists(spec_text, n):
    """`RANGE:<r>` for uniform implicit ranges, otherwise a file path."""
    if spec_text.startswith("RANGE:"):
        size = int(spec_text.split(":", 1)[1])
        return ListAssignment.uniform_range(n, size)
    return fileio.parse_lists(_read(spec_text), n)


def _instance(args):
    if getattr(args, "hgraph", None):
        h = fileio.parse_hypergraph(_read(args.hgraph))
        return solve.SolveInstance.from_hypergraph(
            h, require_total=getattr(args, "total", False)
        )
    g = fileio.parse_graph(_read(args.graph))
    return solve.SolveInstance.from_graph(g, args.variant)


def cmd_verify(args):
    inst = _instance(args)
    n = inst.hypergraph.n
    f = fileio.parse_coloring(_read(args.coloring), n)
    lists = _load_lists(args.lists, n) if args.lists else None
    report = verify_cf(
        inst.hypergraph, f, lists=lists, require_total=inst.require_total
    )
    text = "\n".join(report.lines())
    print(text)
    if args.report:
        _write(args.report, text + "\n")
    return EXIT_YES if report.valid else EXIT_NO


def cmd_solve(args):
    inst = _instance(args)
    n = inst.hypergraph.n
    if args.chromatic:
        k, f = solve.chromatic_number(inst, budget=args.budget)
        print(f"chromatic {k}")
        for v, c in sorted(f.items()):
            print(f"v {v + 1} {c}")
        if args.out:
            _write(args.out, fileio.format_coloring(f))
        return EXIT_YES
    if args.uniform:
        lists = ListAssignment.uniform(n, range(1, args.uniform + 1))
    elif args.lists:
        lists = _load_lists(args.lists, n)
    else:
        raise InputFormatError("solve needs --lists, --uniform or --chromatic")
    f = solve.solve_list_cf(inst, lists, budget=args.budget)
    if f is None:
        print("no coloring")
        return EXIT_NO
    for v, c in sorted(f.items()):
        print(f"v {v + 1} {c}")
    if args.out:
        _write(args.out, fileio.format_coloring(f))
    return EXIT_YES


def cmd_choose(args):
    inst = _instance(args)
    cert = solve.decide_choosable(
        inst, args.k, budget=args.budget, assignment_budget=args.assignment_budget
    )
    if cert.answer:
        print(f"choosable k={args.k} yes")
        return EXIT_YES
    print(f"choosable k={args.k} no")
    print("witness assignment:")
    sys.stdout.write(fileio.format_lists(cert.witness))
    return EXIT_NO


def cmd_oracle(args):
    formula = fileio.parse_formula(_read(args.formula))
    assignment = solve.solve_one_in_three(formula)
    if assignment is None:
        print("unsatisfiable")
        return EXIT_NO
    print(" ".join(f"x{x + 1}" for x in sorted(assignment)))
    return EXIT_YES


def cmd_reduce(args):
    formula = fileio.parse_formula(_read(args.formula))
    builder = {
        "gphi": reductions.build_associated_graph,
        "gprime": reductions.build_g_prime,
        "gdoubleprime": reductions.build_g_double_prime,
    }[args.target]
    out = builder(formula)
    text = fileio.format_graph(out.graph)
    sys.stdout.write(text)
    if args.out:
        _write(args.out, text)
    if args.rolemap:
        _write(args.rolemap, "\n".join(out.role_lines()) + "\n")
    return EXIT_YES


def cmd_gadget_hg(args):
    g = fileio.parse_graph(_read(args.graph))
    out = reductions.build_h_gadget(g)
    text = fileio.format_graph(out.graph)
    sys.stdout.write(text)
    if args.out:
        _write(args.out, text)
    if args.rolemap:
        _write(args.rolemap, "\n".join(out.role_lines()) + "\n")
    return EXIT_YES


def cmd_edc(args):
    g = fileio.parse_graph(_read(args.graph))
    d = extended_double_cover(g)
    text = fileio.format_graph(d)
    sys.stdout.write(text)
    if args.out:
        _write(args.out, text)
    return EXIT_YES


def cmd_pipeline(args):
    g = fileio.parse_graph(_read(args.graph))
    lists = _load_lists(args.lists, g.n)
    if args.scaled:
        cfg = prob.PipelineConfig.scaled(
            rng_seed=args.seed,
            retry_limit=args.retries,
            k_override=args.k_override,
        )
    else:
        cfg = prob.PipelineConfig.full(
            rng_seed=args.seed,
            retry_limit=args.retries,
            k_override=args.k_override,
        )
    f, trace = prob.cfcn_pipeline(g, lists, cfg)
    for v, c in sorted(f.items()):
        print(f"v {v + 1} {c}")
    if args.trace:
        _write(args.trace, "\n".join(trace.lines()) + "\n")
    if args.out:
        _write(args.out, fileio.format_coloring(f))
    return EXIT_YES


def cmd_lemma(args):
    h = fileio.parse_hypergraph(_read(args.hgraph))
    _, _, _, max_size = hypergraph_stats(h)
    if args.lists:
        lists = _load_lists(args.lists, h.n)
    else:
        lists = ListAssignment.uniform_range(h.n, args.list_factor * max_size)
    cfg = prob.LemmaConfig(
        rng_seed=args.seed,
        list_factor=args.list_factor,
        alpha_override=args.alpha,
        max_rounds=args.max_rounds,
    )
    f, rounds = prob.near_uniform_color(h, lists, cfg)
    print(f"rounds {rounds}")
    for v, c in sorted(f.items()):
        print(f"v {v + 1} {c}")
    if args.out:
        _write(args.out, fileio.format_coloring(f))
    return EXIT_YES


def _sweep_propositions(args):
    from cfcolor.smallgraphs import nonisomorphic_graphs

    rows = []
    ok_all = True
    idx = 0
    for n in range(1, args.max_n + 1):
        for g in nonisomorphic_graphs(n):
            idx += 1
            chi_cn_star, _ = solve.chromatic_number(
                solve.SolveInstance.from_graph(g, "cn-star")
            )
            chi_cn, _ = solve.chromatic_number(
                solve.SolveInstance.from_graph(g, "cn")
            )
            ok = chi_cn <= chi_cn_star + 1
            detail = f"chiCN {chi_cn} chiCN* {chi_cn_star}"
            if not g.has_isolated_vertex() and g.n > 0 and g.m > 0:
                chi_on_star, _ = solve.chromatic_number(
                    solve.SolveInstance.from_graph(g, "on-star")
                )
                ok = ok and chi_cn_star <= 2 * chi_on_star
                detail += f" chiON* {chi_on_star}"
            rows.append((idx, ok, detail))
            ok_all = ok_all and ok
    return rows, ok_all


def _sweep_reductions(args):
    rng = random.Random(args.seed)
    rows = []
    ok_all = True
    for t in range(args.trials):
        n = rng.randint(3, 6)
        m = rng.randint(1, min(5, math.comb(n, 3)))
        clauses = set()
        while len(clauses) < m:
            clauses.add(tuple(sorted(rng.sample(range(n), 3))))
        formula = reductions.Formula(n, tuple(sorted(clauses)))
        sat = solve.solve_one_in_three(formula)
        pimds = solve.find_pimds(reductions.build_g_prime(formula).graph)
        pids = solve.find_pids(reductions.build_g_double_prime(formula).graph)
        ok = (sat is not None) == (pimds is not None) == (pids is not None)
        if sat is not None:
            on_cert = reductions.truth_to_certificate(formula, sat, "on")
            cn_cert = reductions.truth_to_certificate(formula, sat, "cn")
            ok = ok and reductions.certificate_to_truth(formula, on_cert, "on") == sat
            ok = ok and reductions.certificate_to_truth(formula, cn_cert, "cn") == sat
        rows.append((t + 1, ok, f"n={n} m={m} sat={'yes' if sat else 'no'}"))
        ok_all = ok_all and ok
    return rows, ok_all


def _sweep_lemma(args):
    lo, hi = (int(x) for x in args.size.split(".."))
    rng = random.Random(args.seed)
    h = random_hypergraph(4 * hi, args.edges, lo, hi, rng)
    _, _, _, max_size = hypergraph_stats(h)
    lists = ListAssignment.uniform_range(h.n, 32 * max_size)
    cfg = prob.LemmaConfig(rng_seed=args.seed, alpha_override=lo)
    f, rounds = prob.near_uniform_color(h, lists, cfg)
    report = verify_cf(h, f, lists=lists, require_total=True)
    return [(1, report.valid, f"edges={args.edges} rounds={rounds}")], report.valid


def _sweep_pipeline(args):
    rng = random.Random(args.seed)
    rows = []
    ok_all = True
    for t in range(args.trials):
        base = random_graph(10, 0.35, rng)
        g, _ = line_graph(base)
        if g.n == 0:
            rows.append((t + 1, True, "empty line graph, skipped"))
            continue
        for scaled in (False, True):
            cfg = (
                prob.PipelineConfig.scaled(rng_seed=args.seed + t)
                if scaled
                else prob.PipelineConfig.full(rng_seed=args.seed + t)
            )
            k = max_star(g) + 1
            delta = g.max_degree()
            r = math.ceil(
                cfg.r_coeff * k * (math.log(delta) if delta >= 2 else 0)
            )
            lists = ListAssignment.uniform_range(g.n, max(r, 1))
            f, trace = prob.cfcn_pipeline(g, lists, cfg)
            report = verify_cf(
                derived_hypergraph(g, "closed"), f, lists=lists
            )
            mode = "scaled" if scaled else "full"
            rows.append(
                (
                    len(rows) + 1,
                    report.valid,
                    f"trial={t + 1} mode={mode} n={g.n} C={'empty' if not trace.part_c else len(trace.part_c)}",
                )
            )
            ok_all = ok_all and report.valid
    return rows, ok_all


def cmd_sweep(args):
    suites = {
        "propositions": _sweep_propositions,
        "reductions": _sweep_reductions,
        "lemma": _sweep_lemma,
        "pipeline": _sweep_pipeline,
    }
    if args.suite not in suites:
        raise InputFormatError(f"unknown suite {args.suite!r}")
    rows, ok_all = suites[args.suite](args)
    for idx, ok, detail in rows:
        print(f"{idx:4d} {'pass' if ok else 'FAIL'} {detail}")
    print(f"suite {args.suite}: {'pass' if ok_all else 'FAIL'} ({len(rows)} rows)")
    return EXIT_YES if ok_all else EXIT_NO


def build_parser():
    p = argparse.ArgumentParser(
        prog="cfcolor",
        description="Conflict-free coloring and choosability toolkit.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add_instance_args(sp, need_variant=True):
        sp.add_argument("--graph", help="graph file")
        sp.add_argument("--hgraph", help="hypergraph file")
        if need_variant:
            sp.add_argument(
                "--variant",
                choices=solve.VARIANTS,
                default="cn-star",
                help="neighborhood variant for graph inputs",
            )
            sp.add_argument(
                "--total",
                action="store_true",
                help="require a total coloring (hypergraph inputs)",
            )

    sp = sub.add_parser("verify", help="check a coloring file")
    add_instance_args(sp)
    sp.add_argument("--coloring", required=True)
    sp.add_argument("--lists")
    sp.add_argument("--report", help="write the report to a file")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("solve", help="exact list-CF coloring search")
    add_instance_args(sp)
    sp.add_argument("--lists", help="lists file or RANGE:<r>")
    sp.add_argument("--uniform", type=int, help="constant lists {1..k}")
    sp.add_argument("--chromatic", action="store_true")
    sp.add_argument("--budget", type=int, default=solve.DEFAULT_NODE_BUDGET)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("choose", help="decide k-choosability")
    add_instance_args(sp)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--budget", type=int, default=solve.DEFAULT_NODE_BUDGET)
    sp.add_argument(
        "--assignment-budget", type=int, default=solve.DEFAULT_ASSIGNMENT_BUDGET
    )
    sp.set_defaults(func=cmd_choose)

    sp = sub.add_parser("oracle", help="positive 1-in-3-SAT oracle")
    sp.add_argument("--formula", required=True)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("reduce", help="build a reduction graph")
    sp.add_argument("--formula", required=True)
    sp.add_argument(
        "--target", choices=("gphi", "gprime", "gdoubleprime"), required=True
    )
    sp.add_argument("--out")
    sp.add_argument("--rolemap")
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("gadget-hg", help="build the hub gadget H_G")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--out")
    sp.add_argument("--rolemap")
    sp.set_defaults(func=cmd_gadget_hg)

    sp = sub.add_parser("edc", help="extended double cover")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_edc)

    sp = sub.add_parser("pipeline", help="randomized CFCN* pipeline")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--lists", required=True, help="lists file or RANGE:<r>")
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--scaled", action="store_true")
    sp.add_argument("--k-override", type=int)
    sp.add_argument("--retries", type=int, default=10)
    sp.add_argument("--trace")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_pipeline)

    sp = sub.add_parser("lemma", help="near-uniform hypergraph colorer")
    sp.add_argument("--hgraph", required=True)
    sp.add_argument("--list-factor", type=int, default=32)
    sp.add_argument("--alpha", type=int, help="alpha override")
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--max-rounds", type=int, default=1000)
    sp.add_argument("--lists")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_lemma)

    sp = sub.add_parser("sweep", help="batch invariant suites")
    sp.add_argument(
        "--suite",
        required=True,
        choices=("propositions", "reductions", "lemma", "pipeline"),
    )
    sp.add_argument("--max-n", type=int, default=5)
    sp.add_argument("--trials", type=int, default=50)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--edges", type=int, default=100)
    sp.add_argument("--size", default="64..128")
    sp.set_defaults(func=cmd_sweep)

    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad flags; remap to the input-error code
        if exc.code not in (0, None):
            return EXIT_INPUT
        return 0
    try:
        return args.func(args)
    except InputFormatError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceededError as exc:
        print(f"resource budget exceeded: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
