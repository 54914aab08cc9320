"""Compare the compiled and pure-Python search kernels on solver workloads.

Usage: python3 benchmarks/bench_kernels.py [--seed N]
"""

from __future__ import annotations

import argparse
import random
import time

from cfcolor import _kernel_py as pure
from cfcolor import kernels
from cfcolor.graphs import derived_hypergraph, random_graph


def bench(label, fn_fast, fn_pure, args):
    t0 = time.perf_counter()
    fast = fn_fast(*args)
    t1 = time.perf_counter()
    slow = fn_pure(*args)
    t2 = time.perf_counter()
    assert fast == slow, f"{label}: backend results differ"
    compiled_s, pure_s = t1 - t0, t2 - t1
    ratio = pure_s / compiled_s if compiled_s > 0 else float("inf")
    print(
        f"{label:38s} compiled {compiled_s:8.3f}s  pure {pure_s:8.3f}s"
        f"  speedup {ratio:6.1f}x  nodes {fast[2]}"
    )


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--seed", type=int, default=0)
    opts = parser.parse_args()
    rng = random.Random(opts.seed)

    if not kernels.COMPILED:
        raise SystemExit("compiled backend unavailable; nothing to compare")

    # CFCN* 2-coloring search on a random graph (partial semantics);
    # deliberately budget-bound so both backends do identical work
    g = random_graph(40, 0.15, rng)
    h = derived_hypergraph(g, "closed")
    edges = [list(e) for e in h.edges]
    lists = [[0, 1]] * g.n
    bench(
        "cn-star 2-coloring, n=40 p=0.15",
        kernels.solve_cf,
        pure.solve_cf,
        (g.n, edges, lists, False, True, 3_000_000),
    )

    # total variant on a denser graph
    g2 = random_graph(26, 0.3, rng)
    h2 = derived_hypergraph(g2, "closed")
    bench(
        "cn total 2-coloring, n=26 p=0.3",
        kernels.solve_cf,
        pure.solve_cf,
        (g2.n, [list(e) for e in h2.edges], [[0, 1]] * g2.n, True, True, 3_000_000),
    )

    # exact-one hitting set (PIMDS search) on a random graph
    while True:
        g3 = random_graph(30, 0.12, rng)
        sets = [list(g3.adj[v]) for v in range(g3.n)]
        if all(sets):
            break
    bench(
        "exact-one (PIMDS), n=30 p=0.12",
        kernels.exact_one,
        pure.exact_one,
        (g3.n, sets, 10_000_000),
    )


if __name__ == "__main__":
    main()
