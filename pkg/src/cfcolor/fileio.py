"""Text file formats.

Graph:      `p graph <n> <m>` then m lines `e <u> <v>` (1-indexed).
Hypergraph: `p hgraph <n> <m>` then m lines `h <v1> <v2> ...`.
Formula:    DIMACS CNF restricted to positive literals, 3 per clause.
Coloring:   lines `v <vertex> <color>`; omitted vertices are uncolored.
Lists:      lines `l <vertex> <c1> <c2> ...` or `L <vertex> <lo> <hi>`
            for the implicit range [lo, hi).

Blank lines and `c ...` comments are ignored everywhere.  Vertices are
1-indexed on disk and translated to 0-indexed at this boundary.
"""

from __future__ import annotations

from cfcolor.coloring import ListAssignment, PartialColoring
from cfcolor.errors import InputFormatError
from cfcolor.graphs import Graph, Hypergraph
from cfcolor.reductions import Formula


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c ") or line == "c":
            continue
        yield lineno, line.split()


def _fail(lineno, message):
    raise InputFormatError(f"line {lineno}: {message}")


def _parse_vertex(lineno, token, n):
    try:
        v = int(token)
    except ValueError:
        _fail(lineno, f"not an integer: {token!r}")
    if not (1 <= v <= n):
        _fail(lineno, f"vertex {v} out of range 1..{n}")
    return v - 1


def parse_graph(text):
    n = m = None
    edges = []
    seen = set()
    for lineno, tokens in _content_lines(text):
        if tokens[0] == "p":
            if n is not None:
                _fail(lineno, "duplicate header")
            if len(tokens) != 4 or tokens[1] != "graph":
                _fail(lineno, "expected header `p graph <n> <m>`")
            n, m = int(tokens[2]), int(tokens[3])
        elif tokens[0] == "e":
            if n is None:
                _fail(lineno, "edge before header")
            if len(tokens) != 3:
                _fail(lineno, "expected `e <u> <v>`")
            u = _parse_vertex(lineno, tokens[1], n)
            v = _parse_vertex(lineno, tokens[2], n)
            if u == v:
                _fail(lineno, f"self-loop at vertex {u + 1}")
            key = (min(u, v), max(u, v))
            if key in seen:
                _fail(lineno, f"duplicate edge {u + 1} {v + 1}")
            seen.add(key)
            edges.append((u, v))
        else:
            _fail(lineno, f"unexpected record {tokens[0]!r}")
    if n is None:
        raise InputFormatError("missing `p graph` header")
    if len(edges) != m:
        raise InputFormatError(f"header declares {m} edges, found {len(edges)}")
    return Graph(n, edges)


def format_graph(g):
    lines = [f"p graph {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_hypergraph(text):
    n = m = None
    edges = []
    for lineno, tokens in _content_lines(text):
        if tokens[0] == "p":
            if n is not None:
                _fail(lineno, "duplicate header")
            if len(tokens) != 4 or tokens[1] != "hgraph":
                _fail(lineno, "expected header `p hgraph <n> <m>`")
            n, m = int(tokens[2]), int(tokens[3])
        elif tokens[0] == "h":
            if n is None:
                _fail(lineno, "edge before header")
            if len(tokens) < 2:
                _fail(lineno, "empty hyperedge")
            edges.append([_parse_vertex(lineno, t, n) for t in tokens[1:]])
        else:
            _fail(lineno, f"unexpected record {tokens[0]!r}")
    if n is None:
        raise InputFormatError("missing `p hgraph` header")
    if len(edges) != m:
        raise InputFormatError(f"header declares {m} edges, found {len(edges)}")
    return Hypergraph(n, edges)


def format_hypergraph(h):
    lines = [f"p hgraph {h.n} {h.m}"]
    lines.extend("h " + " ".join(str(v + 1) for v in e) for e in h.edges)
    return "\n".join(lines) + "\n"


def parse_formula(text):
    n = m = None
    clauses = []
    for lineno, tokens in _content_lines(text):
        if tokens[0] == "p":
            if n is not None:
                _fail(lineno, "duplicate header")
            if len(tokens) != 4 or tokens[1] != "cnf":
                _fail(lineno, "expected header `p cnf <n> <m>`")
            n, m = int(tokens[2]), int(tokens[3])
        else:
            if n is None:
                _fail(lineno, "clause before header")
            try:
                lits = [int(t) for t in tokens]
            except ValueError:
                _fail(lineno, "clause tokens must be integers")
            if lits[-1] != 0:
                _fail(lineno, "clause line must end in 0")
            lits = lits[:-1]
            if len(lits) != 3:
                _fail(lineno, "exactly 3 literals per clause")
            if any(l <= 0 for l in lits):
                _fail(lineno, "only positive literals are allowed")
            if any(l > n for l in lits):
                _fail(lineno, "literal out of range")
            if len(set(lits)) != 3:
                _fail(lineno, "clause variables must be distinct")
            clauses.append(tuple(l - 1 for l in lits))
    if n is None:
        raise InputFormatError("missing `p cnf` header")
    if len(clauses) != m:
        raise InputFormatError(
            f"header declares {m} clauses, found {len(clauses)}"
        )
    return Formula(n, tuple(clauses))


def format_formula(formula):
    lines = [f"p cnf {formula.n} {formula.m}"]
    lines.extend(
        " ".join(str(x + 1) for x in clause) + " 0" for clause in formula.clauses
    )
    return "\n".join(lines) + "\n"


def parse_coloring(text, n):
    mapping = {}
    for lineno, tokens in _content_lines(text):
        if tokens[0] != "v" or len(tokens) != 3:
            _fail(lineno, "expected `v <vertex> <color>`")
        v = _parse_vertex(lineno, tokens[1], n)
        if v in mapping:
            _fail(lineno, f"vertex {v + 1} colored twice")
        try:
            color = int(tokens[2])
        except ValueError:
            _fail(lineno, "color must be an integer")
        if color < 0:
            _fail(lineno, "colors must be non-negative")
        mapping[v] = color
    return PartialColoring(mapping)


def format_coloring(f):
    return (
        "\n".join(f"v {v + 1} {c}" for v, c in sorted(f.items())) + "\n"
        if len(f)
        else ""
    )


def parse_lists(text, n):
    entries = [None] * n
    for lineno, tokens in _content_lines(text):
        if tokens[0] == "l":
            if len(tokens) < 3:
                _fail(lineno, "expected `l <vertex> <c1> ...`")
            v = _parse_vertex(lineno, tokens[1], n)
            entries[v] = tuple(int(t) for t in tokens[2:])
        elif tokens[0] == "L":
            if len(tokens) != 4:
                _fail(lineno, "expected `L <vertex> <lo> <hi>`")
            v = _parse_vertex(lineno, tokens[1], n)
            entries[v] = ("range", int(tokens[2]), int(tokens[3]))
        else:
            _fail(lineno, f"unexpected record {tokens[0]!r}")
    missing = [v + 1 for v in range(n) if entries[v] is None]
    if missing:
        raise InputFormatError(f"no list for vertices {missing}")
    return ListAssignment(entries)


def format_lists(lists):
    lines = []
    for v in range(lists.n):
        e = lists.entry(v)
        if lists.is_range(v):
            lines.append(f"L {v + 1} {e[1]} {e[2]}")
        else:
            lines.append(f"l {v + 1} " + " ".join(str(c) for c in e))
    return "\n".join(lines) + "\n"
