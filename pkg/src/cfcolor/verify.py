"""Certification of colorings and combinatorial certificates.

Every positive output produced elsewhere in the package is expected to
pass through this module.  All functions are pure; violations are
reported, never raised.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass


@dataclass(frozen=True)
class EdgeWitness:
    edge_index: int
    vertex: int
    color: int


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    witnesses: tuple = ()
    edge_violations: tuple = ()  # indices of edges with no unique color
    list_violations: tuple = ()  # vertices colored outside their list
    totality_violations: tuple = ()  # uncolored vertices, when totality required

    def lines(self):
        out = [f"valid {'yes' if self.valid else 'no'}"]
        for w in self.witnesses:
            out.append(f"edge {w.edge_index} witness {w.vertex} color {w.color}")
        for i in self.edge_violations:
            out.append(f"edge {i} violation no-unique-color")
        for v in self.list_violations:
            out.append(f"vertex {v} violation color-not-in-list")
        for v in self.totality_violations:
            out.append(f"vertex {v} violation uncolored")
        return out


def verify_cf(h, f, lists=None, require_total=False):
    """Check that f is a conflict-free partial coloring of h.

    Valid iff every hyperedge has a colored vertex whose color appears
    exactly once among the colored vertices of that edge, every colored
    vertex respects its list (when lists are given), and every vertex is
    colored (when require_total).  Uncolored vertices are ignored by the
    uniqueness count.  When several unique colors exist in an edge the
    reported witness carries the smallest one.
    """
    witnesses = []
    edge_violations = []
    for i, edge in enumerate(h.edges):
        counts = Counter()
        holder = {}
        for v in edge:
            c = f.get(v)
            if c is not None:
                counts[c] += 1
                holder[c] = v
        unique = [c for c, k in counts.items() if k == 1]
        if unique:
            c = min(unique)
            witnesses.append(EdgeWitness(i, holder[c], c))
        else:
            edge_violations.append(i)

    list_violations = []
    if lists is not None:
        for v, c in f.items():
            if not lists.contains(v, c):
                list_violations.append(v)

    totality_violations = []
    if require_total:
        totality_violations = [v for v in range(h.n) if v not in f]

    valid = not (edge_violations or list_violations or totality_violations)
    return VerificationReport(
        valid=valid,
        witnesses=tuple(witnesses),
        edge_violations=tuple(edge_violations),
        list_violations=tuple(sorted(list_violations)),
        totality_violations=tuple(sorted(totality_violations)),
    )


def is_pimds(g, s):
    """Perfect induced matching dominating set: the subgraph induced by s
    is a perfect matching of s and every vertex of g has exactly one
    neighbor in s.  Both conditions collapse to |N(v) & s| == 1 for all v.
    """
    s = set(s)
    return all(sum(1 for w in g.adj[v] if w in s) == 1 for v in range(g.n))


def is_pids(g, s):
    """Perfect independent dominating set: s is independent and every
    vertex outside s has exactly one neighbor in s."""
    s = set(s)
    for v in range(g.n):
        k = sum(1 for w in g.adj[v] if w in s)
        if v in s:
            if k != 0:
                return False
        elif k != 1:
            return False
    return True
