"""Color lists and partial colorings.

Colors are opaque non-negative integers; equality is their only semantic
operation.  Lists are either explicit sorted sets or implicit contiguous
ranges [lo, hi) -- the latter avoids materializing the huge lists the
randomized pipeline works with.
"""

from __future__ import annotations


class ListAssignment:
    """Per-vertex color list.

    Each entry is either a sorted tuple of colors or a ("range", lo, hi)
    marker for the implicit list {lo, .., hi-1}.
    """

    __slots__ = ("n", "_entries")

    def __init__(self, entries):
        normalized = []
        for e in entries:
            if isinstance(e, tuple) and len(e) == 3 and e[0] == "range":
                _, lo, hi = e
                if hi <= lo:
                    raise ValueError("empty implicit range list")
                normalized.append(("range", lo, hi))
            else:
                colors = tuple(sorted(set(e)))
                if not colors:
                    raise ValueError("every list must be non-empty")
                if colors[0] < 0:
                    raise ValueError("colors must be non-negative")
                normalized.append(colors)
        self.n = len(normalized)
        self._entries = tuple(normalized)

    @classmethod
    def uniform(cls, n, colors):
        colors = tuple(sorted(set(colors)))
        return cls([colors] * n)

    @classmethod
    def uniform_range(cls, n, size, lo=0):
        return cls([("range", lo, lo + size)] * n)

    def is_range(self, v):
        e = self._entries[v]
        return isinstance(e, tuple) and len(e) == 3 and e[0] == "range"

    def size(self, v):
        e = self._entries[v]
        if self.is_range(v):
            return e[2] - e[1]
        return len(e)

    def colors(self, v):
        """Colors of L_v, ascending."""
        e = self._entries[v]
        if self.is_range(v):
            return range(e[1], e[2])
        return e

    def contains(self, v, color):
        e = self._entries[v]
        if self.is_range(v):
            return e[1] <= color < e[2]
        return color in e

    def sample(self, v, rng):
        """Uniform color from L_v."""
        e = self._entries[v]
        if self.is_range(v):
            return rng.randrange(e[1], e[2])
        return e[rng.randrange(len(e))]

    def without(self, v, removed):
        """L_v minus `removed`, as an explicit sorted tuple."""
        return tuple(c for c in self.colors(v) if c not in removed)

    def is_k_assignment(self, k):
        return all(self.size(v) == k for v in range(self.n))

    def restrict(self, vertices):
        """Entries for the given vertices, in the given order."""
        return ListAssignment([self._entries[v] for v in vertices])

    def entry(self, v):
        return self._entries[v]

    def __eq__(self, other):
        return (
            isinstance(other, ListAssignment) and self._entries == other._entries
        )

    def __hash__(self):
        return hash(self._entries)

    def __repr__(self):
        return f"ListAssignment(n={self.n})"


class PartialColoring:
    """Immutable map from a subset of vertices to colors."""

    __slots__ = ("_map",)

    def __init__(self, mapping=()):
        m = dict(mapping)
        for v, c in m.items():
            if c < 0:
                raise ValueError("colors must be non-negative")
        self._map = m

    @property
    def domain(self):
        return self._map.keys()

    def get(self, v):
        return self._map.get(v)

    def __contains__(self, v):
        return v in self._map

    def __getitem__(self, v):
        return self._map[v]

    def __len__(self):
        return len(self._map)

    def items(self):
        return self._map.items()

    def is_total(self, n):
        return len(self._map) == n and all(v in self._map for v in range(n))

    def union(self, other):
        """Combined coloring; domains must be disjoint."""
        overlap = self._map.keys() & other._map.keys()
        if overlap:
            raise ValueError(f"colorings overlap on vertices {sorted(overlap)}")
        merged = dict(self._map)
        merged.update(other._map)
        return PartialColoring(merged)

    def __eq__(self, other):
        return isinstance(other, PartialColoring) and self._map == other._map

    def __hash__(self):
        return hash(frozenset(self._map.items()))

    def __repr__(self):
        body = ", ".join(f"{v}:{c}" for v, c in sorted(self._map.items()))
        return f"PartialColoring({{{body}}})"
