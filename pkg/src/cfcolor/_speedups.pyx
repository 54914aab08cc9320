# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels.

Exact port of ``_kernel_py``: the two backends must explore the identical
search tree and return byte-identical results.  Status codes: 0 = solution
found, 1 = exhausted (no solution), 2 = node budget exceeded.
"""

from libc.stdlib cimport calloc, free

DEF UNDECIDED = -2
DEF UNCOLORED = -1


cdef class _CFSolver:
    cdef int n, m, num_colors
    cdef bint require_total, symmetric
    cdef long long budget, nodes
    # flat CSR-style layouts for edges, lists and incidences
    cdef int *edge_start
    cdef int *edge_vert
    cdef int *list_start
    cdef int *list_color
    cdef int *inc_start
    cdef int *inc_edge
    cdef int *order
    cdef int *cnt          # m * num_colors
    cdef int *uniq
    cdef int *und
    cdef int *state
    cdef int unsat

    def __cinit__(self):
        self.edge_start = NULL
        self.edge_vert = NULL
        self.list_start = NULL
        self.list_color = NULL
        self.inc_start = NULL
        self.inc_edge = NULL
        self.order = NULL
        self.cnt = NULL
        self.uniq = NULL
        self.und = NULL
        self.state = NULL

    def __dealloc__(self):
        free(self.edge_start)
        free(self.edge_vert)
        free(self.list_start)
        free(self.list_color)
        free(self.inc_start)
        free(self.inc_edge)
        free(self.order)
        free(self.cnt)
        free(self.uniq)
        free(self.und)
        free(self.state)

    cdef void build(self, int n, list edges, list lists,
                    bint require_total, bint symmetric, long long budget):
        cdef int m = len(edges)
        cdef int i, v, c, ei, total
        self.n = n
        self.m = m
        self.require_total = require_total
        self.symmetric = symmetric
        self.budget = budget
        self.nodes = 0

        cdef int num_colors = 0
        for lst in lists:
            for c in lst:
                if c + 1 > num_colors:
                    num_colors = c + 1
        self.num_colors = num_colors

        total = 0
        for e in edges:
            total += len(e)
        self.edge_start = <int *> calloc(m + 1, sizeof(int))
        self.edge_vert = <int *> calloc(total if total else 1, sizeof(int))
        i = 0
        for ei in range(m):
            self.edge_start[ei] = i
            for v in edges[ei]:
                self.edge_vert[i] = v
                i += 1
        self.edge_start[m] = i

        total = 0
        for lst in lists:
            total += len(lst)
        self.list_start = <int *> calloc(n + 1, sizeof(int))
        self.list_color = <int *> calloc(total if total else 1, sizeof(int))
        i = 0
        for v in range(n):
            self.list_start[v] = i
            for c in lists[v]:
                self.list_color[i] = c
                i += 1
        self.list_start[n] = i

        # incidences, in edge-index order per vertex (same as the Python
        # kernel's append order)
        cdef int *deg = <int *> calloc(n if n else 1, sizeof(int))
        for ei in range(m):
            for i in range(self.edge_start[ei], self.edge_start[ei + 1]):
                deg[self.edge_vert[i]] += 1
        self.inc_start = <int *> calloc(n + 1, sizeof(int))
        total = 0
        for v in range(n):
            self.inc_start[v] = total
            total += deg[v]
        self.inc_start[n] = total
        self.inc_edge = <int *> calloc(total if total else 1, sizeof(int))
        cdef int *fill = <int *> calloc(n if n else 1, sizeof(int))
        for ei in range(m):
            for i in range(self.edge_start[ei], self.edge_start[ei + 1]):
                v = self.edge_vert[i]
                self.inc_edge[self.inc_start[v] + fill[v]] = ei
                fill[v] += 1
        free(fill)

        # branch order: decreasing incidence degree, ties by vertex id
        deg_py = [deg[v] for v in range(n)]
        free(deg)
        order_py = sorted(range(n), key=lambda u: (-deg_py[u], u))
        self.order = <int *> calloc(n if n else 1, sizeof(int))
        for i in range(n):
            self.order[i] = order_py[i]

        self.cnt = <int *> calloc(
            (m * num_colors) if m * num_colors else 1, sizeof(int))
        self.uniq = <int *> calloc(m if m else 1, sizeof(int))
        self.und = <int *> calloc(m if m else 1, sizeof(int))
        for ei in range(m):
            self.und[ei] = self.edge_start[ei + 1] - self.edge_start[ei]
        self.unsat = m
        self.state = <int *> calloc(n if n else 1, sizeof(int))
        for v in range(n):
            self.state[v] = UNDECIDED

    cdef bint edge_alive(self, int ei):
        if self.uniq[ei] != 0:
            return True
        if self.und[ei] == 0:
            return False
        cdef int *row = self.cnt + ei * self.num_colors
        cdef int i, j, v
        for i in range(self.edge_start[ei], self.edge_start[ei + 1]):
            v = self.edge_vert[i]
            if self.state[v] == UNDECIDED:
                for j in range(self.list_start[v], self.list_start[v + 1]):
                    if row[self.list_color[j]] == 0:
                        return True
        return False

    cdef bint assign(self, int v, int value):
        cdef int i, ei
        cdef int *row
        cdef bint ok = True
        self.state[v] = value
        for i in range(self.inc_start[v], self.inc_start[v + 1]):
            ei = self.inc_edge[i]
            self.und[ei] -= 1
            if value >= 0:
                row = self.cnt + ei * self.num_colors
                row[value] += 1
                if row[value] == 1:
                    self.uniq[ei] += 1
                    if self.uniq[ei] == 1:
                        self.unsat -= 1
                elif row[value] == 2:
                    self.uniq[ei] -= 1
                    if self.uniq[ei] == 0:
                        self.unsat += 1
        for i in range(self.inc_start[v], self.inc_start[v + 1]):
            if not self.edge_alive(self.inc_edge[i]):
                ok = False
                break
        return ok

    cdef void unassign(self, int v, int value):
        cdef int i, ei
        cdef int *row
        self.state[v] = UNDECIDED
        for i in range(self.inc_start[v], self.inc_start[v + 1]):
            ei = self.inc_edge[i]
            self.und[ei] += 1
            if value >= 0:
                row = self.cnt + ei * self.num_colors
                if row[value] == 1:
                    self.uniq[ei] -= 1
                    if self.uniq[ei] == 0:
                        self.unsat += 1
                elif row[value] == 2:
                    self.uniq[ei] += 1
                    if self.uniq[ei] == 1:
                        self.unsat -= 1
                row[value] -= 1

    cdef int search(self, int idx, int max_used):
        cdef int v, c, j, limit, r, new_max
        if not self.require_total and self.unsat == 0:
            return 0
        if idx == self.n:
            return 0 if self.unsat == 0 else 1
        v = self.order[idx]
        limit = self.list_start[v + 1]
        if self.symmetric:
            if limit - self.list_start[v] > max_used + 2:
                limit = self.list_start[v] + max_used + 2
        for j in range(self.list_start[v], limit):
            c = self.list_color[j]
            self.nodes += 1
            if self.nodes > self.budget:
                return 2
            if self.assign(v, c):
                if self.symmetric:
                    new_max = c if c > max_used else max_used
                else:
                    new_max = max_used
                r = self.search(idx + 1, new_max)
                if r != 1:
                    return r
            self.unassign(v, c)
        if not self.require_total:
            self.nodes += 1
            if self.nodes > self.budget:
                return 2
            if self.assign(v, UNCOLORED):
                r = self.search(idx + 1, max_used)
                if r != 1:
                    return r
            self.unassign(v, UNCOLORED)
        return 1


def solve_cf(n, edges, lists, require_total, symmetric, budget):
    """Backtracking search for a conflict-free (partial) list coloring.

    Same contract and search order as ``_kernel_py.solve_cf``.
    """
    cdef _CFSolver s = _CFSolver()
    s.build(int(n), [list(e) for e in edges], [list(l) for l in lists],
            bool(require_total), bool(symmetric), int(budget))
    cdef int status = s.search(0, -1)
    if status == 0:
        result = [s.state[v] if s.state[v] >= 0 else -1 for v in range(s.n)]
        return 0, result, s.nodes
    return status, None, s.nodes


cdef class _ExactOne:
    cdef int n, m
    cdef long long budget, nodes
    cdef int *con_start
    cdef int *con_set
    cdef int *cnt
    cdef int *und
    cdef char *chosen

    def __cinit__(self):
        self.con_start = NULL
        self.con_set = NULL
        self.cnt = NULL
        self.und = NULL
        self.chosen = NULL

    def __dealloc__(self):
        free(self.con_start)
        free(self.con_set)
        free(self.cnt)
        free(self.und)
        free(self.chosen)

    cdef void build(self, int n, list sets, long long budget):
        cdef int m = len(sets)
        cdef int i, v, si, total
        self.n = n
        self.m = m
        self.budget = budget
        self.nodes = 0

        cdef int *deg = <int *> calloc(n if n else 1, sizeof(int))
        total = 0
        for s in sets:
            for v in s:
                deg[v] += 1
                total += 1
        self.con_start = <int *> calloc(n + 1, sizeof(int))
        i = 0
        for v in range(n):
            self.con_start[v] = i
            i += deg[v]
        self.con_start[n] = i
        self.con_set = <int *> calloc(total if total else 1, sizeof(int))
        cdef int *fill = <int *> calloc(n if n else 1, sizeof(int))
        for si in range(m):
            for v in sets[si]:
                self.con_set[self.con_start[v] + fill[v]] = si
                fill[v] += 1
        free(fill)
        free(deg)

        self.cnt = <int *> calloc(m if m else 1, sizeof(int))
        self.und = <int *> calloc(m if m else 1, sizeof(int))
        for si in range(m):
            self.und[si] = len(sets[si])
        self.chosen = <char *> calloc(n if n else 1, sizeof(char))

    cdef bint decide(self, int v, bint inside):
        cdef int i, si
        cdef bint ok = True
        for i in range(self.con_start[v], self.con_start[v + 1]):
            si = self.con_set[i]
            self.und[si] -= 1
            if inside:
                self.cnt[si] += 1
        for i in range(self.con_start[v], self.con_start[v + 1]):
            si = self.con_set[i]
            if self.cnt[si] > 1 or (self.cnt[si] == 0 and self.und[si] == 0):
                ok = False
                break
        return ok

    cdef void undecide(self, int v, bint inside):
        cdef int i, si
        for i in range(self.con_start[v], self.con_start[v + 1]):
            si = self.con_set[i]
            self.und[si] += 1
            if inside:
                self.cnt[si] -= 1

    cdef int search(self, int v):
        cdef int r, si
        cdef bint inside
        if v == self.n:
            for si in range(self.m):
                if self.cnt[si] != 1:
                    return 1
            return 0
        for inside in (True, False):
            self.nodes += 1
            if self.nodes > self.budget:
                return 2
            self.chosen[v] = inside
            if self.decide(v, inside):
                r = self.search(v + 1)
                if r != 1:
                    return r
            self.undecide(v, inside)
        self.chosen[v] = False
        return 1


def exact_one(n, sets, budget):
    """Find a vertex subset hitting every set exactly once.

    Same contract and search order as ``_kernel_py.exact_one``.
    """
    cdef _ExactOne s = _ExactOne()
    s.build(int(n), [list(x) for x in sets], int(budget))
    cdef int status = s.search(0)
    if status == 0:
        return 0, [v for v in range(s.n) if s.chosen[v]], s.nodes
    return status, None, s.nodes
