# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels; same contracts as ``_kernels_py``."""

from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memset

import numpy as np

from .errors import BudgetExceeded


cdef int _closure(const int[:, ::1] t, int identity, const int* gens, int ngens,
                  int* seen, int stamp, int* queue) noexcept nogil:
    cdef int head = 0, tail = 1, x, y, j
    seen[identity] = stamp
    queue[0] = identity
    while head < tail:
        x = queue[head]
        head += 1
        for j in range(ngens):
            y = t[x, gens[j]]
            if seen[y] != stamp:
                seen[y] = stamp
                queue[tail] = y
                tail += 1
    return tail


def closure_size(table, int identity, gens):
    cdef int[:, ::1] t = np.ascontiguousarray(table, dtype=np.intc)
    cdef int[::1] g = np.ascontiguousarray(np.asarray(list(gens), dtype=np.intc))
    cdef int size = t.shape[0]
    cdef int[::1] seen = np.zeros(size, dtype=np.intc)
    cdef int[::1] queue = np.empty(size, dtype=np.intc)
    cdef int ngens = g.shape[0]
    cdef int* gp = &g[0] if ngens > 0 else NULL
    return _closure(t, identity, gp, ngens, &seen[0], 1, &queue[0])


def search_subsets(table, int identity, pool, int k, int target, int lo=0, hi=None):
    cdef int[:, ::1] t = np.ascontiguousarray(table, dtype=np.intc)
    cdef int[::1] pl = np.ascontiguousarray(np.asarray(list(pool), dtype=np.intc))
    cdef int P = pl.shape[0]
    cdef int H = P if hi is None else min(<int>hi, P)
    cdef int size = t.shape[0]
    if k == 0:
        if lo > 0:
            return None, 0
        return ((), 1) if closure_size(table, identity, ()) == target else (None, 1)
    cdef int[::1] seen = np.zeros(size, dtype=np.intc)
    cdef int[::1] queue = np.empty(size, dtype=np.intc)
    cdef int[::1] idx = np.empty(k, dtype=np.intc)
    cdef int[::1] gens = np.empty(k, dtype=np.intc)
    cdef long long examined = 0
    cdef int stamp = 0, i0, j, l, found = 0
    with nogil:
        for i0 in range(lo, H):
            if P - i0 < k:
                break
            for j in range(k):
                idx[j] = i0 + j
            while True:
                examined += 1
                for j in range(k):
                    gens[j] = pl[idx[j]]
                stamp += 1
                if _closure(t, identity, &gens[0], k, &seen[0], stamp, &queue[0]) == target:
                    found = 1
                    break
                j = k - 1
                while j >= 1 and idx[j] == P - k + j:
                    j -= 1
                if j < 1:
                    break
                idx[j] += 1
                for l in range(j + 1, k):
                    idx[l] = idx[l - 1] + 1
            if found:
                break
    if found:
        return tuple(int(gens[j]) for j in range(k)), examined
    return None, examined


cdef class _Enumerator:
    cdef int k
    cdef int* tab
    cdef int* fwd
    cdef long nodes
    cdef long cap
    cdef long alive
    cdef long* stack
    cdef long stack_cap
    cdef long stack_top
    cdef int* rel_data
    cdef long* rel_off
    cdef int nrels

    def __cinit__(self, int k, relations):
        self.k = k
        self.cap = 1024
        self.tab = <int*> malloc(self.cap * k * sizeof(int))
        self.fwd = <int*> malloc(self.cap * sizeof(int))
        self.stack_cap = 1024
        self.stack = <long*> malloc(self.stack_cap * 2 * sizeof(long))
        flat = []
        offs = [0]
        for u, v in relations:
            flat.extend(u)
            offs.append(len(flat))
            flat.extend(v)
            offs.append(len(flat))
        self.nrels = len(relations)
        self.rel_data = <int*> malloc((len(flat) + 1) * sizeof(int))
        self.rel_off = <long*> malloc(len(offs) * sizeof(long))
        if not (self.tab and self.fwd and self.stack and self.rel_data and self.rel_off):
            raise MemoryError()
        for i, x in enumerate(flat):
            self.rel_data[i] = x
        for i, x in enumerate(offs):
            self.rel_off[i] = x
        self.nodes = 0
        self.alive = 0
        self.stack_top = 0
        self.new_node()

    def __dealloc__(self):
        free(self.tab)
        free(self.fwd)
        free(self.stack)
        free(self.rel_data)
        free(self.rel_off)

    cdef inline int find(self, int a) noexcept nogil:
        cdef int root = a, nxt
        while self.fwd[root] != root:
            root = self.fwd[root]
        while self.fwd[a] != root:
            nxt = self.fwd[a]
            self.fwd[a] = root
            a = nxt
        return root

    cdef int push(self, long a, long b) noexcept nogil:
        cdef long* p
        if self.stack_top >= self.stack_cap:
            p = <long*> realloc(self.stack, self.stack_cap * 4 * sizeof(long))
            if p == NULL:
                return -1
            self.stack = p
            self.stack_cap *= 2
        self.stack[2 * self.stack_top] = a
        self.stack[2 * self.stack_top + 1] = b
        self.stack_top += 1
        return 0

    cdef int merge(self, int a0, int b0) noexcept nogil:
        cdef int a, b, tmp, x, s, t
        cdef long ra, rb
        self.stack_top = 0
        if self.push(a0, b0) < 0:
            return -1
        while self.stack_top > 0:
            self.stack_top -= 1
            a = self.find(<int> self.stack[2 * self.stack_top])
            b = self.find(<int> self.stack[2 * self.stack_top + 1])
            if a == b:
                continue
            if a > b:
                tmp = a
                a = b
                b = tmp
            self.fwd[b] = a
            self.alive -= 1
            ra = <long> a * self.k
            rb = <long> b * self.k
            for x in range(self.k):
                t = self.tab[rb + x]
                if t >= 0:
                    s = self.tab[ra + x]
                    if s < 0:
                        self.tab[ra + x] = t
                    elif self.push(s, t) < 0:
                        return -1
        return 0

    cdef int new_node(self) noexcept nogil:
        cdef int* p
        cdef int* q
        cdef long i, base
        if self.nodes >= self.cap:
            p = <int*> realloc(self.tab, self.cap * 2 * self.k * sizeof(int))
            if p == NULL:
                return -1
            self.tab = p
            q = <int*> realloc(self.fwd, self.cap * 2 * sizeof(int))
            if q == NULL:
                return -1
            self.fwd = q
            self.cap *= 2
        base = self.nodes * self.k
        for i in range(self.k):
            self.tab[base + i] = -1
        self.fwd[self.nodes] = <int> self.nodes
        self.nodes += 1
        self.alive += 1
        return <int> (self.nodes - 1)

    cdef int scan_and_fill(self, int c, int r, bint define) noexcept nogil:
        # returns -1 on allocation failure
        cdef long u0 = self.rel_off[2 * r], u1 = self.rel_off[2 * r + 1]
        cdef long v0 = u1, v1 = self.rel_off[2 * r + 2]
        cdef long i, pos
        cdef int p = c, q = c, d
        for i in range(u0, u1):
            pos = <long> p * self.k + self.rel_data[i]
            d = self.tab[pos]
            if d < 0:
                if not define:
                    return 0
                d = self.new_node()
                if d < 0:
                    return -1
                self.tab[pos] = d
            else:
                d = self.find(d)
            p = d
        for i in range(v0, v1):
            pos = <long> q * self.k + self.rel_data[i]
            d = self.tab[pos]
            if d < 0:
                if i == v1 - 1:
                    self.tab[pos] = p
                    return 0
                if not define:
                    return 0
                d = self.new_node()
                if d < 0:
                    return -1
                self.tab[pos] = d
            else:
                d = self.find(d)
            q = d
        if p != q:
            return self.merge(p, q)
        return 0

    cdef int lookahead(self) noexcept nogil:
        cdef long c
        cdef int r
        for c in range(self.nodes):
            if self.fwd[c] != c:
                continue
            for r in range(self.nrels):
                if self.scan_and_fill(<int> c, r, False) < 0:
                    return -1
                if self.fwd[c] != c:
                    break
        return 0

    cdef long compact(self, long pointer) noexcept nogil:
        cdef long c, i, x, live = 0, new_pointer = 0
        cdef int d
        # renumbering stored in fwd of live nodes after the pass; use a temp map
        cdef int* renum = <int*> malloc(self.nodes * sizeof(int))
        if renum == NULL:
            return -1
        for c in range(self.nodes):
            if self.fwd[c] == c:
                renum[c] = <int> live
                if c < pointer:
                    new_pointer += 1
                live += 1
            else:
                renum[c] = -1
        for c in range(self.nodes):
            if self.fwd[c] != c:
                continue
            i = renum[c]
            for x in range(self.k):
                d = self.tab[c * self.k + x]
                self.tab[i * self.k + x] = -1 if d < 0 else renum[self.find(d)]
        free(renum)
        for c in range(live):
            self.fwd[c] = <int> c
        self.nodes = live
        return new_pointer

    cdef int run(self, long workspace) except -2:
        cdef long c = 0
        cdef int r, x, d
        cdef long base
        while c < self.nodes:
            if self.fwd[c] != c:
                c += 1
                continue
            if self.alive > workspace:
                if self.lookahead() < 0:
                    raise MemoryError()
                if self.alive > workspace:
                    raise BudgetExceeded(
                        f"more than {workspace} live classes during enumeration", self.alive
                    )
                if self.nodes > 2 * workspace:
                    c = self.compact(c)
                    if c < 0:
                        raise MemoryError()
                    continue
                if self.fwd[c] != c:
                    continue
            with nogil:
                for r in range(self.nrels):
                    if self.scan_and_fill(<int> c, r, True) < 0:
                        with gil:
                            raise MemoryError()
                    if self.fwd[c] != c:
                        break
                if self.fwd[c] == c:
                    base = c * self.k
                    for x in range(self.k):
                        if self.tab[base + x] < 0:
                            d = self.new_node()
                            if d < 0:
                                with gil:
                                    raise MemoryError()
                            self.tab[base + x] = d
            c += 1
        return 0

    def result(self):
        cdef long total = self.alive
        cdef int start = self.find(0)
        cdef int[::1] order = np.full(self.nodes, -1, dtype=np.intc)
        cdef int[::1] queue = np.empty(total, dtype=np.intc)
        cdef int[::1] parent = np.empty(total, dtype=np.intc)
        cdef int[::1] plet = np.empty(total, dtype=np.intc)
        cdef int[:, ::1] out = np.empty((total, self.k), dtype=np.intc)
        cdef long head = 0, tail = 1
        cdef int node, x, d
        order[start] = 0
        queue[0] = start
        parent[0] = -1
        plet[0] = -1
        while head < tail:
            node = queue[head]
            for x in range(self.k):
                d = self.find(self.tab[<long> node * self.k + x])
                if order[d] < 0:
                    order[d] = <int> tail
                    queue[tail] = d
                    parent[tail] = <int> head
                    plet[tail] = x
                    tail += 1
                out[head, x] = order[d]
            head += 1
        return np.asarray(out).tolist(), np.asarray(parent).tolist(), np.asarray(plet).tolist()


def enumerate_cosets(int nletters, relations, long max_classes, long workspace):
    rels = [(tuple(u), tuple(v)) for u, v in relations]
    cdef _Enumerator enum = _Enumerator(nletters, rels)
    enum.run(workspace)
    if enum.alive > max_classes:
        raise BudgetExceeded(f"quotient has {enum.alive} > {max_classes} classes", enum.alive)
    return enum.result()
