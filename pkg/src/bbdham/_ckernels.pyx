# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels over packed bit rows (at most 64 vertices).

Mirrors ``_pykernels`` exactly; results must be identical.
"""

from libc.stdint cimport uint64_t

cdef enum:
    MAXN = 64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef inline int ctz(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef inline uint64_t full_mask(int n) nogil:
    if n >= 64:
        return <uint64_t>0xFFFFFFFFFFFFFFFF
    return ((<uint64_t>1) << n) - 1


cdef void c_decode(int a, uint64_t index, uint64_t* out_rows) nogil:
    cdef uint64_t mask = ((<uint64_t>1) << a) - 1
    cdef int i
    for i in range(a):
        out_rows[i] = ((index >> (i * a)) & mask) << a
    for i in range(a):
        out_rows[a + i] = (index >> (a * a + i * a)) & mask


cdef void c_transpose(int n, const uint64_t* rows, uint64_t* cols) nogil:
    cdef int u
    cdef uint64_t row
    for u in range(n):
        cols[u] = 0
    for u in range(n):
        row = rows[u]
        while row:
            cols[ctz(row)] |= (<uint64_t>1) << u
            row &= row - 1


cdef uint64_t c_closure(int n, const uint64_t* rows) nogil:
    cdef uint64_t full = full_mask(n)
    cdef uint64_t seen = 1, frontier = 1, nxt
    while frontier:
        nxt = 0
        while frontier:
            nxt |= rows[ctz(frontier)]
            frontier &= frontier - 1
        frontier = nxt & ~seen
        seen |= frontier
        if seen == full:
            break
    return seen


cdef bint c_strongly_connected(int n, const uint64_t* out_rows, const uint64_t* in_rows) nogil:
    cdef uint64_t full = full_mask(n)
    return c_closure(n, out_rows) == full and c_closure(n, in_rows) == full


cdef bint c_condition_a(int a, const uint64_t* out_rows, const uint64_t* in_rows) nogil:
    cdef int n = 2 * a
    cdef int bound = 3 * a
    cdef int deg[MAXN]
    cdef int v, w, m1, m2, d, k
    cdef uint64_t row
    cdef const uint64_t* rows
    for v in range(n):
        deg[v] = popcount(out_rows[v]) + popcount(in_rows[v])
    for k in range(2):
        rows = out_rows if k == 0 else in_rows
        for w in range(n):
            row = rows[w]
            if (row & (row - 1)) == 0:
                continue
            m1 = 4 * a
            m2 = 4 * a
            while row:
                d = deg[ctz(row)]
                if d < m1:
                    m2 = m1
                    m1 = d
                elif d < m2:
                    m2 = d
                row &= row - 1
            if m1 + m2 < bound:
                return False
    return True


cdef int _load(list rows, uint64_t* buf) except -1:
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i
    if n > MAXN:
        raise ValueError("compiled kernels support at most 64 vertices")
    for i in range(n):
        buf[i] = rows[i]
    return <int>n


def decode_rows(int a, index):
    cdef uint64_t buf[MAXN]
    if a < 1 or 2 * a * a > 64:
        raise ValueError("index wider than 64 bits")
    c_decode(a, <uint64_t>index, buf)
    return [buf[i] for i in range(2 * a)]


def transpose(list rows):
    cdef uint64_t buf[MAXN]
    cdef uint64_t cols[MAXN]
    cdef int n = _load(rows, buf)
    c_transpose(n, buf, cols)
    return [cols[i] for i in range(n)]


def strongly_connected(list out_rows, list in_rows):
    cdef uint64_t o[MAXN]
    cdef uint64_t r[MAXN]
    cdef int n = _load(out_rows, o)
    _load(in_rows, r)
    return bool(c_strongly_connected(n, o, r))


def condition_a(int a, list out_rows, list in_rows):
    cdef uint64_t o[MAXN]
    cdef uint64_t r[MAXN]
    _load(out_rows, o)
    _load(in_rows, r)
    return bool(c_condition_a(a, o, r))


def hypotheses_scan(int a, lo, hi):
    """Indices in ``[lo, hi)`` whose digraph is strongly connected and satisfies condition A."""
    cdef uint64_t o[MAXN]
    cdef uint64_t r[MAXN]
    cdef uint64_t index = lo, stop = hi
    cdef int n = 2 * a, v
    cdef bint ok
    if 2 * a * a > 63:
        raise ValueError("index space too large for the compiled scan")
    hits = []
    while index < stop:
        c_decode(a, index, o)
        ok = True
        for v in range(n):
            if o[v] == 0:
                ok = False
                break
        if ok:
            c_transpose(n, o, r)
            for v in range(n):
                if r[v] == 0:
                    ok = False
                    break
        if ok and c_condition_a(a, o, r) and c_strongly_connected(n, o, r):
            hits.append(index)
        index += 1
    return hits


cdef bint c_extend(int n, const uint64_t* out_rows, const uint64_t* in_rows,
                   int end, uint64_t unvisited, int* path, int depth) nogil:
    cdef uint64_t rest, cand, low, pred_ok, succ_ok
    cdef int v
    if unvisited == 0:
        return (out_rows[end] & 1) != 0
    pred_ok = unvisited | ((<uint64_t>1) << end)
    succ_ok = unvisited | 1
    rest = unvisited
    while rest:
        v = ctz(rest)
        if (in_rows[v] & pred_ok) == 0 or (out_rows[v] & succ_ok) == 0:
            return False
        rest &= rest - 1
    cand = out_rows[end] & unvisited
    while cand:
        low = cand & (~cand + 1)
        v = ctz(cand)
        path[depth] = v
        if c_extend(n, out_rows, in_rows, v, unvisited ^ low, path, depth + 1):
            return True
        cand ^= low
    return False


def hamiltonian_cycle(list out_rows, list in_rows):
    """First Hamiltonian cycle from vertex 0, extending by ascending neighbour index."""
    cdef uint64_t o[MAXN]
    cdef uint64_t r[MAXN]
    cdef int path[MAXN]
    cdef int n = _load(out_rows, o)
    cdef bint found
    _load(in_rows, r)
    if n == 0:
        return None
    path[0] = 0
    with nogil:
        found = c_extend(n, o, r, 0, full_mask(n) ^ 1, path, 1)
    if found:
        return [path[i] for i in range(n)]
    return None
