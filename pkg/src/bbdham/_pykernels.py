"""Pure-Python kernels over packed bit rows.

Every function here has a twin in ``_ckernels.pyx`` with identical results;
the compiled twin is selected by :mod:`bbdham.kernels` when available.
"""

from __future__ import annotations


def decode_rows(a: int, index: int) -> list[int]:
    mask = (1 << a) - 1
    rows = [((index >> (i * a)) & mask) << a for i in range(a)]
    rows += [(index >> (a * a + j * a)) & mask for j in range(a)]
    return rows


def transpose(rows: list[int]) -> list[int]:
    n = len(rows)
    cols = [0] * n
    for u in range(n):
        row = rows[u]
        while row:
            low = row & -row
            cols[low.bit_length() - 1] |= 1 << u
            row ^= low
    return cols


def _closure(rows: list[int], full: int) -> int:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= rows[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & ~seen
        seen |= frontier
        if seen == full:
            return seen
    return seen


def strongly_connected(out_rows: list[int], in_rows: list[int]) -> bool:
    full = (1 << len(out_rows)) - 1
    return _closure(out_rows, full) == full and _closure(in_rows, full) == full


def condition_a(a: int, out_rows: list[int], in_rows: list[int]) -> bool:
    n = 2 * a
    bound = 3 * a
    deg = [out_rows[v].bit_count() + in_rows[v].bit_count() for v in range(n)]
    for rows in (out_rows, in_rows):
        for w in range(n):
            row = rows[w]
            if row & (row - 1) == 0:
                continue
            # only the two smallest degrees among the pair candidates matter
            m1 = m2 = 4 * a
            while row:
                low = row & -row
                d = deg[low.bit_length() - 1]
                if d < m1:
                    m1, m2 = d, m1
                elif d < m2:
                    m2 = d
                row ^= low
            if m1 + m2 < bound:
                return False
    return True


def hypotheses_scan(a: int, lo: int, hi: int) -> list[int]:
    """Indices in ``[lo, hi)`` whose digraph is strongly connected and satisfies condition A."""
    hits = []
    for index in range(lo, hi):
        out_rows = decode_rows(a, index)
        if not all(out_rows):
            continue
        in_rows = transpose(out_rows)
        if not all(in_rows):
            continue
        if condition_a(a, out_rows, in_rows) and strongly_connected(out_rows, in_rows):
            hits.append(index)
    return hits


def hamiltonian_cycle(out_rows: list[int], in_rows: list[int]) -> list[int] | None:
    """First Hamiltonian cycle from vertex 0, extending by ascending neighbour index.

    A branch is cut when some unvisited vertex has no in-arc from the
    unvisited set plus the path end, or no out-arc to the unvisited set plus
    the start vertex.
    """
    n = len(out_rows)
    if n == 0:
        return None
    full = (1 << n) - 1
    path = [0]

    def extend(end: int, unvisited: int) -> bool:
        if not unvisited:
            return bool(out_rows[end] & 1)
        rest = unvisited
        pred_ok = unvisited | (1 << end)
        succ_ok = unvisited | 1
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            if not (in_rows[v] & pred_ok) or not (out_rows[v] & succ_ok):
                return False
            rest ^= low
        cand = out_rows[end] & unvisited
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            path.append(v)
            if extend(v, unvisited ^ low):
                return True
            path.pop()
            cand ^= low
        return False

    if extend(0, full ^ 1):
        return path
    return None
