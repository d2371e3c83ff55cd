"""Compiled exhaustive counter for 2-ordered partitions.

The 2-ordered exploration runs to n = 14, where the search tree has one node
per path partition (~1.8e8 nodes).  That is out of reach for the pure-Python
scan in oracle.py, so the identical search is restated here in flat-array
form and JIT-compiled with numba.  Without numba the caller falls back to
the pure scan.

The kernel mirrors oracle._scan exactly: lexicographic chord order, degree
and component pruning, a crossing counter per chord, and the endpoint
interval predicate evaluated at every node.  Correctness is pinned by tests
comparing it against the pure-Python route for all n <= 9.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - environment without numba
    HAVE_NUMBA = False

    def njit(**kwargs):
        def wrap(fn):
            return fn

        return wrap


def _chord_arrays(n: int):
    """Chord endpoints (0-based) and CSR lists of crossing chord indices."""
    edges = [(a, b) for a in range(n) for b in range(a + 1, n)]
    index = {e: i for i, e in enumerate(edges)}
    cross: list[list[int]] = [[] for _ in edges]
    for i, (a, b) in enumerate(edges):
        for c in range(a + 1, b):
            for d in range(b + 1, n):
                j = index[(c, d)]
                cross[i].append(j)
                cross[j].append(i)
    ea = np.array([e[0] for e in edges], dtype=np.int64)
    eb = np.array([e[1] for e in edges], dtype=np.int64)
    starts = np.zeros(len(edges) + 1, dtype=np.int64)
    for i, lst in enumerate(cross):
        starts[i + 1] = starts[i] + len(lst)
    flat = np.array([j for lst in cross for j in lst], dtype=np.int64)
    return ea, eb, starts, flat


@njit(cache=True)
def _node_ok(n, variant, deg, comp, lo, hi, have, clist):  # pragma: no cover - jitted
    """Endpoint-interval predicate at one search node (variant 0=A, 1=B, 2=C)."""
    k = 0
    for v in range(n):
        if deg[v] <= 1:
            c = comp[v]
            if have[c] == 0:
                have[c] = 1
                lo[c] = v
                hi[c] = v
                clist[k] = c
                k += 1
            else:
                hi[c] = v  # vertices scanned in increasing order
    good = True
    for pi in range(k):
        p = clist[pi]
        i = lo[p]
        j = hi[p]
        singleton = i == j
        if singleton and variant != 1:
            continue
        inside = 0
        contained = False
        for qi in range(k):
            if qi == pi:
                continue
            q = clist[qi]
            a = lo[q]
            b = hi[q]
            if i < a and b < j and (variant != 2 or a != b):
                inside += 1
            if a < b and a < i and j < b:
                contained = True
        if singleton:
            if not contained:
                good = False
                break
        elif inside != 1 and not contained:
            good = False
            break
    for pi in range(k):
        have[clist[pi]] = 0
    if good:
        return 1
    return 0


@njit(cache=True)
def _count_kernel(n, variant, ea, eb, cross_start, cross_flat):  # pragma: no cover - jitted
    m = ea.shape[0]
    deg = np.zeros(n, dtype=np.int64)
    comp = np.arange(n, dtype=np.int64)
    blocked = np.zeros(m, dtype=np.int64)

    max_depth = n + 1
    added = np.empty(max_depth, dtype=np.int64)
    old_label = np.empty(max_depth, dtype=np.int64)
    undo_start = np.empty(max_depth, dtype=np.int64)
    undo_buf = np.empty(n * max_depth, dtype=np.int64)
    undo_pos = 0

    lo = np.empty(n, dtype=np.int64)
    hi = np.empty(n, dtype=np.int64)
    have = np.zeros(n, dtype=np.int64)
    clist = np.empty(n, dtype=np.int64)

    count = 0
    depth = 0
    cur = 0

    count += _node_ok(n, variant, deg, comp, lo, hi, have, clist)
    while True:
        moved = False
        e = cur
        while e < m:
            if blocked[e] == 0:
                a = ea[e]
                b = eb[e]
                if deg[a] < 2 and deg[b] < 2 and comp[a] != comp[b]:
                    ca = comp[a]
                    cb = comp[b]
                    deg[a] += 1
                    deg[b] += 1
                    added[depth] = e
                    old_label[depth] = cb
                    undo_start[depth] = undo_pos
                    for v in range(n):
                        if comp[v] == cb:
                            comp[v] = ca
                            undo_buf[undo_pos] = v
                            undo_pos += 1
                    for t in range(cross_start[e], cross_start[e + 1]):
                        blocked[cross_flat[t]] += 1
                    depth += 1
                    count += _node_ok(n, variant, deg, comp, lo, hi, have, clist)
                    cur = e + 1
                    moved = True
                    break
            e += 1
        if moved:
            continue
        if depth == 0:
            break
        depth -= 1
        e = added[depth]
        cb = old_label[depth]
        for t in range(cross_start[e], cross_start[e + 1]):
            blocked[cross_flat[t]] -= 1
        for t in range(undo_start[depth], undo_pos):
            comp[undo_buf[t]] = cb
        undo_pos = undo_start[depth]
        deg[ea[e]] -= 1
        deg[eb[e]] -= 1
        cur = e + 1
    return count


_VARIANT_CODE = {"A": 0, "B": 1, "C": 2}


def count_ordered2(n: int, variant: str):
    """Exact 2-ordered count via the compiled kernel, or None if unavailable."""
    if not HAVE_NUMBA:
        return None
    ea, eb, starts, flat = _chord_arrays(n)
    return int(_count_kernel(n, _VARIANT_CODE[variant], ea, eb, starts, flat))
