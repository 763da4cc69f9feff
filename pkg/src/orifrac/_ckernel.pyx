# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled b-fold search kernel; same contract as ``_pykernel.search_bfold``.

Palettes are limited to 64 colors (one machine word per color set).
"""

from libc.stdlib cimport malloc, free
from libc.stdint cimport uint64_t, int64_t
import time

ctypedef uint64_t mask_t

cdef extern from *:
    int __builtin_clzll(unsigned long long) nogil

cdef inline int highbit(mask_t x) nogil:
    return 63 - __builtin_clzll(x)


def search_bfold(int n, int k, cands, forced, arcs, root_mask, bint canon,
                 long long max_nodes, double deadline, long long max_solutions):
    if k > 64:
        raise ValueError("compiled kernel supports at most 64 colors")
    if n == 0:
        return 1, [[]], 0

    cdef Py_ssize_t ncand = len(cands)
    cdef Py_ssize_t i, j, p, q, e, top, ntotal_forced = 0, ntotal_arcs = 0
    for p in range(n):
        ntotal_forced += len(forced[p])
        ntotal_arcs += len(arcs[p])

    cdef mask_t *cand = <mask_t *> malloc(max(ncand, 1) * sizeof(mask_t))
    cdef int *f_start = <int *> malloc((n + 1) * sizeof(int))
    cdef int *f_pos = <int *> malloc(max(ntotal_forced, 1) * sizeof(int))
    cdef int *a_start = <int *> malloc((n + 1) * sizeof(int))
    cdef int *a_tail = <int *> malloc(max(ntotal_arcs, 1) * sizeof(int))
    cdef int *a_head = <int *> malloc(max(ntotal_arcs, 1) * sizeof(int))
    cdef mask_t *assign = <mask_t *> malloc(n * sizeof(mask_t))
    cdef mask_t *used = <mask_t *> malloc((n + 1) * sizeof(mask_t))
    cdef mask_t *forbid = <mask_t *> malloc(n * sizeof(mask_t))
    cdef Py_ssize_t *ci = <Py_ssize_t *> malloc(n * sizeof(Py_ssize_t))
    cdef int *base = <int *> malloc((n + 1) * sizeof(int))
    cdef mask_t *sx = <mask_t *> malloc(max(ntotal_arcs, 1) * sizeof(mask_t))
    cdef mask_t *sy = <mask_t *> malloc(max(ntotal_arcs, 1) * sizeof(mask_t))

    cdef mask_t full = (<mask_t> 0xFFFFFFFFFFFFFFFF) if k == 64 else ((<mask_t> 1 << k) - 1)
    cdef mask_t root = <mask_t> root_mask
    cdef mask_t c, x, y, fr, nw, below
    cdef long long nodes = 0, nsol = 0
    cdef int status = 0, ok, advanced, limit
    solutions = []

    try:
        for i in range(ncand):
            cand[i] = <mask_t> cands[i]
        j = 0
        e = 0
        for p in range(n):
            f_start[p] = j
            for q in forced[p]:
                f_pos[j] = q
                j += 1
            a_start[p] = e
            for tp, hp in arcs[p]:
                a_tail[e] = tp
                a_head[e] = hp
                e += 1
        f_start[n] = j
        a_start[n] = e

        p = 0
        used[0] = 0
        base[0] = 0
        ci[0] = 0
        forbid[0] = 0
        while p >= 0:
            advanced = 0
            limit = 1 if (p == 0 and root != 0) else ncand
            while ci[p] < limit:
                if p == 0 and root != 0:
                    c = root
                else:
                    c = cand[ci[p]]
                ci[p] += 1
                if c & forbid[p]:
                    continue
                if canon:
                    fr = full & ~used[p]
                    nw = c & fr
                    if nw:
                        below = ((<mask_t> 1 << highbit(nw)) << 1) - 1
                        if (fr & ~nw) & below:
                            continue
                nodes += 1
                if max_nodes and nodes > max_nodes:
                    status = 2
                    break
                if deadline and (nodes & 0xFFF) == 0 and time.monotonic() > deadline:
                    status = 2
                    break
                assign[p] = c
                top = base[p]
                ok = 1
                for e in range(a_start[p], a_start[p + 1]):
                    x = assign[a_tail[e]]
                    y = assign[a_head[e]]
                    for i in range(top):
                        if (x & sy[i]) and (y & sx[i]):
                            ok = 0
                            break
                    if not ok:
                        break
                    sx[top] = x
                    sy[top] = y
                    top += 1
                if not ok:
                    continue
                if p + 1 == n:
                    solutions.append([assign[i] for i in range(n)])
                    nsol += 1
                    if max_solutions and nsol >= max_solutions:
                        status = 1
                        break
                    continue
                base[p + 1] = top
                used[p + 1] = used[p] | c
                p += 1
                ci[p] = 0
                forbid[p] = 0
                for j in range(f_start[p], f_start[p + 1]):
                    forbid[p] |= assign[f_pos[j]]
                advanced = 1
                break
            if status:
                break
            if not advanced:
                p -= 1
    finally:
        free(cand); free(f_start); free(f_pos); free(a_start); free(a_tail); free(a_head)
        free(assign); free(used); free(forbid); free(ci); free(base); free(sx); free(sy)
    return status, solutions, nodes
