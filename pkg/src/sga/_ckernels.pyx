# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels mirroring ``sga._pykernels``."""
from libc.stdlib cimport malloc, free
from libc.string cimport memset
from libc.stdint cimport uint64_t, int64_t


cdef long long _rec(int i, int n, int k, int *colors, int *pos_start, int *pos_idx,
                    int *neg_start, int *neg_idx, int *loops, char *mark) nogil:
    cdef int size = 2 * k + 1
    cdef int c, j, p, nbad
    cdef long long total = 0
    # mark[c + k] flags a forbidden colour; reset before returning
    nbad = 0
    for p in range(pos_start[i], pos_start[i + 1]):
        c = colors[pos_idx[p]] + k
        if not mark[c]:
            mark[c] = 1
            nbad += 1
    for p in range(neg_start[i], neg_start[i + 1]):
        c = k - colors[neg_idx[p]]
        if not mark[c]:
            mark[c] = 1
            nbad += 1
    if loops[i] and not mark[k]:
        mark[k] = 1
        nbad += 1
    if i == n - 1:
        total = size - nbad
        memset(mark, 0, size)
        return total
    cdef char *local = mark + size
    for c in range(size):
        local[c] = mark[c]
    memset(mark, 0, size)
    for c in range(size):
        if not local[c]:
            colors[i] = c - k
            total += _rec(i + 1, n, k, colors, pos_start, pos_idx, neg_start, neg_idx,
                          loops, local + size)
    return total


def count_colorings(int n, pos_nbrs, neg_nbrs, loops, int k):
    if n == 0:
        return 1
    cdef int size = 2 * k + 1
    cdef int npos = sum(len(x) for x in pos_nbrs)
    cdef int nneg = sum(len(x) for x in neg_nbrs)
    cdef int *colors = <int *> malloc(n * sizeof(int))
    cdef int *pos_start = <int *> malloc((n + 1) * sizeof(int))
    cdef int *neg_start = <int *> malloc((n + 1) * sizeof(int))
    cdef int *pos_idx = <int *> malloc((npos + 1) * sizeof(int))
    cdef int *neg_idx = <int *> malloc((nneg + 1) * sizeof(int))
    cdef int *lp = <int *> malloc(n * sizeof(int))
    # two scratch rows per recursion level
    cdef char *mark = <char *> malloc(2 * (n + 1) * size)
    cdef int i, a = 0, b = 0
    cdef long long result
    try:
        for i in range(n):
            pos_start[i] = a
            for j in pos_nbrs[i]:
                pos_idx[a] = j
                a += 1
            neg_start[i] = b
            for j in neg_nbrs[i]:
                neg_idx[b] = j
                b += 1
            lp[i] = 1 if loops[i] else 0
            colors[i] = 0
        pos_start[n] = a
        neg_start[n] = b
        memset(mark, 0, 2 * (n + 1) * size)
        with nogil:
            result = _rec(0, n, k, colors, pos_start, pos_idx, neg_start, neg_idx, lp, mark)
        return result
    finally:
        free(colors); free(pos_start); free(neg_start)
        free(pos_idx); free(neg_idx); free(lp); free(mark)


def mobius(masks, ranks):
    cdef Py_ssize_t m = len(masks)
    mu = [0] * m
    if m == 0:
        return mu
    cdef uint64_t *ms = <uint64_t *> malloc(m * sizeof(uint64_t))
    cdef int *rs = <int *> malloc(m * sizeof(int))
    cdef int64_t *mv = <int64_t *> malloc(m * sizeof(int64_t))
    cdef Py_ssize_t x, y
    cdef uint64_t mx
    cdef int rx
    cdef int64_t s
    try:
        for x in range(m):
            ms[x] = masks[x]
            rs[x] = ranks[x]
        with nogil:
            mv[0] = 1
            for x in range(1, m):
                mx = ms[x]
                rx = rs[x]
                s = 0
                for y in range(x):
                    if rs[y] < rx and (ms[y] & mx) == ms[y]:
                        s += mv[y]
                mv[x] = -s
        for x in range(m):
            mu[x] = mv[x]
        return mu
    finally:
        free(ms); free(rs); free(mv)
