# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels mirroring ``_pykernels`` signature for signature."""

from array import array
from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, calloc, free

cdef enum:
    PROPER = 0
    STRONG = 1
    CONFLICT_FREE = 2


cdef inline bint _ok(int* colors, int[::1] verts, int lo, int hi, int mode, int* counts) nogil:
    cdef int i, first, col
    cdef bint ok
    if mode == PROPER:
        if hi - lo <= 1:
            return True
        first = colors[verts[lo]]
        for i in range(lo + 1, hi):
            if colors[verts[i]] != first:
                return True
        return False
    for i in range(lo, hi):
        counts[colors[verts[i]]] += 1
    if mode == STRONG:
        ok = True
        for i in range(lo, hi):
            if counts[colors[verts[i]]] != 1:
                ok = False
                break
    else:
        ok = False
        for i in range(lo, hi):
            if counts[colors[verts[i]]] == 1:
                ok = True
                break
    for i in range(lo, hi):
        counts[colors[verts[i]]] = 0
    return ok


def search(int npos, int k, int mode, pos_ptr, chk_ptr, verts, long limit, ncol=None):
    if npos == 0:
        return [()], -1
    if k <= 0:
        return [], -1
    cdef int[::1] pp = array("i", pos_ptr)
    cdef int[::1] cp = array("i", chk_ptr)
    cdef int[::1] vv = array("i", list(verts) or [0])
    cdef int[::1] nc = array("i", [k] * npos if ncol is None else ncol)
    cdef int* colors = <int*> malloc(npos * sizeof(int))
    cdef int* counts = <int*> calloc(k, sizeof(int))
    if colors == NULL or counts == NULL:
        free(colors)
        free(counts)
        raise MemoryError()
    cdef int p = 0, c, i, max_pass = -1
    cdef bint good
    cdef list sols = []
    try:
        for i in range(npos):
            colors[i] = -1
        while p >= 0:
            colors[p] += 1
            if colors[p] >= nc[p]:
                colors[p] = -1
                p -= 1
                continue
            good = True
            for c in range(pp[p], pp[p + 1]):
                if not _ok(colors, vv, cp[c], cp[c + 1], mode, counts):
                    good = False
                    break
            if not good:
                continue
            if p > max_pass:
                max_pass = p
            if p == npos - 1:
                sols.append(tuple([colors[i] for i in range(npos)]))
                if 0 < limit <= len(sols):
                    break
            else:
                p += 1
    finally:
        free(colors)
        free(counts)
    return sols, max_pass


cdef inline int _popcount(uint64_t x) nogil:
    cdef int n = 0
    while x:
        x &= x - 1
        n += 1
    return n


cdef inline int _lowbit(uint64_t x) nogil:
    cdef int i = 0
    while not (x & 1):
        x >>= 1
        i += 1
    return i


cdef bint _rec(uint64_t cands, int need, uint64_t* nbr, int min_last, int* chosen, int depth) nogil:
    cdef int v
    if _popcount(cands) < need:
        return False
    while cands:
        v = _lowbit(cands)
        cands &= cands - 1
        if need == 1:
            if v >= min_last:
                chosen[depth] = v
                return True
            continue
        if _popcount(cands) < need - 1:
            return False
        chosen[depth] = v
        if _rec(cands & nbr[v], need - 1, nbr, min_last, chosen, depth + 1):
            return True
    return False


def first_clique(nbr, int n, int size, int min_last):
    if size <= 0:
        return []
    if n > 64:
        raise ValueError("compiled clique kernel handles at most 64 vertices")
    cdef uint64_t* masks = <uint64_t*> malloc((n + 1) * sizeof(uint64_t))
    cdef int* chosen = <int*> malloc((size + 1) * sizeof(int))
    cdef int i
    cdef uint64_t full = (<uint64_t> 0xFFFFFFFFFFFFFFFF) if n == 64 else ((<uint64_t> 1 << n) - 1)
    cdef bint found
    try:
        for i in range(n):
            masks[i] = <uint64_t> nbr[i]
        found = _rec(full, size, masks, min_last, chosen, 0)
        if not found:
            return None
        return [chosen[i] for i in range(size)]
    finally:
        free(masks)
        free(chosen)


def g_table(values, int k):
    cdef int n = len(values)
    cdef int[::1] f = array("i", list(values) or [0])
    cdef int* counts = <int*> calloc(k if k > 0 else 1, sizeof(int))
    cdef int a, b, col, ones
    cdef list g = []
    cdef list row
    try:
        for a in range(n + 1):
            row = [0] * (n + 1)
            if a < n:
                for col in range(k):
                    counts[col] = 0
                ones = 0
                for b in range(a, n):
                    col = f[b]
                    counts[col] += 1
                    if counts[col] == 1:
                        ones += 1
                    elif counts[col] == 2:
                        ones -= 1
                    row[b + 1] = 1 if ones > 0 else 0
            g.append(row)
    finally:
        free(counts)
    return g
