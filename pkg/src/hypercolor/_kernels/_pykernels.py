"""Pure-Python kernels; same signatures as the compiled ``_ckernels``.

Constraint layout for :func:`search` (CSR style): the constraints checked
when position ``p`` is assigned are ``pos_ptr[p] .. pos_ptr[p+1]-1``;
constraint ``c`` covers vertices ``verts[chk_ptr[c] : chk_ptr[c+1]]``.
Mode codes: 0 proper, 1 strong, 2 conflict-free.
"""

PROPER, STRONG, CONFLICT_FREE = 0, 1, 2


def _ok(colors, verts, lo, hi, mode, counts):
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
        ok = all(counts[colors[verts[i]]] == 1 for i in range(lo, hi))
    else:
        ok = any(counts[colors[verts[i]]] == 1 for i in range(lo, hi))
    for i in range(lo, hi):
        counts[colors[verts[i]]] = 0
    return ok


def search(npos, k, mode, pos_ptr, chk_ptr, verts, limit, ncol=None):
    """Smallest-color-first backtracking over positions ``0..npos-1``.

    ``ncol[p]`` (default ``k``) caps the colors tried at position ``p``.

    Returns ``(solutions, max_pass)``: up to ``limit`` full assignments
    (``limit <= 0`` means all) in lexicographic order, and the largest
    position at which some partial assignment passed every check so far
    (``-1`` if none).
    """
    if npos == 0:
        return [()], -1
    if k <= 0:
        return [], -1
    if ncol is None:
        ncol = [k] * npos
    colors = [-1] * npos
    counts = [0] * k
    sols = []
    max_pass = -1
    p = 0
    while p >= 0:
        colors[p] += 1
        if colors[p] >= ncol[p]:
            colors[p] = -1
            p -= 1
            continue
        good = True
        for c in range(pos_ptr[p], pos_ptr[p + 1]):
            if not _ok(colors, verts, chk_ptr[c], chk_ptr[c + 1], mode, counts):
                good = False
                break
        if not good:
            continue
        if p > max_pass:
            max_pass = p
        if p == npos - 1:
            sols.append(tuple(colors))
            if 0 < limit <= len(sols):
                break
        else:
            p += 1
    return sols, max_pass


def first_clique(nbr, n, size, min_last):
    """Lexicographically first increasing ``size``-clique, last element ``>= min_last``.

    ``nbr[v]`` is an int bitmask of the neighbours of ``v`` in ``0..n-1``.
    """
    if size <= 0:
        return []
    full = (1 << n) - 1
    chosen = []

    def rec(cands, need):
        if cands.bit_count() < need:
            return False
        while cands:
            v = (cands & -cands).bit_length() - 1
            cands &= cands - 1
            if need == 1:
                if v >= min_last:
                    chosen.append(v)
                    return True
                continue
            if cands.bit_count() < need - 1:
                return False
            chosen.append(v)
            if rec(cands & nbr[v], need - 1):
                return True
            chosen.pop()
        return False

    return list(chosen) if rec(full, size) else None


def g_table(values, k):
    """``g[a][b]`` for ``0 <= a < b <= n``: 1 iff some color occurs exactly once in ``values[a:b]``."""
    n = len(values)
    g = [[0] * (n + 1) for _ in range(n + 1)]
    for a in range(n):
        counts = [0] * k
        ones = 0
        row = g[a]
        for b in range(a, n):
            col = values[b]
            counts[col] += 1
            if counts[col] == 1:
                ones += 1
            elif counts[col] == 2:
                ones -= 1
            row[b + 1] = 1 if ones > 0 else 0
    return g
