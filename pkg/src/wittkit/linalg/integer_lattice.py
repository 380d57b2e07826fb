"""Exact integer matrix algebra: Hermite and Smith normal forms, solving.

Matrices are lists of lists of Python ints, row-major.  Sizes stay small
(a few hundred rows at most), so the classic fraction-free algorithms with
pivot-size control are fast enough; no external dependency is used.
"""

from __future__ import annotations


def zeros(n: int, m: int) -> list[list[int]]:
    return [[0] * m for _ in range(n)]


def identity(n: int) -> list[list[int]]:
    ident = zeros(n, n)
    for i in range(n):
        ident[i][i] = 1
    return ident


def mat_mul(a, b):
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    out = zeros(n, m)
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            x = ai[t]
            if x:
                bt = b[t]
                for j in range(m):
                    oi[j] += x * bt[j]
    return out


def mat_vec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)] if a else []


def hnf_columns(a):
    """Column-style Hermite normal form.

    Returns (h, u) with h = a*u, u unimodular, h lower column echelon:
    pivot rows increase left to right, pivots positive, entries right of a
    pivot zero, entries left of a pivot reduced mod the pivot.
    Zero columns are moved to the right end.
    """
    n = len(a)
    m = len(a[0]) if n else 0
    h = [row[:] for row in a]
    u = identity(m)

    def col_op(j, k, x):
        # col_j += x * col_k
        for i in range(n):
            h[i][j] += x * h[i][k]
        for i in range(m):
            u[i][j] += x * u[i][k]

    def col_swap(j, k):
        for i in range(n):
            h[i][j], h[i][k] = h[i][k], h[i][j]
        for i in range(m):
            u[i][j], u[i][k] = u[i][k], u[i][j]

    def col_neg(j):
        for i in range(n):
            h[i][j] = -h[i][j]
        for i in range(m):
            u[i][j] = -u[i][j]

    pivot_col = 0
    for row in range(n):
        if pivot_col >= m:
            break
        # gcd out the row entries at columns >= pivot_col
        j = pivot_col
        while True:
            nz = [k for k in range(pivot_col, m) if h[row][k] != 0]
            if not nz:
                break
            # bring the absolutely smallest nonzero to pivot_col
            k_min = min(nz, key=lambda k: abs(h[row][k]))
            if k_min != pivot_col:
                col_swap(pivot_col, k_min)
            piv = h[row][pivot_col]
            done = True
            for k in range(pivot_col + 1, m):
                if h[row][k] != 0:
                    col_op(k, pivot_col, -(h[row][k] // piv))
                    if h[row][k] != 0:
                        done = False
            if done:
                break
        if h[row][pivot_col] != 0:
            if h[row][pivot_col] < 0:
                col_neg(pivot_col)
            piv = h[row][pivot_col]
            for k in range(pivot_col):
                q = h[row][k] // piv
                if q:
                    col_op(k, pivot_col, -q)
            pivot_col += 1
        j = j  # keep flake-style quiet
    return h, u


def column_lattice_solve(a, v):
    """Solve a*x = v over Z, x integral. Returns x or None."""
    n = len(a)
    m = len(a[0]) if n else 0
    if m == 0:
        return [] if all(c == 0 for c in v) else None
    h, u = hnf_columns(a)
    # back-substitute against the echelon columns
    y = [0] * m
    r = [int(c) for c in v]
    col = 0
    for row in range(n):
        if col < m and h[row][col] != 0:
            piv = h[row][col]
            if r[row] % piv != 0:
                return None
            q = r[row] // piv
            y[col] = q
            if q:
                for i in range(n):
                    r[i] -= q * h[i][col]
            col += 1
        else:
            if r[row] != 0:
                return None
    if any(c != 0 for c in r):
        return None
    return mat_vec(u, y)


def kernel_basis(a):
    """Basis (as columns) of {x : a*x = 0} over Z."""
    n = len(a)
    m = len(a[0]) if n else 0
    h, u = hnf_columns(a)
    rank = 0
    col = 0
    for row in range(n):
        if col < m and h[row][col] != 0:
            col += 1
    rank = col
    return [[u[i][j] for j in range(rank, m)] for i in range(m)]


def smith_normal_form(a):
    """Diagonal invariant factors d_1 | d_2 | ... of the integer matrix a.

    Only the nonzero invariant factors are returned (positive, in
    divisibility order).  Transform matrices are not tracked.
    """
    n = len(a)
    m = len(a[0]) if n else 0
    w = [row[:] for row in a]
    factors = []
    top = 0
    left = 0
    while top < n and left < m:
        # find smallest nonzero entry in the remaining block
        best = None
        for i in range(top, n):
            wi = w[i]
            for j in range(left, m):
                x = wi[j]
                if x:
                    if best is None or abs(x) < abs(best[2]):
                        best = (i, j, x)
                        if abs(x) == 1:
                            break
            if best is not None and abs(best[2]) == 1:
                break
        if best is None:
            break
        bi, bj, _ = best
        if bi != top:
            w[top], w[bi] = w[bi], w[top]
        if bj != left:
            for row in w:
                row[left], row[bj] = row[bj], row[left]
        while True:
            piv = w[top][left]
            dirty = False
            for i in range(top + 1, n):
                q = w[i][left] // piv
                if q:
                    wi, wt = w[i], w[top]
                    for j in range(left, m):
                        wi[j] -= q * wt[j]
                if w[i][left]:
                    dirty = True
            for j in range(left + 1, m):
                q = w[top][j] // piv
                if q:
                    for i in range(top, n):
                        w[i][j] -= q * w[i][left]
                if w[top][j]:
                    dirty = True
            if not dirty:
                break
            # re-pick the pivot: some entry may now be smaller
            best = None
            for i in range(top, n):
                wi = w[i]
                for j in range(left, m):
                    x = wi[j]
                    if x and (best is None or abs(x) < abs(best[2])):
                        best = (i, j, x)
            bi, bj, _ = best
            if bi != top:
                w[top], w[bi] = w[bi], w[top]
            if bj != left:
                for row in w:
                    row[left], row[bj] = row[bj], row[left]
        piv = abs(w[top][left])
        # enforce divisibility against the rest of the block
        bad = None
        for i in range(top + 1, n):
            wi = w[i]
            for j in range(left + 1, m):
                if wi[j] % piv != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            wt, wb = w[top], w[bad]
            for j in range(left, m):
                wt[j] += wb[j]
            continue
        factors.append(piv)
        top += 1
        left += 1
    return factors


def lattice_index_factors(gens, relations):
    """Invariant factors of Z^n / (lattice spanned by gens+relations columns).

    `gens` and `relations` are lists of column vectors of length n; the
    quotient's cyclic decomposition is returned as (free_rank, torsion)
    with torsion the invariant factors > 1 in divisibility order.
    """
    cols = gens + relations
    if not cols:
        n = 0
    else:
        n = len(cols[0])
    a = [[col[i] for col in cols] for i in range(n)]
    facs = smith_normal_form(a) if cols else []
    torsion = [d for d in facs if d > 1]
    free_rank = n - len(facs)
    return free_rank, torsion
