"""Generic column-echelon / Smith machinery over a Euclidean domain.

The ring is passed as an object exposing payload-level operations:

    zero, one, add, sub, mul, neg, is_zero,
    euclid_divmod(a, b) -> (q, r) with norm(r) < norm(b),
    euclid_norm(a) -> int (only compared, never interpreted),
    canonical_unit(a) -> unit u with a = u * canonical_associate(a),
    inv_unit(u), exact_div(a, b).

Integers, F_p[x]-style polynomial domains and discrete valuation rings all
fit this protocol, which is exactly the set of coefficient rings the free
complex cohomology supports through invariant factors.
"""

from __future__ import annotations


def hnf_columns_ring(a, ring):
    """Column echelon form over the Euclidean domain: returns (h, u), h = a*u."""
    n = len(a)
    m = len(a[0]) if n else 0
    h = [row[:] for row in a]
    u = [[ring.one if i == j else ring.zero for j in range(m)] for i in range(m)]

    def col_op(j, k, x):
        for i in range(n):
            h[i][j] = ring.add(h[i][j], ring.mul(x, h[i][k]))
        for i in range(m):
            u[i][j] = ring.add(u[i][j], ring.mul(x, u[i][k]))

    def col_swap(j, k):
        for i in range(n):
            h[i][j], h[i][k] = h[i][k], h[i][j]
        for i in range(m):
            u[i][j], u[i][k] = u[i][k], u[i][j]

    def col_scale(j, x):
        for i in range(n):
            h[i][j] = ring.mul(x, h[i][j])
        for i in range(m):
            u[i][j] = ring.mul(x, u[i][j])

    pivot_col = 0
    for row in range(n):
        if pivot_col >= m:
            break
        while True:
            nz = [k for k in range(pivot_col, m) if not ring.is_zero(h[row][k])]
            if not nz:
                break
            k_min = min(nz, key=lambda k: ring.euclid_norm(h[row][k]))
            if k_min != pivot_col:
                col_swap(pivot_col, k_min)
            piv = h[row][pivot_col]
            done = True
            for k in range(pivot_col + 1, m):
                if not ring.is_zero(h[row][k]):
                    q, r = ring.euclid_divmod(h[row][k], piv)
                    col_op(k, pivot_col, ring.neg(q))
                    if not ring.is_zero(h[row][k]):
                        done = False
            if done:
                break
        if not ring.is_zero(h[row][pivot_col]):
            unit = ring.canonical_unit(h[row][pivot_col])
            col_scale(pivot_col, ring.inv_unit(unit))
            piv = h[row][pivot_col]
            for k in range(pivot_col):
                q, _ = ring.euclid_divmod(h[row][k], piv)
                if not ring.is_zero(q):
                    col_op(k, pivot_col, ring.neg(q))
            pivot_col += 1
    return h, u


def solve_columns_ring(a, v, ring):
    """Solve a*x = v over the domain; returns x or None."""
    n = len(a)
    m = len(a[0]) if n else 0
    if m == 0:
        return [] if all(ring.is_zero(c) for c in v) else None
    h, u = hnf_columns_ring(a, ring)
    y = [ring.zero] * m
    r = list(v)
    col = 0
    for row in range(n):
        if col < m and not ring.is_zero(h[row][col]):
            piv = h[row][col]
            q, rem = ring.euclid_divmod(r[row], piv)
            if not ring.is_zero(rem):
                return None
            y[col] = q
            if not ring.is_zero(q):
                for i in range(n):
                    r[i] = ring.sub(r[i], ring.mul(q, h[i][col]))
            col += 1
        else:
            if not ring.is_zero(r[row]):
                return None
    if any(not ring.is_zero(c) for c in r):
        return None
    return [
        _dot(ring, [u[i][k] for k in range(m)], y)
        for i in range(m)
    ]


def _dot(ring, row, vec):
    acc = ring.zero
    for x, yv in zip(row, vec):
        acc = ring.add(acc, ring.mul(x, yv))
    return acc


def kernel_basis_ring(a, ring):
    """Columns spanning {x : a*x = 0} over the domain."""
    n = len(a)
    m = len(a[0]) if n else 0
    h, u = hnf_columns_ring(a, ring)
    col = 0
    for row in range(n):
        if col < m and not ring.is_zero(h[row][col]):
            col += 1
    return [[u[i][j] for j in range(col, m)] for i in range(m)]


def smith_ring(a, ring):
    """Canonical invariant factors d_1 | d_2 | ... over the Euclidean domain."""
    n = len(a)
    m = len(a[0]) if n else 0
    w = [row[:] for row in a]
    factors = []
    top = 0
    left = 0
    while top < n and left < m:
        best = None
        for i in range(top, n):
            for j in range(left, m):
                x = w[i][j]
                if not ring.is_zero(x):
                    if best is None or ring.euclid_norm(x) < ring.euclid_norm(best[2]):
                        best = (i, j, x)
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
                if not ring.is_zero(w[i][left]):
                    q, _ = ring.euclid_divmod(w[i][left], piv)
                    if not ring.is_zero(q):
                        for j in range(left, m):
                            w[i][j] = ring.sub(w[i][j], ring.mul(q, w[top][j]))
                    if not ring.is_zero(w[i][left]):
                        dirty = True
            for j in range(left + 1, m):
                if not ring.is_zero(w[top][j]):
                    q, _ = ring.euclid_divmod(w[top][j], piv)
                    if not ring.is_zero(q):
                        for i in range(top, n):
                            w[i][j] = ring.sub(w[i][j], ring.mul(q, w[i][left]))
                    if not ring.is_zero(w[top][j]):
                        dirty = True
            if not dirty:
                break
            best = None
            for i in range(top, n):
                for j in range(left, m):
                    x = w[i][j]
                    if not ring.is_zero(x) and (
                        best is None or ring.euclid_norm(x) < ring.euclid_norm(best[2])
                    ):
                        best = (i, j, x)
            bi, bj, _ = best
            if bi != top:
                w[top], w[bi] = w[bi], w[top]
            if bj != left:
                for row in w:
                    row[left], row[bj] = row[bj], row[left]
        piv = w[top][left]
        bad = None
        for i in range(top + 1, n):
            for j in range(left + 1, m):
                _, rem = ring.euclid_divmod(w[i][j], piv)
                if not ring.is_zero(rem):
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            for j in range(left, m):
                w[top][j] = ring.add(w[top][j], w[bad][j])
            continue
        unit = ring.canonical_unit(piv)
        factors.append(ring.mul(ring.inv_unit(unit), piv))
        top += 1
        left += 1
    return factors
