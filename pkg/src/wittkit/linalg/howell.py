"""Howell normal form and linear algebra over Z/m.

The Howell form is the canonical echelon form for row spans over Z/m; unlike
a naive echelon form it is closed under the "annihilator rows" needed to make
membership testing and span comparison decidable in the presence of zero
divisors.
"""

from __future__ import annotations

from math import gcd


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def howell_form(rows: list[list[int]], m: int) -> list[list[int]]:
    """Canonical basis of the row span of `rows` over Z/m."""
    if m <= 0:
        raise ValueError("modulus must be positive")
    work = [[x % m for x in row] for row in rows]
    work = [r for r in work if any(r)]
    if not work:
        return []
    ncols = len(work[0])
    result: list[list[int]] = []
    for c in range(ncols):
        piv = None
        rest = []
        for row in work:
            if row[c] % m:
                if piv is None:
                    piv = row
                else:
                    a, b = piv[c], row[c]
                    g, s, t = _xgcd(a, b)
                    u, v = -(b // g), a // g
                    new_p = [(s * piv[j] + t * row[j]) % m for j in range(ncols)]
                    new_r = [(u * piv[j] + v * row[j]) % m for j in range(ncols)]
                    piv = new_p
                    if any(new_r):
                        rest.append(new_r)
            else:
                if any(row):
                    rest.append(row)
        work = rest
        if piv is None:
            continue
        # normalize the pivot entry to gcd(a, m) using the virtual row m*e_c,
        # keeping the complementary annihilator row (m/d)*piv in play
        a = piv[c]
        d, s, _ = _xgcd(a, m)
        ann = m // d
        new_piv = [(s * x) % m for x in piv]
        new_piv[c] = d  # s*a ≡ d (mod m)
        ann_row = [(ann * x) % m for x in piv]
        ann_row[c] = 0
        if any(ann_row):
            work.append(ann_row)
        result.append(new_piv)
    # reduce entries above each pivot modulo the pivot
    pivots = []
    for row in result:
        c = next(j for j, x in enumerate(row) if x)
        pivots.append(c)
    for i, row in enumerate(result):
        for k in range(i + 1, len(result)):
            c = pivots[k]
            d = result[k][c]
            q = row[c] // d
            if q:
                for j in range(ncols):
                    row[j] = (row[j] - q * result[k][j]) % m
    return result


def span_member(howell: list[list[int]], v: list[int], m: int):
    """Coefficients expressing v in the Howell basis, or None."""
    r = [x % m for x in v]
    coeffs = [0] * len(howell)
    pivots = [next(j for j, x in enumerate(row) if x) for row in howell]
    for i, row in enumerate(howell):
        c = pivots[i]
        for j in range(c):
            if r[j] % m:
                return None
        if r[c] % m:
            d = row[c]
            if r[c] % d:
                return None
            q = r[c] // d
            coeffs[i] = q
            for j in range(len(r)):
                r[j] = (r[j] - q * row[j]) % m
    if any(x % m for x in r):
        return None
    return coeffs


def spans_equal(rows_a: list[list[int]], rows_b: list[list[int]], m: int) -> bool:
    return howell_form(rows_a, m) == howell_form(rows_b, m)


def kernel_mod(a: list[list[int]], m: int) -> list[list[int]]:
    """Generators (as rows) of {x : x*a ≡ 0 mod m}... for column action use transpose.

    Here `a` acts on column vectors: returns generators of {x : a @ x ≡ 0 (mod m)},
    each generator a vector of length ncols(a).
    """
    n = len(a)
    ncols = len(a[0]) if n else 0
    from .integer_lattice import kernel_basis

    aug = [[a[i][j] for j in range(ncols)] + [m if k == i else 0 for k in range(n)]
           for i in range(n)]
    basis = kernel_basis(aug)  # columns of length ncols + n
    gens = []
    width = len(basis[0]) if basis and basis[0] else 0
    for j in range(width):
        g = [basis[i][j] % m for i in range(ncols)]
        if any(g):
            gens.append(g)
    return howell_form(gens, m)
