"""Dense payload matrices over a Ring."""

from __future__ import annotations

from ..rings.base import Ring


def zero_matrix(ring: Ring, n: int, m: int):
    return [[ring.zero] * m for _ in range(n)]


def identity_matrix(ring: Ring, n: int):
    out = zero_matrix(ring, n, n)
    for i in range(n):
        out[i][i] = ring.one
    return out


def mat_mul(ring: Ring, a, b):
    n = len(a)
    k = len(b)
    m = len(b[0]) if k else 0
    out = zero_matrix(ring, n, m)
    for i in range(n):
        for t in range(k):
            x = a[i][t]
            if ring.is_zero(x):
                continue
            for j in range(m):
                if not ring.is_zero(b[t][j]):
                    out[i][j] = ring.add(out[i][j], ring.mul(x, b[t][j]))
    return out


def mat_vec(ring: Ring, a, v):
    out = []
    for row in a:
        acc = ring.zero
        for x, y in zip(row, v):
            if not (ring.is_zero(x) or ring.is_zero(y)):
                acc = ring.add(acc, ring.mul(x, y))
        out.append(acc)
    return out


def mat_add(ring: Ring, a, b):
    return [[ring.add(x, y) for x, y in zip(r1, r2)] for r1, r2 in zip(a, b)]


def mat_neg(ring: Ring, a):
    return [[ring.neg(x) for x in row] for row in a]


def mat_scale(ring: Ring, c, a):
    return [[ring.mul(c, x) for x in row] for row in a]


def mat_map(fn, a):
    return [[fn(x) for x in row] for row in a]


def mat_eq(ring: Ring, a, b) -> bool:
    if len(a) != len(b):
        return False
    for r1, r2 in zip(a, b):
        if len(r1) != len(r2):
            return False
        for x, y in zip(r1, r2):
            if not ring.eq(x, y):
                return False
    return True


def is_zero_matrix(ring: Ring, a) -> bool:
    return all(ring.is_zero(x) for row in a for x in row)


def block_diag(ring: Ring, blocks):
    n = sum(len(b) for b in blocks)
    m = sum(len(b[0]) if b else 0 for b in blocks)
    out = zero_matrix(ring, n, m)
    ro = co = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[ro + i][co + j] = x
        ro += len(b)
        co += len(b[0]) if b else 0
    return out
