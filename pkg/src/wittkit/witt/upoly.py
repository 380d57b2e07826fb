"""Sparse multivariate integer polynomials for the universal Witt layer.

Payload: dict {exponent-tuple: nonzero int coeff}.  Only the handful of
operations the ghost recursions need.
"""

from __future__ import annotations


def upoly(nvars: int, const: int = 0) -> dict:
    if const:
        return {(0,) * nvars: const}
    return {}


def uvar(nvars: int, i: int) -> dict:
    e = [0] * nvars
    e[i] = 1
    return {tuple(e): 1}


def uadd(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def uneg(a: dict) -> dict:
    return {e: -c for e, c in a.items()}


def uscale(a: dict, k: int) -> dict:
    if k == 0:
        return {}
    return {e: c * k for e, c in a.items()}


def umul(a: dict, b: dict) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            v = out.get(e, 0) + c1 * c2
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def upow(a: dict, k: int) -> dict:
    nvars = len(next(iter(a))) if a else 0
    acc = upoly(nvars or 1, 1) if a else {}
    if not a:
        return {} if k else acc
    acc = {(0,) * nvars: 1}
    base = a
    while k:
        if k & 1:
            acc = umul(acc, base)
        base = umul(base, base)
        k >>= 1
    return acc


def udiv_int(a: dict, k: int) -> dict:
    out = {}
    for e, c in a.items():
        q, r = divmod(c, k)
        if r:
            raise ArithmeticError(f"inexact division of coefficient {c} by {k}")
        if q:
            out[e] = q
    return out


def ueval(a: dict, ring, values: list):
    """Evaluate in `ring` at payload values (one per variable)."""
    acc = ring.zero
    pow_cache: list[dict[int, object]] = [dict() for _ in values]

    def power(i: int, k: int):
        cache = pow_cache[i]
        got = cache.get(k)
        if got is not None:
            return got
        if k == 0:
            res = ring.one
        elif k % 2 == 0:
            half = power(i, k // 2)
            res = ring.mul(half, half)
        else:
            res = ring.mul(values[i], power(i, k - 1))
        cache[k] = res
        return res

    for e, c in a.items():
        term = ring.from_int(c)
        for i, k in enumerate(e):
            if k:
                term = ring.mul(term, power(i, k))
        acc = ring.add(acc, term)
    return acc
