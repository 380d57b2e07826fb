"""Characteristic-p Witt arithmetic through Teichmuller carry tables.

Over an F_p-algebra, (a_0, ..., a_{s-1}) = sum_i V^i([a_i]) exactly, products
of basic terms collapse to V^{i+j}([a_i^{p^j} b_j^{p^i}]), and addition only
needs the universal two-variable carry polynomials

    [X] + [Y] = sum_m V^m([C_m(X, Y)])      (C_m in F_p[X, Y])

which are the mod-p reductions of the universal sum components on
Teichmuller inputs.  They are homogeneous of degree p^m, so the tables stay
tiny for every (p, s) this library meets.
"""

from __future__ import annotations

import threading

from . import upoly as up

_lock = threading.Lock()
_tables: dict[tuple[int, int], list[dict]] = {}


def carry_table(p: int, s: int) -> list[dict]:
    """C_0..C_{s-1} as sparse {(i, j): coeff mod p} two-variable polynomials."""
    key = (p, s)
    got = _tables.get(key)
    if got is not None:
        return got
    with _lock:
        got = _tables.get(key)
        if got is not None:
            return got
        x = up.uvar(2, 0)
        y = up.uvar(2, 1)
        comps: list[dict] = []
        for n in range(s):
            target = up.uadd(up.upow(x, p ** n), up.upow(y, p ** n))
            for i in range(n):
                target = up.uadd(
                    target, up.uneg(up.uscale(up.upow(comps[i], p ** (n - i)), p ** i))
                )
            comps.append(up.udiv_int(target, p ** n))
        table = []
        for comp in comps:
            table.append({e: c % p for e, c in comp.items() if c % p})
        _tables[key] = table
        return table


def teich_add(base, p: int, levels: int, x, y) -> list:
    """Digits of [x] + [y] up to the given number of levels."""
    table = carry_table(p, levels)
    out = []
    xp: dict[int, object] = {}
    yp: dict[int, object] = {}

    def power(cache, val, k):
        got = cache.get(k)
        if got is not None:
            return got
        if k == 0:
            res = base.one
        elif k % 2 == 0:
            half = power(cache, val, k // 2)
            res = base.mul(half, half)
        else:
            res = base.mul(val, power(cache, val, k - 1))
        cache[k] = res
        return res

    for m in range(levels):
        acc = base.zero
        for (i, j), c in table[m].items():
            term = base.mul(power(xp, x, i), power(yp, y, j))
            if c != 1:
                term = base.mul(base.from_int(c), term)
            acc = base.add(acc, term)
        out.append(acc)
    return out


def charp_add(base, p: int, s: int, a: tuple, b: tuple) -> tuple:
    pending: list[list] = [[] for _ in range(s)]
    for i in range(s):
        if not base.is_zero(a[i]):
            pending[i].append(a[i])
        if not base.is_zero(b[i]):
            pending[i].append(b[i])
    out = []
    for i in range(s):
        terms = pending[i]
        while len(terms) > 1:
            x = terms.pop()
            y = terms.pop()
            digits = teich_add(base, p, s - i, x, y)
            if not base.is_zero(digits[0]):
                terms.append(digits[0])
            for m in range(1, s - i):
                if not base.is_zero(digits[m]):
                    pending[i + m].append(digits[m])
        out.append(terms[0] if terms else base.zero)
    return tuple(out)


def charp_mul(base, p: int, s: int, a: tuple, b: tuple) -> tuple:
    # V^i[x] * V^j[y] = V^(i+j)([x^(p^j) * y^(p^i)])
    pending: list[list] = [[] for _ in range(s)]
    frob_a: dict[tuple[int, int], object] = {}
    frob_b: dict[tuple[int, int], object] = {}

    def frob(cache, comps, i, times):
        key = (i, times)
        got = cache.get(key)
        if got is not None:
            return got
        val = comps[i]
        for _ in range(times):
            val = base.frobenius(val)
        cache[key] = val
        return val

    for i in range(s):
        if base.is_zero(a[i]):
            continue
        for j in range(s - i):
            if base.is_zero(b[j]):
                continue
            term = base.mul(frob(frob_a, a, i, j), frob(frob_b, b, j, i))
            if not base.is_zero(term):
                pending[i + j].append(term)
    out = []
    for i in range(s):
        terms = pending[i]
        while len(terms) > 1:
            x = terms.pop()
            y = terms.pop()
            digits = teich_add(base, p, s - i, x, y)
            if not base.is_zero(digits[0]):
                terms.append(digits[0])
            for m in range(1, s - i):
                if not base.is_zero(digits[m]):
                    pending[i + m].append(digits[m])
        out.append(terms[0] if terms else base.zero)
    return tuple(out)
