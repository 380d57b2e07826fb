"""Universal Witt structure polynomials, computed once per (p, s).

The ghost triangularity over Z[X_0.., Y_0..] determines the sum, product
and negation component polynomials by exact integer recursion:

    S_n = (gh_n(X) + gh_n(Y) - sum_{i<n} p^i S_i^(p^(n-i))) / p^n

and likewise for products and negation.  Every division is exact; a
non-exact division would mean the recursion itself is wrong, so it raises.

These polynomials grow quickly with p and s; the cache only materializes
them inside a feasibility envelope (p^s <= 32) and the Witt ring falls back
to ghost solving over a torsion-free cover beyond it.  The substitution
identity gh_n(S_0.., S_0..) = gh_n(X) + gh_n(Y) is retested on cache build.
"""

from __future__ import annotations

import threading

from . import upoly as up

CACHE_LIMIT = 32  # generate universal polynomials only when p**s <= this

_lock = threading.Lock()
_cache: dict[tuple[int, int], "WittPolynomialCache"] = {}


class WittPolynomialCache:
    def __init__(self, p: int, s: int):
        self.p = p
        self.s = s
        nv = 2 * s
        xs = [up.uvar(nv, i) for i in range(s)]
        ys = [up.uvar(nv, s + i) for i in range(s)]
        self.sum_polys = self._solve(xs, ys, lambda gx, gy: up.uadd(gx, gy))
        self.prod_polys = self._solve(xs, ys, lambda gx, gy: up.umul(gx, gy))
        self.neg_polys = self._solve(xs, ys, lambda gx, gy: up.uneg(gx))
        self._selfcheck(xs, ys)

    def _ghost(self, comps: list[dict], n: int) -> dict:
        acc: dict = {}
        for i in range(n + 1):
            acc = up.uadd(acc, up.uscale(up.upow(comps[i], self.p ** (n - i)), self.p ** i))
        return acc

    def _solve(self, xs, ys, combine):
        p = self.p
        out: list[dict] = []
        for n in range(self.s):
            target = combine(self._ghost(xs, n), self._ghost(ys, n))
            for i in range(n):
                target = up.uadd(
                    target, up.uneg(up.uscale(up.upow(out[i], p ** (n - i)), p ** i))
                )
            out.append(up.udiv_int(target, p ** n))
        return out

    def _selfcheck(self, xs, ys):
        # substituting the sum polynomials into the ghost polynomials must
        # reproduce gh(X) + gh(Y) identically over the integers
        for n in range(min(self.s, 3)):
            lhs = self._ghost(self.sum_polys, n)
            rhs = up.uadd(self._ghost(xs, n), self._ghost(ys, n))
            if lhs != rhs:
                raise AssertionError("Witt polynomial cache failed its ghost identity")


def get_cache(p: int, s: int) -> WittPolynomialCache | None:
    """The cache for (p, s), or None outside the feasibility envelope."""
    if p ** s > CACHE_LIMIT:
        return None
    key = (p, s)
    got = _cache.get(key)
    if got is None:
        with _lock:
            got = _cache.get(key)
            if got is None:
                got = WittPolynomialCache(p, s)
                _cache[key] = got
    return got
