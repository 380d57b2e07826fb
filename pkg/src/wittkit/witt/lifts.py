"""Torsion-free covers used for ghost-solving Witt arithmetic.

On a base where p is a zero divisor, Witt operations are defined by lifting
components to a cover where the ghost map is injective and divisions by
powers of p are exact, computing there, and reducing back.  A cover is a
ring plus (lift, reduce) payload maps.
"""

from __future__ import annotations

from ..errors import NotDivisible, UnsupportedBase
from ..rings.base import Ring
from ..rings.cyclotomic import CyclotomicQuotient
from ..rings.fracpoly import FracPolyDomain
from ..rings.integers import IntegerRing, LocalizedIntegers
from ..rings.laurent import LaurentExtension
from ..rings.modular import ModularIntegers, PrimeField


class IntFracPoly(Ring):
    """Z[t^(1/p^N)]: the integral cover of FracPolyDomain."""

    kind = "IntFracPoly"
    zero = ()
    one = ((0, 1),)

    def __init__(self, p: int, depth: int):
        self.p = p
        self.depth = depth

    def descriptor(self):
        return ("IntFracPoly", self.p, self.depth)

    def from_int(self, n):
        n = int(n)
        return ((0, n),) if n else ()

    def _norm(self, terms):
        acc: dict[int, int] = {}
        for k, c in terms:
            if c:
                acc[k] = acc.get(k, 0) + c
        return tuple(sorted((k, c) for k, c in acc.items() if c))

    def add(self, a, b):
        return self._norm(list(a) + list(b))

    def neg(self, a):
        return tuple((k, -c) for k, c in a)

    def mul(self, a, b):
        acc: dict[int, int] = {}
        for k1, c1 in a:
            for k2, c2 in b:
                k = k1 + k2
                acc[k] = acc.get(k, 0) + c1 * c2
        return tuple(sorted((k, c) for k, c in acc.items() if c))

    def div_int(self, a, k):
        out = []
        for e, c in a:
            q, r = divmod(c, k)
            if r:
                raise NotDivisible(f"{k} does not divide {c}")
            out.append((e, q))
        return tuple(out)


def witt_cover(base: Ring):
    """(cover, lift, reduce) for the base, or None when no cover is usable.

    The localized fractional domain has no workable cover (its denominators
    would need p-adic reduction); its Witt arithmetic goes through the
    characteristic-p carry tables instead.
    """
    identity = lambda a: a  # noqa: E731
    if isinstance(base, (IntegerRing, LocalizedIntegers)):
        return base, identity, identity
    if isinstance(base, (PrimeField, ModularIntegers)):
        return IntegerRing(), (lambda a: int(a)), (lambda a: base.from_int(a))
    if isinstance(base, CyclotomicQuotient):
        if base.precision is None:
            return base, identity, identity
        cover = CyclotomicQuotient(base.p, base.level, None)
        return (
            cover,
            (lambda a: base.balanced_lift(a)),
            (lambda a: tuple(base._red(c) for c in a)),
        )
    if isinstance(base, FracPolyDomain):
        cover = IntFracPoly(base.p, base.depth)
        return cover, (lambda a: tuple(a)), (
            lambda a: tuple(sorted((k, c % base.p) for k, c in a if c % base.p))
        )
    if isinstance(base, LaurentExtension):
        inner = witt_cover(base.base)
        if inner is None:
            return None
        cov_b, lift_b, red_b = inner
        cover = LaurentExtension(cov_b, base.nvars, base.depth, base.p)
        lift = lambda a: tuple((e, lift_b(c)) for e, c in a)  # noqa: E731
        red = lambda a: base._norm([(e, red_b(c)) for e, c in a])  # noqa: E731
        return cover, lift, red
    return None
