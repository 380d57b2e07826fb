"""Exact division of Witt vectors.

Triangular recursion: solve the leading component in the base, subtract
b * [c_0], peel one Verschiebung, divide the tail by F(b).  Well-posed
whenever the divisor's leading component makes each base equation uniquely
solvable (domains, localized domains); for finite bases the lattice solver
in wittkit.witt.digits takes over.
"""

from __future__ import annotations

from ..errors import NonUniqueQuotient, NotDivisible
from ..rings.cyclotomic import CyclotomicQuotient
from ..rings.modular import ModularIntegers, PrimeField


def witt_divide_exact_payload(wring, a, b):
    base = wring.base
    if isinstance(base, CyclotomicQuotient) and base.precision is not None or (
        isinstance(base, ModularIntegers) and not isinstance(base, PrimeField)
    ):
        from .digits import witt_divide_finite

        return witt_divide_finite(wring, a, b)
    return _triangular(wring, a, b)


def _triangular(wring, a, b):
    base = wring.base
    s = wring.s
    if base.is_zero(b[0]):
        if all(base.is_zero(c) for c in b):
            raise NotDivisible("division by zero")
        raise NonUniqueQuotient(
            "leading component of the divisor vanishes; recursion is not well-posed"
        )
    comps = []
    cur_a = a
    cur_b = b
    cur_ring = wring
    for level in range(s):
        c0 = base.divide_exact(cur_a[0], cur_b[0])
        comps.append(c0)
        if level == s - 1:
            break
        rem = cur_ring.sub(cur_a, cur_ring.mul(cur_b, cur_ring.teichmuller(c0)))
        if not base.is_zero(rem[0]):
            raise NotDivisible("triangular recursion produced a non-divisible remainder")
        nxt = _shrink(wring, cur_ring.s - 1)
        cur_a = rem[1:]
        cur_b = cur_ring.frobenius_op(cur_b)
        cur_ring = nxt
    return tuple(comps)


def _shrink(wring, s):
    from .vectors import WittRing

    return WittRing(wring.base, s, wring.p)
