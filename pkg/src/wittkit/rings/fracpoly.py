"""Fractional-exponent polynomial domains over F_p.

FracPolyDomain(p, N) is F_p[t^(1/p^N)]: internally a plain polynomial ring
in u := t^(1/p^N), exponents stored as the integers k meaning t^(k/p^N).
Arithmetic never rounds exponents; a Frobenius inverse that would need a
denominator beyond p^N raises DepthExhausted instead.

LocalizedFracPoly(p, N) is the localization at the ideal (u): fractions
num/den with den(0) != 0, normalized so gcd(num, den) = 1 and den(0) = 1.
It is a discrete valuation ring; the valuation of x is the least exponent
of its numerator.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import DepthExhausted, NotDivisible
from .base import Ring

Poly = tuple  # tuple[(exp:int, coeff:int), ...] sorted by exp, coeff in [1, p)


def _pnorm(p: int, terms) -> Poly:
    acc: dict[int, int] = {}
    for k, c in terms:
        c %= p
        if c:
            acc[k] = (acc.get(k, 0) + c) % p
    return tuple(sorted((k, c) for k, c in acc.items() if c))


def _padd(p: int, a: Poly, b: Poly) -> Poly:
    return _pnorm(p, list(a) + list(b))


def _pneg(p: int, a: Poly) -> Poly:
    return tuple((k, (-c) % p) for k, c in a)


def _pmul(p: int, a: Poly, b: Poly) -> Poly:
    acc: dict[int, int] = {}
    for k1, c1 in a:
        for k2, c2 in b:
            k = k1 + k2
            acc[k] = (acc.get(k, 0) + c1 * c2) % p
    return tuple(sorted((k, c) for k, c in acc.items() if c))


def _pdivmod(p: int, a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = {k: c for k, c in a}
    lead_k, lead_c = b[-1]
    lead_inv = pow(lead_c, -1, p)
    q: dict[int, int] = {}
    while rem:
        top = max(rem)
        if top < lead_k:
            break
        c = (rem[top] * lead_inv) % p
        shift = top - lead_k
        q[shift] = c
        for k2, c2 in b:
            kk = k2 + shift
            v = (rem.get(kk, 0) - c * c2) % p
            if v:
                rem[kk] = v
            else:
                rem.pop(kk, None)
    return (
        tuple(sorted((k, c) for k, c in q.items() if c)),
        tuple(sorted((k, c) for k, c in rem.items() if c)),
    )


def _pgcd(p: int, a: Poly, b: Poly) -> Poly:
    while b:
        _, r = _pdivmod(p, a, b)
        a, b = b, r
    if not a:
        return a
    # monic normalization
    lead_inv = pow(a[-1][1], -1, p)
    return tuple((k, (c * lead_inv) % p) for k, c in a)


class FracPolyDomain(Ring):
    kind = "FracPolyDomain"

    def __init__(self, p: int, depth: int):
        self.p = p
        self.depth = depth
        self.scale = p ** depth  # exponent k means t^(k/scale)
        self.zero = ()
        self.one = ((0, 1),)

    def descriptor(self):
        return ("FracPolyDomain", self.p, self.depth)

    def characteristic(self):
        return self.p

    def from_int(self, n):
        c = int(n) % self.p
        return ((0, c),) if c else ()

    def t_power(self, exponent: Fraction | int):
        """t^exponent as a payload; exponent must fit the depth budget."""
        e = Fraction(exponent)
        k = e * self.scale
        if k.denominator != 1 or k < 0:
            raise DepthExhausted(f"exponent {e} outside depth budget p^-{self.depth}")
        return ((int(k), 1),)

    def add(self, a, b):
        return _padd(self.p, a, b)

    def neg(self, a):
        return _pneg(self.p, a)

    def mul(self, a, b):
        return _pmul(self.p, a, b)

    def is_unit(self, a):
        return len(a) == 1 and a[0][0] == 0

    def inv(self, a):
        if not self.is_unit(a):
            raise NotDivisible("not a unit")
        return ((0, pow(a[0][1], -1, self.p)),)

    def divide_exact(self, a, b):
        if not b:
            raise NotDivisible("division by zero")
        q, r = _pdivmod(self.p, a, b)
        if r:
            raise NotDivisible("inexact polynomial division")
        return q

    def euclid_divmod(self, a, b):
        return _pdivmod(self.p, a, b)

    def euclid_norm(self, a):
        return a[-1][0] + 1 if a else 0

    def canonical_unit(self, a):
        return ((0, a[-1][1]),) if a else self.one

    def frobenius(self, a):
        return tuple((k * self.p, c) for k, c in a)

    def frobenius_inverse(self, a):
        if any(k % self.p for k, _ in a):
            raise DepthExhausted("p-th root needs exponents divisible by p")
        return tuple((k // self.p, c) for k, c in a)

    def valuation(self, a):
        """Least exponent (scaled by p^depth); None for zero."""
        return a[0][0] if a else None

    def handle_json(self):
        return {"kind": "FracPolyDomain", "p": self.p, "depth": self.depth}

    def element_terms(self, a):
        out = []
        for k, c in a:
            e = Fraction(k, self.scale)
            out.append({"exp": f"{e.numerator}/{e.denominator}", "coeff": str(c)})
        return out or [{"exp": "0/1", "coeff": "0"}]

    def element_from_terms(self, terms):
        acc: list[tuple[int, int]] = []
        for t in terms:
            num, _, den = t["exp"].partition("/")
            e = Fraction(int(num), int(den) if den else 1) * self.scale
            if e.denominator != 1:
                raise DepthExhausted(f"exponent {t['exp']} outside depth budget")
            acc.append((int(e), int(t["coeff"])))
        return _pnorm(self.p, acc)

    def random_element(self, rng, size: int = 4):
        nterms = rng.randint(0, 3)
        terms = [(rng.randint(0, size), rng.randrange(1, self.p)) for _ in range(nterms)]
        return _pnorm(self.p, terms)


class LocalizedFracPoly(Ring):
    kind = "LocalizedFracPoly"

    def __init__(self, p: int, depth: int):
        self.p = p
        self.depth = depth
        self.scale = p ** depth
        self.poly = FracPolyDomain(p, depth)
        self.zero = ((), ((0, 1),))
        self.one = (((0, 1),), ((0, 1),))

    def descriptor(self):
        return ("LocalizedFracPoly", self.p, self.depth)

    def characteristic(self):
        return self.p

    def _norm(self, num: Poly, den: Poly):
        if not den or den[0][0] != 0:
            raise NotDivisible("denominator must have nonzero constant term")
        if not num:
            return ((), ((0, 1),))
        g = _pgcd(self.p, num, den)
        if g != ((0, 1),):
            num = _pdivmod(self.p, num, g)[0]
            den = _pdivmod(self.p, den, g)[0]
        c0 = den[0][1] if den[0][0] == 0 else None
        if c0 is None:
            raise NotDivisible("denominator lost its constant term")
        inv = pow(c0, -1, self.p)
        num = tuple((k, (c * inv) % self.p) for k, c in num)
        den = tuple((k, (c * inv) % self.p) for k, c in den)
        return (num, den)

    def make(self, num: Poly, den: Poly = ((0, 1),)):
        return self._norm(num, den)

    def from_poly(self, a: Poly):
        return ((a, ((0, 1),)) if a else self.zero)

    def from_int(self, n):
        return self.from_poly(self.poly.from_int(n))

    def t_power(self, exponent):
        return self.from_poly(self.poly.t_power(exponent))

    def add(self, a, b):
        (n1, d1), (n2, d2) = a, b
        num = _padd(self.p, _pmul(self.p, n1, d2), _pmul(self.p, n2, d1))
        return self._norm(num, _pmul(self.p, d1, d2))

    def neg(self, a):
        return (_pneg(self.p, a[0]), a[1])

    def mul(self, a, b):
        return self._norm(_pmul(self.p, a[0], b[0]), _pmul(self.p, a[1], b[1]))

    def valuation(self, a):
        """u-adic valuation scaled by p^depth; None for zero."""
        return a[0][0][0] if a[0] else None

    def is_unit(self, a):
        return bool(a[0]) and a[0][0][0] == 0

    def inv(self, a):
        if not self.is_unit(a):
            raise NotDivisible("not a unit of the localization")
        return self._norm(a[1], a[0])

    def divide_exact(self, a, b):
        if not b[0]:
            raise NotDivisible("division by zero")
        va = self.valuation(a)
        if va is None:
            return self.zero
        vb = self.valuation(b)
        if va < vb:
            raise NotDivisible("valuation obstruction")
        # strip the common u-power so the new denominator stays a unit
        num_a = tuple((k - vb, c) for k, c in a[0])
        num_b = tuple((k - vb, c) for k, c in b[0])
        return self._norm(_pmul(self.p, num_a, b[1]), _pmul(self.p, a[1], num_b))

    def euclid_divmod(self, a, b):
        va, vb = self.valuation(a), self.valuation(b)
        if va is not None and (vb is None or va >= vb):
            return self.divide_exact(a, b), self.zero
        return self.zero, a

    def euclid_norm(self, a):
        v = self.valuation(a)
        return -1 if v is None else v

    def canonical_unit(self, a):
        v = self.valuation(a)
        if v is None:
            return self.one
        return self.divide_exact(a, self.t_power(Fraction(v, self.scale)))

    def frobenius(self, a):
        return (self.poly.frobenius(a[0]), self.poly.frobenius(a[1]))

    def frobenius_inverse(self, a):
        return self._norm(
            self.poly.frobenius_inverse(a[0]), self.poly.frobenius_inverse(a[1])
        )

    def handle_json(self):
        return {"kind": "LocalizedFracPoly", "p": self.p, "depth": self.depth}

    def element_terms(self, a):
        return [
            {"num": self.poly.element_terms(a[0]), "den": self.poly.element_terms(a[1])}
        ]

    def element_from_terms(self, terms):
        t = terms[0]
        return self._norm(
            self.poly.element_from_terms(t["num"]),
            self.poly.element_from_terms(t["den"]),
        )

    def random_element(self, rng, size: int = 4):
        num = self.poly.random_element(rng, size)
        den = _padd(self.p, ((0, 1),), _pmul(self.p, ((1, 1),), self.poly.random_element(rng, size)))
        return self._norm(num, den) if num else self.zero
