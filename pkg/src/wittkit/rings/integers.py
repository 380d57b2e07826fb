"""The integers and their localizations Z[1/m]."""

from __future__ import annotations

from fractions import Fraction

from ..errors import NotDivisible
from .base import Ring


class IntegerRing(Ring):
    kind = "Integers"
    zero = 0
    one = 1

    def descriptor(self):
        return ("Integers",)

    def from_int(self, n):
        return int(n)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def characteristic(self):
        return 0

    def is_unit(self, a):
        return a in (1, -1)

    def inv(self, a):
        if not self.is_unit(a):
            raise NotDivisible(f"{a} is not a unit of Z")
        return a

    def divide_exact(self, a, b):
        if b == 0:
            raise NotDivisible("division by zero")
        q, r = divmod(a, b)
        if r:
            raise NotDivisible(f"{b} does not divide {a}")
        return q

    def div_int(self, a, k):
        return self.divide_exact(a, self.from_int(k))

    def euclid_divmod(self, a, b):
        q, r = divmod(a, b)
        # symmetric remainder keeps entries small during elimination
        if 2 * abs(r) > abs(b):
            if r > 0:
                r -= abs(b)
                q += 1 if b > 0 else -1
            else:
                r += abs(b)
                q -= 1 if b > 0 else -1
        return q, r

    def euclid_norm(self, a):
        return abs(a)

    def canonical_unit(self, a):
        return -1 if a < 0 else 1

    def inv_unit(self, u):
        return u

    def handle_json(self):
        return {"kind": "Integers"}

    def element_terms(self, a):
        return [{"exp": "0", "coeff": str(a)}]

    def element_from_terms(self, terms):
        acc = 0
        for t in terms:
            if t["exp"] != "0":
                raise ValueError("integer elements carry a single exp-0 term")
            acc += int(t["coeff"])
        return acc

    def random_element(self, rng, size: int = 4):
        return rng.randint(-(2 ** size), 2 ** size)


class LocalizedIntegers(Ring):
    """Z[1/m]: fractions whose denominator divides a power of m.

    Payload: Fraction in lowest terms (canonical, hashable).  A principal
    ideal domain, Euclidean through the m-coprime part of the numerator.
    """

    kind = "LocalizedIntegers"
    zero = Fraction(0)
    one = Fraction(1)

    def __init__(self, m: int):
        if m <= 1:
            raise ValueError("m must be >= 2")
        self.m = m
        self._unit_primes = _prime_factors(m)

    def descriptor(self):
        return ("LocalizedIntegers", self.m)

    def characteristic(self):
        return 0

    def _check(self, x: Fraction) -> Fraction:
        d = x.denominator
        for p in self._unit_primes:
            while d % p == 0:
                d //= p
        if d != 1:
            raise NotDivisible(f"{x} is not in Z[1/{self.m}]")
        return x

    def from_int(self, n):
        return Fraction(int(n))

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def _coprime_part(self, a: Fraction) -> int:
        n = abs(a.numerator)
        for p in self._unit_primes:
            while n and n % p == 0:
                n //= p
        return n

    def is_unit(self, a):
        return a != 0 and self._coprime_part(a) == 1

    def inv(self, a):
        if not self.is_unit(a):
            raise NotDivisible(f"{a} is not a unit of Z[1/{self.m}]")
        return 1 / a

    def divide_exact(self, a, b):
        if b == 0:
            raise NotDivisible("division by zero")
        return self._check(a / b)

    def div_int(self, a, k):
        return self._check(a / k)

    def euclid_divmod(self, a, b):
        if a == 0:
            return Fraction(0), Fraction(0)
        na, nb = self._coprime_part(a), self._coprime_part(b)
        q0, r0 = divmod(na, nb)
        if r0 == 0:
            return self.divide_exact(a, b), Fraction(0)
        unit_a = a / na
        r = unit_a * r0
        return self._check((a - r) / b), r

    def euclid_norm(self, a):
        return self._coprime_part(a)

    def canonical_unit(self, a):
        return a / self._coprime_part(a)

    def handle_json(self):
        return {"kind": "LocalizedIntegers", "m": self.m}

    def element_terms(self, a):
        return [{"exp": "0", "coeff": f"{a.numerator}/{a.denominator}"}]

    def element_from_terms(self, terms):
        acc = Fraction(0)
        for t in terms:
            num, _, den = t["coeff"].partition("/")
            acc += Fraction(int(num), int(den) if den else 1)
        return self._check(acc)

    def random_element(self, rng, size: int = 4):
        num = rng.randint(-(2 ** size), 2 ** size)
        k = rng.randint(0, 2)
        return Fraction(num, self.m ** k)


def _prime_factors(m: int) -> list[int]:
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out
