"""Z/m and prime fields."""

from __future__ import annotations

from math import gcd

from ..errors import NotDivisible
from .base import Ring


class ModularIntegers(Ring):
    kind = "ModularIntegers"

    def __init__(self, m: int):
        if m <= 1:
            raise ValueError("modulus must be >= 2")
        self.m = m
        self.zero = 0
        self.one = 1 % m

    def descriptor(self):
        return ("ModularIntegers", self.m)

    def characteristic(self):
        return self.m

    def from_int(self, n):
        return int(n) % self.m

    def add(self, a, b):
        return (a + b) % self.m

    def neg(self, a):
        return (-a) % self.m

    def mul(self, a, b):
        return (a * b) % self.m

    def is_unit(self, a):
        return gcd(a, self.m) == 1

    def inv(self, a):
        if not self.is_unit(a):
            raise NotDivisible(f"{a} is not a unit mod {self.m}")
        return pow(a, -1, self.m)

    def divide_exact(self, a, b):
        """Canonical witness q (smallest nonnegative mod m/gcd) with b*q = a."""
        if b % self.m == 0:
            raise NotDivisible("division by zero")
        g = gcd(b, self.m)
        if a % g:
            raise NotDivisible(f"{b} does not divide {a} mod {self.m}")
        m1 = self.m // g
        q = ((a // g) * pow(b // g, -1, m1)) % m1
        return q

    def handle_json(self):
        return {"kind": "ModularIntegers", "m": self.m}

    def element_terms(self, a):
        return [{"exp": "0", "coeff": str(a % self.m)}]

    def element_from_terms(self, terms):
        acc = 0
        for t in terms:
            acc = (acc + int(t["coeff"])) % self.m
        return acc

    def random_element(self, rng, size: int = 4):
        return rng.randrange(self.m)


class PrimeField(ModularIntegers):
    kind = "PrimeField"

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        super().__init__(p)
        self.p = p

    def descriptor(self):
        return ("PrimeField", self.p)

    def divide_exact(self, a, b):
        if b == 0:
            raise NotDivisible("division by zero")
        return (a * pow(b, -1, self.p)) % self.p

    def frobenius(self, a):
        return a  # x^p = x on F_p

    def frobenius_inverse(self, a):
        return a

    def euclid_divmod(self, a, b):
        return self.divide_exact(a, b), 0

    def euclid_norm(self, a):
        return 0 if a == 0 else 1

    def canonical_unit(self, a):
        return a if a else 1

    def handle_json(self):
        return {"kind": "PrimeField", "p": self.p}
