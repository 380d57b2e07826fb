"""Laurent extensions: monomials U_1^{k_1} ... U_d^{k_d}, k_i in p^-L * Z.

Payload: tuple of (exponent-vector, coeff-payload) sorted by exponent vector,
exponents stored as integers scaled by p^L.  Coefficients live in the base
ring; the extension inherits its characteristic.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import DepthExhausted, NotDivisible, UnsupportedBase
from .base import Ring


class LaurentExtension(Ring):
    kind = "LaurentExtension"

    def __init__(self, base: Ring, nvars: int, depth: int, p: int):
        if nvars < 1:
            raise ValueError("need at least one variable")
        self.base = base
        self.nvars = nvars
        self.depth = depth
        self.p = p
        self.scale = p ** depth
        self.zero = ()
        self.one = (((0,) * nvars, base.one),)

    def descriptor(self):
        return ("LaurentExtension", self.base.descriptor(), self.nvars, self.depth, self.p)

    def characteristic(self):
        return self.base.characteristic()

    def _norm(self, terms):
        acc: dict[tuple, object] = {}
        for e, c in terms:
            if e in acc:
                acc[e] = self.base.add(acc[e], c)
            else:
                acc[e] = c
        return tuple(sorted((e, c) for e, c in acc.items() if not self.base.is_zero(c)))

    def monomial(self, exponents, coeff=None):
        """U^exponents with the given base coefficient (default 1).

        Exponents may be Fractions; denominators must divide p^depth.
        """
        scaled = []
        for e in exponents:
            k = Fraction(e) * self.scale
            if k.denominator != 1:
                raise DepthExhausted(f"exponent {e} outside depth budget p^-{self.depth}")
            scaled.append(int(k))
        c = self.base.one if coeff is None else coeff
        if self.base.is_zero(c):
            return ()
        return ((tuple(scaled), c),)

    def from_int(self, n):
        c = self.base.from_int(n)
        return (((0,) * self.nvars, c),) if not self.base.is_zero(c) else ()

    def add(self, a, b):
        return self._norm(list(a) + list(b))

    def neg(self, a):
        return tuple((e, self.base.neg(c)) for e, c in a)

    def mul(self, a, b):
        out = []
        for e1, c1 in a:
            for e2, c2 in b:
                out.append(
                    (tuple(x + y for x, y in zip(e1, e2)), self.base.mul(c1, c2))
                )
        return self._norm(out)

    def is_unit(self, a):
        return len(a) == 1 and self.base.is_unit(a[0][1])

    def inv(self, a):
        if not self.is_unit(a):
            raise NotDivisible("not a unit monomial")
        e, c = a[0]
        return ((tuple(-x for x in e), self.base.inv(c)),)

    def divide_exact(self, a, b):
        if not b:
            raise NotDivisible("division by zero")
        if len(b) == 1:
            e, c = b[0]
            return self._norm(
                [
                    (tuple(x - y for x, y in zip(e1, e)), self.base.divide_exact(c1, c))
                    for e1, c1 in a
                ]
            )
        raise UnsupportedBase("Laurent division only by monomials")

    def div_int(self, a, k):
        return tuple((e, self.base.div_int(c, k)) for e, c in a)

    def frobenius(self, a):
        return self._norm(
            [(tuple(self.p * x for x in e), self.base.frobenius(c)) for e, c in a]
        )

    def frobenius_inverse(self, a):
        for e, _ in a:
            if any(x % self.p for x in e):
                raise DepthExhausted("p-th root needs exponents divisible by p")
        return self._norm(
            [
                (tuple(x // self.p for x in e), self.base.frobenius_inverse(c))
                for e, c in a
            ]
        )

    def handle_json(self):
        return {
            "kind": "LaurentExtension",
            "base": self.base.handle_json(),
            "vars": self.nvars,
            "depth": self.depth,
            "p": self.p,
        }

    def element_terms(self, a):
        out = []
        for e, c in a:
            exps = ",".join(
                f"{Fraction(k, self.scale).numerator}/{Fraction(k, self.scale).denominator}"
                for k in e
            )
            out.append({"exp": exps, "coeff": self.base.element_terms(c)})
        return out or [{"exp": ",".join(["0/1"] * self.nvars), "coeff": []}]

    def element_from_terms(self, terms):
        acc = []
        for t in terms:
            if not t["coeff"]:
                continue
            exps = []
            for part in t["exp"].split(","):
                num, _, den = part.partition("/")
                k = Fraction(int(num), int(den) if den else 1) * self.scale
                exps.append(int(k))
            acc.append((tuple(exps), self.base.element_from_terms(t["coeff"])))
        return self._norm(acc)

    def random_element(self, rng, size: int = 4):
        nterms = rng.randint(0, 2)
        terms = []
        for _ in range(nterms):
            e = tuple(rng.randint(-size, size) for _ in range(self.nvars))
            terms.append((e, self.base.random_element(rng, size)))
        return self._norm(terms)
