"""Truncated Witt vectors: public value type and operator API."""

from __future__ import annotations

from ..errors import LengthMismatch, RingMismatch
from ..rings.base import Ring
from .polynomials import WittPolynomialCache, get_cache
from .vectors import WittRing, integer_witt_coordinates


class WittVector:
    """Length-s Witt vector over a base ring; immutable."""

    __slots__ = ("ring", "components")

    def __init__(self, ring: WittRing, components: tuple):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "components", tuple(components))

    def __setattr__(self, *a):
        raise AttributeError("WittVector is immutable")

    @classmethod
    def make(cls, base: Ring, length: int, components, p: int | None = None):
        ring = WittRing(base, length, p)
        return cls(ring, tuple(components))

    @classmethod
    def from_int(cls, base: Ring, length: int, n: int, p: int | None = None):
        ring = WittRing(base, length, p)
        return cls(ring, ring.from_int(n))

    @classmethod
    def teichmuller(cls, base: Ring, length: int, a, p: int | None = None):
        ring = WittRing(base, length, p)
        return cls(ring, ring.teichmuller(a))

    # -- arithmetic --------------------------------------------------------

    def _chk(self, other: "WittVector"):
        if not isinstance(other, WittVector):
            raise TypeError("expected a WittVector")
        if other.ring.base != self.ring.base or other.ring.p != self.ring.p:
            raise RingMismatch("Witt vectors over different bases")
        if other.ring.s != self.ring.s:
            raise LengthMismatch(f"lengths {self.ring.s} vs {other.ring.s}")

    def __add__(self, other):
        self._chk(other)
        return WittVector(self.ring, self.ring.add(self.components, other.components))

    def __sub__(self, other):
        self._chk(other)
        return WittVector(self.ring, self.ring.sub(self.components, other.components))

    def __mul__(self, other):
        if isinstance(other, int):
            other = WittVector(self.ring, self.ring.from_int(other))
        self._chk(other)
        return WittVector(self.ring, self.ring.mul(self.components, other.components))

    __rmul__ = __mul__

    def __neg__(self):
        return WittVector(self.ring, self.ring.neg(self.components))

    def __pow__(self, k: int):
        acc = WittVector(self.ring, self.ring.one)
        base = self
        if k < 0:
            base = WittVector(self.ring, self.ring.inv(self.components))
            k = -k
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def __eq__(self, other):
        if isinstance(other, int):
            return self.components == self.ring.from_int(other)
        return (
            isinstance(other, WittVector)
            and other.ring == self.ring
            and other.components == self.components
        )

    def __hash__(self):
        return hash((self.ring, self.components))

    def __repr__(self):
        return f"W_{self.ring.s}({self.ring.base!r}){list(self.components)}"

    def is_zero(self):
        return all(self.ring.base.is_zero(c) for c in self.components)

    # -- structure maps ------------------------------------------------------

    def ghost(self):
        return self.ring.ghost(self.components)

    def restriction(self):
        r = WittRing(self.ring.base, self.ring.s - 1, self.ring.p)
        return WittVector(r, self.ring.restriction(self.components))

    def frobenius(self):
        r = WittRing(self.ring.base, self.ring.s - 1, self.ring.p)
        return WittVector(r, self.ring.frobenius_op(self.components))

    def verschiebung(self):
        r = WittRing(self.ring.base, self.ring.s + 1, self.ring.p)
        return WittVector(r, self.ring.verschiebung(self.components))

    def frobenius_lift(self):
        return WittVector(self.ring, self.ring.frobenius(self.components))

    def frobenius_lift_inverse(self):
        return WittVector(self.ring, self.ring.frobenius_inverse(self.components))

    def to_json(self):
        return {
            "p": self.ring.p,
            "s": self.ring.s,
            "base": self.ring.base.handle_json(),
            "components": [
                self.ring.base.element_terms(c) for c in self.components
            ],
        }


def witt_arith(u: WittVector, v: WittVector, op: str) -> WittVector:
    if op == "add":
        return u + v
    if op == "sub":
        return u - v
    if op == "mul":
        return u * v
    raise ValueError(f"unknown op {op!r}")


def ghost(u: WittVector) -> list:
    return u.ghost()


def witt_operators(u: WittVector, which: str) -> WittVector:
    if which in ("restriction", "R"):
        return u.restriction()
    if which in ("frobenius", "F"):
        return u.frobenius()
    if which in ("verschiebung", "V"):
        return u.verschiebung()
    raise ValueError(f"unknown operator {which!r}")


def witt_frobenius_lift(u: WittVector) -> WittVector:
    return u.frobenius_lift()


def witt_frobenius_lift_inverse(u: WittVector) -> WittVector:
    return u.frobenius_lift_inverse()


def witt_divide_exact(a: WittVector, b: WittVector) -> WittVector:
    a._chk(b)
    return WittVector(a.ring, a.ring.divide_exact(a.components, b.components))


__all__ = [
    "WittVector",
    "WittRing",
    "WittPolynomialCache",
    "get_cache",
    "integer_witt_coordinates",
    "witt_arith",
    "ghost",
    "witt_operators",
    "witt_frobenius_lift",
    "witt_frobenius_lift_inverse",
    "witt_divide_exact",
]
