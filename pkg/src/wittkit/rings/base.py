"""Ring protocol and element wrapper.

Every concrete ring operates on plain hashable payloads (ints, tuples); the
RingElement wrapper carries the ring tag and provides operators.  All values
are immutable and all operations are pure, so elements are safe to share
across threads.
"""

from __future__ import annotations

from typing import Any

from ..errors import NotDivisible, RingMismatch, UnsupportedBase


class Ring:
    """Base class; subclasses implement payload-level arithmetic."""

    kind: str = "?"

    # -- identity ---------------------------------------------------------
    def descriptor(self) -> tuple:
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Ring) and self.descriptor() == other.descriptor()

    def __hash__(self):
        return hash(self.descriptor())

    def __repr__(self):
        return f"{self.kind}{self.descriptor()[1:]}"

    # -- arithmetic on payloads --------------------------------------------
    zero: Any
    one: Any

    def from_int(self, n: int):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def eq(self, a, b) -> bool:
        return a == b

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def divide_exact(self, a, b):
        """q with a = b*q, canonical when not unique; NotDivisible otherwise."""
        raise NotImplementedError

    def characteristic(self) -> int | None:
        """Ring characteristic, None when unknown."""
        return None

    def div_int(self, a, k: int):
        """Exact division by an integer; only torsion-free covers provide it."""
        raise UnsupportedBase(f"{self.kind} does not support integer division")

    # -- char p structure ---------------------------------------------------
    def frobenius(self, a):
        raise UnsupportedBase(f"{self.kind} has no Frobenius endomorphism")

    def frobenius_inverse(self, a):
        raise UnsupportedBase(f"{self.kind} has no Frobenius inverse")

    # -- Euclidean backend (optional) ----------------------------------------
    def euclid_divmod(self, a, b):
        raise UnsupportedBase(f"{self.kind} is not a supported Euclidean domain")

    def euclid_norm(self, a) -> int:
        raise UnsupportedBase(f"{self.kind} is not a supported Euclidean domain")

    def canonical_unit(self, a):
        raise UnsupportedBase(f"{self.kind} is not a supported Euclidean domain")

    def inv_unit(self, u):
        return self.inv(u)

    def exact_div(self, a, b):
        q = self.divide_exact(a, b)
        return q

    # -- serialization -------------------------------------------------------
    def handle_json(self) -> dict:
        raise NotImplementedError

    def element_terms(self, a) -> list[dict]:
        raise NotImplementedError

    def element_from_terms(self, terms: list[dict]):
        raise NotImplementedError

    def element_str(self, a) -> str:
        import json

        return json.dumps(self.element_terms(a), sort_keys=True, separators=(",", ":"))

    # -- sampling -------------------------------------------------------------
    def random_element(self, rng, size: int = 4):
        raise NotImplementedError

    # -- helpers ----------------------------------------------------------------
    def el(self, payload) -> "RingElement":
        return RingElement(self, payload)


class RingElement:
    """Immutable element tagged with its ring."""

    __slots__ = ("ring", "payload")

    def __init__(self, ring: Ring, payload):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "payload", payload)

    def __setattr__(self, *a):
        raise AttributeError("RingElement is immutable")

    def _coerce(self, other):
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")
            return other.payload
        if isinstance(other, int):
            return self.ring.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.ring.add(self.payload, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.ring.sub(self.payload, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.ring.sub(o, self.payload))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.ring.mul(self.payload, o))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(self.ring, self.ring.neg(self.payload))

    def __pow__(self, k: int):
        if k < 0:
            return RingElement(self.ring, self.ring.inv(self.payload)) ** (-k)
        acc = RingElement(self.ring, self.ring.one)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def __eq__(self, other):
        if isinstance(other, int):
            return self.ring.eq(self.payload, self.ring.from_int(other))
        if not isinstance(other, RingElement) or other.ring != self.ring:
            return False
        return self.ring.eq(self.payload, other.payload)

    def __hash__(self):
        return hash((self.ring, self.payload))

    def __repr__(self):
        return f"<{self.ring!r}: {self.payload!r}>"

    def is_zero(self) -> bool:
        return self.ring.is_zero(self.payload)

    def is_unit(self) -> bool:
        return self.ring.is_unit(self.payload)

    def inverse(self) -> "RingElement":
        return RingElement(self.ring, self.ring.inv(self.payload))


def ring_arith(a: RingElement, b: RingElement, op: str) -> RingElement:
    """Exact arithmetic dispatch used by the CLI surface."""
    if not isinstance(a, RingElement) or not isinstance(b, RingElement):
        raise TypeError("ring_arith expects RingElement operands")
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring!r} vs {b.ring!r}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def divide_exact(a: RingElement, b: RingElement) -> RingElement:
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring!r} vs {b.ring!r}")
    if b.is_zero():
        raise NotDivisible("division by zero")
    return RingElement(a.ring, a.ring.divide_exact(a.payload, b.payload))


def frobenius_endo(a: RingElement) -> RingElement:
    return RingElement(a.ring, a.ring.frobenius(a.payload))


def frobenius_inverse(a: RingElement) -> RingElement:
    return RingElement(a.ring, a.ring.frobenius_inverse(a.payload))
