"""Truncated tilt model and the distinguished period elements.

The tilt of the cyclotomic tower is modeled by the localized fractional
domain with eps := 1 + t; fractional powers eps^(a/p^j) = (1 + t^(1/p^j))^a
are exact within the depth budget.  The elements mu, xi, xi_r and their
Frobenius twists live in W_s of that model, each carried in two forms: the
symbolic group-ring expression (the form the comparison maps understand)
and the evaluated Witt vector (the form arithmetic understands).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import DepthExhausted
from ..rings.fracpoly import LocalizedFracPoly
from ..witt import WittRing, WittVector
from .symbolic import Sym, SymbolicRing, sym_mul, sym_sub


@dataclass(frozen=True)
class TiltModel:
    p: int
    depth: int

    @property
    def base(self) -> LocalizedFracPoly:
        return LocalizedFracPoly(self.p, self.depth)

    def eps(self, k=1):
        """eps^k as a base payload, k in Z[1/p] within the depth budget."""
        sring = SymbolicRing(self.p)
        return sring._eps_payload(self.base, Fraction(k))


class AinfElement:
    """An element of the Teichmuller-generated subring, in both forms."""

    __slots__ = ("model", "wring", "sym", "_value")

    def __init__(self, model: TiltModel, wring: WittRing, symbol: Sym, value=None):
        object.__setattr__(self, "model", model)
        object.__setattr__(self, "wring", wring)
        object.__setattr__(self, "sym", symbol)
        object.__setattr__(self, "_value", value)

    def __setattr__(self, *a):
        raise AttributeError("immutable")

    @property
    def value(self) -> tuple:
        got = object.__getattribute__(self, "_value")
        if got is None:
            got = SymbolicRing(self.model.p).eval_tilt(self.sym, self.wring)
            object.__setattr__(self, "_value", got)
        return got

    def witt(self) -> WittVector:
        return WittVector(self.wring, self.value)

    def _make(self, symbol: Sym) -> "AinfElement":
        return AinfElement(self.model, self.wring, symbol)

    def __add__(self, other):
        from .symbolic import sym_add

        return self._make(sym_add(self.sym, other.sym))

    def __sub__(self, other):
        return self._make(sym_sub(self.sym, other.sym))

    def __mul__(self, other):
        return self._make(sym_mul(self.sym, other.sym))

    def phi(self, times: int = 1) -> "AinfElement":
        return self._make(SymbolicRing(self.model.p).phi(self.sym, times))

    def __eq__(self, other):
        return isinstance(other, AinfElement) and self.sym == other.sym

    def __repr__(self):
        return f"Ainf{list(self.sym)}"


@dataclass
class PerfectoidElements:
    """mu, xi, xi_r, xi~_r at Witt length s over the depth-N tilt model."""

    p: int
    depth: int
    s: int

    def __post_init__(self):
        self.model = TiltModel(self.p, self.depth)
        self.wring = WittRing(self.model.base, self.s, self.p)
        self.sring = SymbolicRing(self.p)
        if self.depth < 1:
            raise DepthExhausted("need depth >= 1 for xi = sum [eps^(i/p)]")
        # construction-time identity: mu = xi * phi^(-1)(mu)
        mu = self.mu()
        rhs = self.xi() * self.mu().phi(-1)
        if mu.sym != rhs.sym or mu.value != rhs.value:
            raise AssertionError("mu = xi * phi^-1(mu) failed at construction")

    def element(self, symbol: Sym) -> AinfElement:
        return AinfElement(self.model, self.wring, symbol)

    def one(self) -> AinfElement:
        from .symbolic import SYM_ONE

        return self.element(SYM_ONE)

    def teichmuller(self, k) -> AinfElement:
        from .symbolic import sym_q

        return self.element(sym_q(Fraction(k)))

    def mu(self) -> AinfElement:
        return self.element(self.sring.mu())

    def xi(self) -> AinfElement:
        return self.element(self.sring.xi())

    def xi_r(self, r: int) -> AinfElement:
        return self.element(self.sring.xi_r(r))

    def xi_tilde_r(self, r: int) -> AinfElement:
        return self.element(self.sring.xi_tilde_r(r))

    def eps_minus_one(self, k) -> AinfElement:
        return self.element(self.sring.eps_power_minus_one(Fraction(k)))


def make_elements(p: int, depth: int, s: int) -> PerfectoidElements:
    return PerfectoidElements(p, depth, s)
