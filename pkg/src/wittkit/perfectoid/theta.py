"""The comparison maps onto truncated Witt rings of the cyclotomic target.

theta-tilde_r sends [eps^k] to [zeta^(k/p^r)] (with zeta^(a/p^j) the level-j
root raised to a); theta_r is its twist by phi^r.  Both are defined exactly
on the Teichmuller-generated subring through the symbolic layer: feeding a
raw Witt vector with no symbolic form raises UnsupportedElement.
"""

from __future__ import annotations

from ..errors import UnsupportedElement
from ..rings.cyclotomic import CyclotomicQuotient
from ..witt import WittRing, WittVector
from .symbolic import SymbolicRing
from .tilt import AinfElement


class CyclotomicTarget:
    """W_r-rings over (Z/p^M)[zeta_{p^level}]."""

    def __init__(self, p: int, level: int, precision: int):
        self.p = p
        self.level = level
        self.precision = precision
        self.ring = CyclotomicQuotient(p, level, precision)

    def witt(self, r: int) -> WittRing:
        return WittRing(self.ring, r, self.p)

    def zeta(self, j: int):
        return self.ring.zeta(j)

    def teichmuller_zeta(self, r: int, j: int, power: int = 1) -> WittVector:
        w = self.witt(r)
        z = self.ring.el(self.ring.zeta(j)) ** power
        return WittVector(w, w.teichmuller(z.payload))


def theta_tilde_r(u, target: CyclotomicTarget, r: int) -> WittVector:
    if not isinstance(u, AinfElement):
        raise UnsupportedElement(
            "theta-tilde is defined on the Teichmuller-generated subring; "
            "provide an element with a symbolic form"
        )
    sring = SymbolicRing(u.model.p)
    w = target.witt(r)
    return WittVector(w, sring.eval_theta_tilde(u.sym, w, r))


def theta_r(u, target: CyclotomicTarget, r: int) -> WittVector:
    if not isinstance(u, AinfElement):
        raise UnsupportedElement("theta_r needs a symbolic element")
    return theta_tilde_r(u.phi(r), target, r)


def theta(u, target: CyclotomicTarget):
    """Fontaine-style theta = theta_1 into the degree-1 Witt ring."""
    return theta_r(u, target, 1)
