"""Ring homomorphisms given by generator images.

A hom is determined by where the distinguished generators go: t^(1/p^N) for
the fractional polynomial domains, x (the root of the cyclotomic relation)
for cyclotomic quotients, the variables U_i for Laurent extensions, plus a
coefficient hom for composite rings.  Defining relations of the source are
checked at construction; localizations additionally require denominators to
map to units, which is verified per element.
"""

from __future__ import annotations

from ..errors import NotDivisible, RingMismatch
from .base import Ring
from .cyclotomic import CyclotomicQuotient
from .fracpoly import FracPolyDomain, LocalizedFracPoly
from .integers import IntegerRing, LocalizedIntegers
from .laurent import LaurentExtension
from .modular import ModularIntegers


class RingHom:
    def __init__(self, source: Ring, target: Ring, gen_image=None, coeff_hom=None,
                 var_images=None):
        self.source = source
        self.target = target
        self.gen_image = gen_image      # image of u or x, a target payload
        self.var_images = var_images    # Laurent variable images (unit payloads)
        self.coeff_hom = coeff_hom
        self._validate()

    def _validate(self):
        src, tgt = self.source, self.target
        if isinstance(src, IntegerRing):
            return
        if isinstance(src, LocalizedIntegers):
            img_m = tgt.from_int(src.m)
            if not tgt.is_unit(img_m):
                raise NotDivisible(f"{src.m} must map to a unit")
            return
        if isinstance(src, ModularIntegers):
            char = tgt.characteristic()
            if char is None or char == 0 or src.m % char:
                raise RingMismatch(
                    f"no canonical map Z/{src.m} -> ring of characteristic {char}"
                )
            return
        if isinstance(src, CyclotomicQuotient):
            if self.gen_image is None:
                raise ValueError("cyclotomic hom needs the image of the root")
            # the defining relation: 1 + x^e + ... + x^{(p-1)e} = 0
            acc = tgt.zero
            power = tgt.one
            step = _pow(tgt, self.gen_image, src.e)
            for _ in range(src.p):
                acc = tgt.add(acc, power)
                power = tgt.mul(power, step)
            if not tgt.is_zero(acc):
                raise RingMismatch("image of the root does not satisfy the relation")
            return
        if isinstance(src, FracPolyDomain):
            if self.gen_image is None:
                raise ValueError("polynomial hom needs the image of t^(1/p^N)")
            return
        if isinstance(src, LocalizedFracPoly):
            if self.gen_image is None:
                raise ValueError("localized hom needs the image of t^(1/p^N)")
            return
        if isinstance(src, LaurentExtension):
            if self.var_images is None or len(self.var_images) != src.nvars:
                raise ValueError("Laurent hom needs one image per variable")
            if self.coeff_hom is None:
                raise ValueError("Laurent hom needs a coefficient hom")
            for img in self.var_images:
                if not self.target.is_unit(img):
                    raise NotDivisible("Laurent variables must map to units")
            return
        raise RingMismatch(f"unsupported hom source {src!r}")

    def apply(self, a):
        src, tgt = self.source, self.target
        if isinstance(src, (IntegerRing, ModularIntegers)):
            return tgt.from_int(a if isinstance(src, IntegerRing) else int(a))
        if isinstance(src, LocalizedIntegers):
            num = tgt.from_int(a.numerator)
            den = tgt.from_int(a.denominator)
            return tgt.mul(num, tgt.inv(den))
        if isinstance(src, CyclotomicQuotient):
            acc = tgt.zero
            for i, c in enumerate(a):
                if c:
                    acc = tgt.add(acc, tgt.mul(tgt.from_int(c), _pow(tgt, self.gen_image, i)))
            return acc
        if isinstance(src, FracPolyDomain):
            return self._apply_poly(a)
        if isinstance(src, LocalizedFracPoly):
            num = self._apply_poly(a[0])
            den = self._apply_poly(a[1])
            if not tgt.is_unit(den):
                raise NotDivisible("denominator does not map to a unit")
            return tgt.mul(num, tgt.inv(den))
        if isinstance(src, LaurentExtension):
            acc = tgt.zero
            for exps, c in a:
                term = self.coeff_hom.apply(c)
                for img, k in zip(self.var_images, exps):
                    term = tgt.mul(term, _pow_signed(tgt, img, k))
                acc = tgt.add(acc, term)
            return acc
        raise RingMismatch(f"unsupported hom source {src!r}")

    def _apply_poly(self, poly):
        tgt = self.target
        acc = tgt.zero
        for k, c in poly:
            acc = tgt.add(acc, tgt.mul(tgt.from_int(c), _pow(tgt, self.gen_image, k)))
        return acc

    # canonical constructions -------------------------------------------------

    @staticmethod
    def canonical(source: Ring, target: Ring) -> "RingHom":
        """The canonical map when one exists (quotients, localizations)."""
        if isinstance(source, IntegerRing):
            return RingHom(source, target)
        if isinstance(source, ModularIntegers) and not isinstance(source, type(None)):
            return RingHom(source, target)
        if isinstance(source, FracPolyDomain):
            if isinstance(target, (FracPolyDomain, LocalizedFracPoly)):
                if target.p != source.p or target.depth < source.depth:
                    raise RingMismatch("depth cannot shrink along the canonical map")
                shift = target.p ** (target.depth - source.depth)
                if isinstance(target, FracPolyDomain):
                    img = ((shift, 1),)
                else:
                    img = target.t_power(0) if False else ((((shift, 1),), ((0, 1),)))
                return RingHom(source, target, gen_image=img)
        if isinstance(source, LocalizedFracPoly) and isinstance(target, LocalizedFracPoly):
            if target.p != source.p or target.depth < source.depth:
                raise RingMismatch("depth cannot shrink along the canonical map")
            shift = target.p ** (target.depth - source.depth)
            return RingHom(source, target, gen_image=((((shift, 1),), ((0, 1),))))
        if isinstance(source, CyclotomicQuotient) and isinstance(target, CyclotomicQuotient):
            if (source.p, source.level) != (target.p, target.level):
                raise RingMismatch("cyclotomic level mismatch")
            gen = target.zeta(target.level)
            return RingHom(source, target, gen_image=gen)
        raise RingMismatch(f"no canonical map {source!r} -> {target!r}")


def _pow(ring: Ring, a, k: int):
    acc = ring.one
    base = a
    while k:
        if k & 1:
            acc = ring.mul(acc, base)
        base = ring.mul(base, base)
        k >>= 1
    return acc


def _pow_signed(ring: Ring, a, k: int):
    if k >= 0:
        return _pow(ring, a, k)
    return _pow(ring, ring.inv(a), -k)
