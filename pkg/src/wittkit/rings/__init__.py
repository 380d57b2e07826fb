from .base import Ring, RingElement, divide_exact, frobenius_endo, frobenius_inverse, ring_arith
from .cyclotomic import CyclotomicQuotient
from .fracpoly import FracPolyDomain, LocalizedFracPoly
from .homs import RingHom
from .integers import IntegerRing, LocalizedIntegers
from .laurent import LaurentExtension
from .modular import ModularIntegers, PrimeField
from .serialize import element_from_json, element_to_json, handle_from_json

ZZ = IntegerRing()

__all__ = [
    "Ring",
    "RingElement",
    "RingHom",
    "ZZ",
    "IntegerRing",
    "LocalizedIntegers",
    "ModularIntegers",
    "PrimeField",
    "CyclotomicQuotient",
    "FracPolyDomain",
    "LocalizedFracPoly",
    "LaurentExtension",
    "ring_arith",
    "divide_exact",
    "frobenius_endo",
    "frobenius_inverse",
    "element_to_json",
    "element_from_json",
    "handle_from_json",
]
