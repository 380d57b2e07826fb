"""JSON (de)serialization of ring handles and elements.

Canonical form: handles serialize to sorted-key dicts, elements to the
per-ring term lists, so equal values produce byte-identical JSON.
"""

from __future__ import annotations

import json

from .base import Ring, RingElement
from .cyclotomic import CyclotomicQuotient
from .fracpoly import FracPolyDomain, LocalizedFracPoly
from .integers import IntegerRing, LocalizedIntegers
from .laurent import LaurentExtension
from .modular import ModularIntegers, PrimeField


def handle_from_json(d: dict) -> Ring:
    kind = d["kind"]
    if kind == "Integers":
        return IntegerRing()
    if kind == "LocalizedIntegers":
        return LocalizedIntegers(d["m"])
    if kind == "ModularIntegers":
        return ModularIntegers(d["m"])
    if kind == "PrimeField":
        return PrimeField(d["p"])
    if kind == "CyclotomicQuotient":
        return CyclotomicQuotient(d["p"], d["level"], d.get("precision"))
    if kind == "FracPolyDomain":
        return FracPolyDomain(d["p"], d["depth"])
    if kind == "LocalizedFracPoly":
        return LocalizedFracPoly(d["p"], d["depth"])
    if kind == "LaurentExtension":
        return LaurentExtension(handle_from_json(d["base"]), d["vars"], d["depth"], d["p"])
    raise ValueError(f"unknown ring kind {kind!r}")


def element_to_json(a: RingElement) -> dict:
    return {"ring": a.ring.handle_json(), "terms": a.ring.element_terms(a.payload)}


def element_from_json(d: dict) -> RingElement:
    ring = handle_from_json(d["ring"])
    return RingElement(ring, ring.element_from_terms(d["terms"]))


def dumps_canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"
