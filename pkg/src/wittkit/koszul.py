"""Koszul complexes, their closed-form cohomology, and the rank-d lattice
group-cohomology model by weight decomposition.

K(g_1, ..., g_d) is built as the d-fold tensor of two-term complexes
[R -> R], which pins the differential signs to the same (-1)^degree
convention used everywhere else: in degree n the basis is e_T for subsets
T of {1..d} with |T| = n (ordered lexicographically), and

    d(x e_T) = sum_{i not in T} (-1)^{#{j in T : j < i}} g_i x e_(T+i).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .complexes import FreeComplex, PresentedModule, cohomology
from .complexes import matrices as mx
from .errors import HypothesisViolated, RingMismatch
from .rings.base import Ring


@dataclass(frozen=True)
class KoszulSpec:
    base: Ring
    elements: tuple

    def __post_init__(self):
        if len(self.elements) < 1:
            raise ValueError("need at least one element")


def koszul_basis(d: int, n: int) -> list[tuple]:
    """Degree-n basis subsets in the order the iterated tensor produces."""
    if n < 0 or n > d:
        return []
    if d == 0:
        return [()] if n == 0 else []
    with_last = [t + (d,) for t in koszul_basis(d - 1, n - 1)]
    without = koszul_basis(d - 1, n)
    return with_last + without


def koszul_sign(T: tuple, i: int) -> int:
    """Sign of g_i e_(T+i) in d(e_T); independent of basis ordering."""
    return -1 if sum(1 for j in T if j < i) % 2 else 1


def build_koszul(spec: KoszulSpec) -> FreeComplex:
    """K(g_1, ..., g_d) as the iterated tensor of the two-term complexes."""
    base = spec.base
    acc = FreeComplex.from_matrix(base, [[spec.elements[0]]])
    for g in spec.elements[1:]:
        acc = acc.tensor(FreeComplex.from_matrix(base, [[g]]))
    return acc


def build_koszul_subsets(spec: KoszulSpec) -> FreeComplex:
    """Independent construction from the subset basis; must equal the tensor
    form matrix-for-matrix (used as a cross-check in the tests)."""
    base = spec.base
    d = len(spec.elements)
    ranks = [comb(d, n) for n in range(d + 1)]
    diffs = []
    for n in range(d):
        src = koszul_basis(d, n)
        tgt = koszul_basis(d, n + 1)
        tgt_index = {T: a for a, T in enumerate(tgt)}
        m = mx.zero_matrix(base, len(tgt), len(src))
        for b, T in enumerate(src):
            for i in range(1, d + 1):
                if i in T:
                    continue
                T2 = tuple(sorted(T + (i,)))
                sign = koszul_sign(T, i)
                entry = spec.elements[i - 1]
                if sign < 0:
                    entry = base.neg(entry)
                a = tgt_index[T2]
                m[a][b] = base.add(m[a][b], entry)
        diffs.append(m)
    return FreeComplex(base, 0, ranks, diffs)


def koszul_cohomology_closed_form(spec: KoszulSpec, g, n: int) -> PresentedModule:
    """H^n(K(g_1..g_d)) = Ann(g)^C(d-1,n) + (R/g)^C(d-1,n-1), valid whenever
    g divides every g_i and some g_i divides g."""
    base = spec.base
    d = len(spec.elements)
    for gi in spec.elements:
        try:
            base.divide_exact(gi, g)
        except Exception as exc:  # noqa: BLE001 - any division failure is a violation
            raise HypothesisViolated(f"g does not divide {gi}: {exc}") from exc
    ok = False
    for gi in spec.elements:
        try:
            base.divide_exact(g, gi)
            ok = True
            break
        except Exception:  # noqa: BLE001
            continue
    if not ok:
        raise HypothesisViolated("no g_i divides g")
    ann = _annihilator_module(base, g)
    quo = _quotient_module(base, g)
    if n < 0 or n > d:
        return PresentedModule(base.descriptor(), 0)
    return _module_power(ann, comb(d - 1, n)) + _module_power(quo, comb(d - 1, n - 1) if n >= 1 else 0)


def _annihilator_module(base: Ring, g) -> PresentedModule:
    """R[g] = Ann_R(g) in normal form, computed by solving g*x = 0."""
    c = FreeComplex.from_matrix(base, [[g]])
    return cohomology(c, 0)


def _quotient_module(base: Ring, g) -> PresentedModule:
    c = FreeComplex.from_matrix(base, [[g]])
    return cohomology(c, 1)


def _module_power(m: PresentedModule, k: int) -> "PresentedModule":
    return PresentedModule(m.base, m.free_rank * k, tuple(sorted(m.torsion * k, key=_torsion_key)))


def _torsion_key(t):
    return repr(t)


def _module_sum(a: PresentedModule, b: PresentedModule) -> PresentedModule:
    assert a.base == b.base
    return PresentedModule(
        a.base, a.free_rank + b.free_rank, tuple(sorted(a.torsion + b.torsion, key=_torsion_key))
    )


# allow `+` on PresentedModule for readability above
PresentedModule.__add__ = _module_sum  # type: ignore[attr-defined]


def normalized(m: PresentedModule) -> PresentedModule:
    """Sort torsion factors so direct sums compare literally."""
    return PresentedModule(m.base, m.free_rank, tuple(sorted(m.torsion, key=_torsion_key)))


@dataclass(frozen=True)
class WeightVector:
    """(k_1, ..., k_d) with k_i = a_i / p^L in [0, 1)."""

    entries: tuple

    @classmethod
    def make(cls, entries):
        return cls(tuple(Fraction(e) for e in entries))

    def __iter__(self):
        return iter(self.entries)


def enumerate_weights(p: int, depth: int, d: int):
    """All of (p^-depth * Z intersect [0,1))^d in lexicographic order."""
    line = [Fraction(a, p ** depth) for a in range(p ** depth)]
    out = [()]
    for _ in range(d):
        out = [w + (k,) for w in out for k in line]
    return [WeightVector(w) for w in out]


def group_cohomology_model(base: Ring, d: int, weights, action_scalars) -> list:
    """One Koszul complex per weight: the rank-d lattice acting on each
    weight line through the given per-coordinate scalars gamma_i - 1."""
    out = []
    for w, scalars in zip(weights, action_scalars):
        if len(scalars) != d:
            raise RingMismatch("need one scalar per coordinate")
        spec = KoszulSpec(base, tuple(scalars))
        out.append((w, build_koszul(spec)))
    return out
