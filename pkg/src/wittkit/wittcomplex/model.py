"""The rank-d lattice group-cohomology model with its Frobenius.

D is the direct sum, over weights w in (Z[1/p])^d, of the twisted Koszul
complexes K([eps^(w_1)]-1, ..., [eps^(w_d)]-1) over the Witt ring of the
tilt model.  Cochains are stored symbolically (entries in the Teichmuller
group ring) because every structural map the construction needs is exact on
symbols:

    phi_D:        weight w -> p*w,   coefficients q^k -> q^(pk)
    mod xi~_r:    interpret at level r (nothing to do on symbols)
    Bockstein:    apply the Koszul differential, divide exactly by xi~_r
    R' = phi^-1:  weight w -> w/p,   coefficients q^k -> q^(k/p)
    R  = xi^n R'
    V  = multiply by phi^(r+1)(xi)

The cochain-level product is the twisted tensor product: for disjoint
T, T' and weights w, w',

    (x e_T)(y e_T') = sign(T, T') * (prod_{i in T} q^(w'_i)) * x y e_(T u T')

whose sign and twist make the Leibniz rule hold on the nose (checked in the
tests).  Truth of equalities "downstairs" (in W_r of the cyclotomic target)
is decided by the digit-lattice realization in downstairs.py.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import NotDivisible
from ..koszul import koszul_basis, koszul_sign
from ..perfectoid.symbolic import (
    SYM_ONE,
    SYM_ZERO,
    Sym,
    SymbolicRing,
    sym,
    sym_add,
    sym_divide,
    sym_mul,
    sym_neg,
    sym_q,
    sym_scale,
)


@dataclass(frozen=True)
class DGrpModel:
    p: int
    depth: int       # tilt depth budget N
    s: int           # Witt length of the coefficient ring upstairs
    d: int           # lattice rank
    L: int           # weight denominator budget

    def __post_init__(self):
        if self.L > self.depth:
            raise ValueError("weight depth L must not exceed the tilt depth budget N")

    @property
    def sring(self) -> SymbolicRing:
        return SymbolicRing(self.p)

    def scalars(self, weight: tuple) -> list[Sym]:
        """gamma_i - 1 on the weight line: q^(w_i) - 1."""
        return [sym([(Fraction(w), 1), (0, -1)]) for w in weight]

    def basis(self, n: int) -> list[tuple]:
        return koszul_basis(self.d, n)

    def rank(self, n: int) -> int:
        return len(self.basis(n))


@dataclass(frozen=True)
class ModelClass:
    """A degree-n cochain of the weight-w summand at level r, symbolically."""

    model: DGrpModel
    r: int
    weight: tuple        # Fractions, length d
    degree: int
    vec: tuple           # Sym entries, in koszul_basis order

    def __post_init__(self):
        assert len(self.vec) == self.model.rank(self.degree)

    def map_vec(self, fn) -> "ModelClass":
        return ModelClass(self.model, self.r, self.weight, self.degree, tuple(fn(x) for x in self.vec))

    def __add__(self, other: "ModelClass") -> "ModelClass":
        assert (self.r, self.weight, self.degree) == (other.r, other.weight, other.degree)
        return ModelClass(
            self.model, self.r, self.weight, self.degree,
            tuple(sym_add(a, b) for a, b in zip(self.vec, other.vec)),
        )

    def __neg__(self) -> "ModelClass":
        return self.map_vec(sym_neg)

    def __sub__(self, other: "ModelClass") -> "ModelClass":
        return self + (-other)

    def scale_sym(self, c: Sym) -> "ModelClass":
        return self.map_vec(lambda x: sym_mul(c, x))

    def scale_int(self, n: int) -> "ModelClass":
        return self.map_vec(lambda x: sym_scale(x, n))

    def is_sym_zero(self) -> bool:
        return all(not x for x in self.vec)


def zero_class(model: DGrpModel, r: int, weight: tuple, degree: int) -> ModelClass:
    return ModelClass(model, r, weight, degree, (SYM_ZERO,) * model.rank(degree))


def monomial_class(model: DGrpModel, r: int, weight: tuple, T: tuple, coeff: Sym) -> ModelClass:
    n = len(T)
    basis = model.basis(n)
    vec = [SYM_ZERO] * len(basis)
    vec[basis.index(tuple(sorted(T)))] = coeff
    return ModelClass(model, r, weight, n, tuple(vec))


def differential(x: ModelClass) -> ModelClass:
    """The Koszul differential of the weight summand (not yet the Bockstein)."""
    model = x.model
    n = x.degree
    src = model.basis(n)
    tgt = model.basis(n + 1)
    scal = model.scalars(x.weight)
    out = [SYM_ZERO] * len(tgt)
    for b, T in enumerate(src):
        xb = x.vec[b]
        if not xb:
            continue
        for i in range(1, model.d + 1):
            if i in T:
                continue
            T2 = tuple(sorted(T + (i,)))
            a = tgt.index(T2)
            term = sym_mul(scal[i - 1], xb)
            if koszul_sign(T, i) < 0:
                term = sym_neg(term)
            out[a] = sym_add(out[a], term)
    return ModelClass(model, x.r, x.weight, n + 1, tuple(out))


def bockstein(x: ModelClass) -> ModelClass:
    """Bock_{xi~_r}: apply d upstairs and divide exactly by xi~_r."""
    model = x.model
    xi_tilde = model.sring.xi_tilde_r(x.r)
    dx = differential(x)

    def div(entry: Sym) -> Sym:
        if not entry:
            return SYM_ZERO
        try:
            return sym_divide(entry, xi_tilde)
        except NotDivisible as exc:
            raise NotDivisible(
                "Bockstein lift is not divisible; the input was not a cocycle "
                f"mod xi~_{x.r} on symbols: {exc}"
            ) from exc

    return dx.map_vec(div)


def frobenius_map(x: ModelClass) -> ModelClass:
    """F: level r+1 -> r, induced by the canonical projection."""
    assert x.r >= 2
    return ModelClass(x.model, x.r - 1, x.weight, x.degree, x.vec)


def restriction_prime(x: ModelClass) -> ModelClass:
    """R' = phi_D^-1 tensor phi^-1: weight w/p, coefficients q^(k/p)."""
    assert x.r >= 2
    sring = x.model.sring
    new_weight = tuple(Fraction(w) / x.model.p for w in x.weight)
    return ModelClass(
        x.model, x.r - 1, new_weight, x.degree,
        tuple(sring.phi(v, -1) for v in x.vec),
    )


def restriction(x: ModelClass) -> ModelClass:
    """R = theta~_r(xi)^n R', realized upstairs as xi^n * R'."""
    rp = restriction_prime(x)
    xi = x.model.sring.xi()
    acc = SYM_ONE
    for _ in range(x.degree):
        acc = sym_mul(acc, xi)
    return rp.scale_sym(acc)


def verschiebung_map(x: ModelClass) -> ModelClass:
    """V: level r -> r+1, multiplication by phi^(r+1)(xi)."""
    sring = x.model.sring
    tw = sring.phi(sring.xi(), x.r + 1)
    return ModelClass(
        x.model, x.r + 1, x.weight, x.degree,
        tuple(sym_mul(tw, v) for v in x.vec),
    )


def phi_d(x: ModelClass) -> ModelClass:
    """The Frobenius of the model: weight p*w, coefficients phi."""
    sring = x.model.sring
    return ModelClass(
        x.model, x.r, tuple(Fraction(w) * x.model.p for w in x.weight), x.degree,
        tuple(sring.phi(v, 1) for v in x.vec),
    )


def product(x: ModelClass, y: ModelClass) -> ModelClass:
    """Twisted cup product; weights add."""
    assert x.r == y.r and x.model == y.model
    model = x.model
    n = x.degree + y.degree
    new_weight = tuple(Fraction(a) + Fraction(b) for a, b in zip(x.weight, y.weight))
    tgt = model.basis(n)
    out = [SYM_ZERO] * len(tgt)
    bx = model.basis(x.degree)
    by = model.basis(y.degree)
    for i, T in enumerate(bx):
        xv = x.vec[i]
        if not xv:
            continue
        for j, T2 in enumerate(by):
            yv = y.vec[j]
            if not yv:
                continue
            if set(T) & set(T2):
                continue
            union = tuple(sorted(T + T2))
            sign = _shuffle_sign(T, T2)
            twist = SYM_ONE
            for slot in T:
                twist = sym_mul(twist, sym_q(Fraction(y.weight[slot - 1])))
            term = sym_mul(twist, sym_mul(xv, yv))
            if sign < 0:
                term = sym_neg(term)
            a = tgt.index(union)
            out[a] = sym_add(out[a], term)
    return ModelClass(model, x.r, new_weight, n, tuple(out))


def _shuffle_sign(T: tuple, T2: tuple) -> int:
    inversions = sum(1 for i in T for j in T2 if i > j)
    return -1 if inversions % 2 else 1


def one_class(model: DGrpModel, r: int) -> ModelClass:
    return monomial_class(model, r, (Fraction(0),) * model.d, (), SYM_ONE)
