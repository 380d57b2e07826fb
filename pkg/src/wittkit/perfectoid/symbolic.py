"""The Teichmuller-generated subring, symbolically.

Elements of the infinitesimal period ring that the construction ever feeds
into the comparison maps are integer combinations of Teichmuller lifts
[eps^k], k in Z[1/p].  This module represents them as group-ring elements
sum c_k q^k (q a formal symbol for [eps]), where the Frobenius lift is
q^k -> q^(pk) and is invertible, products are exponent addition, and exact
division by a monic-in-top-exponent element is polynomial division.  The
comparison maps evaluate symbols:

    into the tilt:          q^k -> [(1 + t^(1/p^j))^a],  k = a / p^j
    through theta-tilde_r:  q^k -> [zeta^(k/p^r)]  in W_r of the target
    at the perfect residue: q^k -> 1

Depth and level budgets are enforced at evaluation time, never on symbols.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import DepthExhausted, LevelTooLow, NotDivisible, UnsupportedElement

Sym = tuple  # tuple[(Fraction exp, int coeff), ...] sorted by exponent


def sym(terms) -> Sym:
    acc: dict[Fraction, int] = {}
    for k, c in terms:
        k = Fraction(k)
        if c:
            acc[k] = acc.get(k, 0) + c
    return tuple(sorted((k, c) for k, c in acc.items() if c))


def sym_const(c: int) -> Sym:
    return sym([(Fraction(0), c)])


def sym_q(k) -> Sym:
    return sym([(Fraction(k), 1)])


SYM_ONE = sym_const(1)
SYM_ZERO: Sym = ()


def sym_add(a: Sym, b: Sym) -> Sym:
    return sym(list(a) + list(b))


def sym_neg(a: Sym) -> Sym:
    return tuple((k, -c) for k, c in a)


def sym_sub(a: Sym, b: Sym) -> Sym:
    return sym_add(a, sym_neg(b))


def sym_mul(a: Sym, b: Sym) -> Sym:
    out: dict[Fraction, int] = {}
    for k1, c1 in a:
        for k2, c2 in b:
            k = k1 + k2
            v = out.get(k, 0) + c1 * c2
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return tuple(sorted(out.items()))


def sym_scale(a: Sym, c: int) -> Sym:
    if c == 0:
        return ()
    return tuple((k, x * c) for k, x in a)


def sym_pow(a: Sym, n: int) -> Sym:
    acc = SYM_ONE
    base = a
    while n:
        if n & 1:
            acc = sym_mul(acc, base)
        base = sym_mul(base, base)
        n >>= 1
    return acc


def sym_divide(a: Sym, b: Sym) -> Sym:
    """Exact division when the divisor's top-exponent coefficient is a unit.

    Both are rescaled to a common integral exponent grid and divided as
    Laurent polynomials over Z; a nonzero remainder raises NotDivisible.
    """
    if not b:
        raise NotDivisible("division by zero symbol")
    if not a:
        return ()
    denom = 1
    for k, _ in list(a) + list(b):
        denom = _lcm(denom, k.denominator)
    shift = min(k for k, _ in list(a) + list(b))
    a_int = {int((k - shift) * denom): c for k, c in a}
    b_int = {int((k - shift) * denom): c for k, c in b}
    # normalize the divisor to start at exponent 0
    b_min = min(b_int)
    b_int = {k - b_min: c for k, c in b_int.items()}
    lead = max(b_int)
    if abs(b_int[lead]) != 1:
        raise NotDivisible("divisor is not monic in its top exponent")
    q: dict[int, int] = {}
    rem = dict(a_int)
    while rem:
        top = max(rem)
        if top < lead:
            raise NotDivisible("nonzero remainder in symbolic division")
        c, mod = divmod(rem[top], b_int[lead])
        if mod:
            raise NotDivisible("leading coefficient does not divide")
        pos = top - lead
        q[pos] = c
        for k2, c2 in b_int.items():
            kk = k2 + pos
            v = rem.get(kk, 0) - c * c2
            if v:
                rem[kk] = v
            else:
                rem.pop(kk, None)
    return sym([(Fraction(k - b_min, denom), c) for k, c in q.items()])


def _lcm(a: int, b: int) -> int:
    from math import gcd

    return a * b // gcd(a, b)


class SymbolicRing:
    """Prime-bound operations on the Teichmuller group ring."""

    def __init__(self, p: int):
        self.p = p

    def phi(self, a: Sym, times: int = 1) -> Sym:
        f = Fraction(self.p) ** times
        return tuple(sorted((k * f, c) for k, c in a))

    def mu(self) -> Sym:
        return sym([(1, 1), (0, -1)])

    def xi(self) -> Sym:
        return sym([(Fraction(i, self.p), 1) for i in range(self.p)])

    def xi_r(self, r: int) -> Sym:
        return sym([(Fraction(i, self.p ** r), 1) for i in range(self.p ** r)])

    def xi_tilde_r(self, r: int) -> Sym:
        return sym([(Fraction(i), 1) for i in range(self.p ** r)])

    def eps_power_minus_one(self, k) -> Sym:
        return sym([(Fraction(k), 1), (0, -1)])

    # -- evaluations -------------------------------------------------------------

    def eval_tilt(self, a: Sym, wring) -> tuple:
        """Evaluate in W_s of the localized fractional model."""
        base = wring.base
        acc = wring.zero
        for k, c in a:
            eps_k = self._eps_payload(base, Fraction(k))
            term = wring.teichmuller(eps_k)
            if c != 1:
                term = wring.mul(wring.from_int(c), term)
            acc = wring.add(acc, term)
        return acc

    def _eps_payload(self, base, k: Fraction):
        j = 0
        den = k.denominator
        while den > 1:
            if den % self.p:
                raise UnsupportedElement(f"exponent {k} is not p-power-fractional")
            den //= self.p
            j += 1
        if j > base.depth:
            raise DepthExhausted(f"eps^{k} needs depth {j} > budget {base.depth}")
        root = base.add(base.one, base.t_power(Fraction(1, self.p ** j)))
        a = k.numerator
        el = base.el(root) ** a
        return el.payload

    def eval_theta_tilde(self, a: Sym, target_wring, r: int) -> tuple:
        """theta-tilde_r: q^k -> [zeta^(k/p^r)] in W_r(cyclotomic target)."""
        cyclo = target_wring.base
        acc = target_wring.zero
        for k, c in a:
            kk = Fraction(k) / self.p ** r
            j = 0
            den = kk.denominator
            while den > 1:
                if den % self.p:
                    raise UnsupportedElement(f"exponent {k} is not p-power-fractional")
                den //= self.p
                j += 1
            if j > cyclo.level:
                raise LevelTooLow(
                    f"needs zeta of level {j}, target has level {cyclo.level}"
                )
            zeta = cyclo.el(cyclo.zeta(j)) ** kk.numerator
            term = target_wring.teichmuller(zeta.payload)
            if c != 1:
                term = target_wring.mul(target_wring.from_int(c), term)
            acc = target_wring.add(acc, term)
        return acc

    def eval_residue(self, a: Sym) -> int:
        """q -> 1: the image in the perfect-residue model W(kappa)."""
        return sum(c for _, c in a)
