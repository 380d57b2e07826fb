"""Verification suites for the perfectoid-model identities.

Each suite verifies a family of exact identities among mu, xi, xi_r, the
comparison maps and the divisibility structure, and returns a Report.
"""

from __future__ import annotations

import random

from ..errors import NotDivisible
from ..report import Report
from ..witt import WittVector, witt_divide_exact
from .symbolic import SymbolicRing
from .theta import CyclotomicTarget, theta_r, theta_tilde_r
from .tilt import PerfectoidElements, make_elements


def elements_suite(p: int, depth: int, s: int, r_max: int, seed: int = 0) -> Report:
    rep = Report("perfectoid-elements", {"p": p, "N": depth, "s": s, "r": r_max, "seed": seed})
    pe = make_elements(p, depth, s)
    mu = pe.mu()
    for r in range(1, r_max + 1):
        lhs = mu
        rhs = pe.xi_r(r) * mu.phi(-r)
        rep.check(
            f"elements/mu-factorization-r{r}",
            f"mu = xi_{r} * phi^(-{r})(mu)",
            lhs.sym == rhs.sym and lhs.value == rhs.value,
        )
        lhs2 = mu.phi(r)
        rhs2 = pe.xi_tilde_r(r) * mu
        rep.check(
            f"elements/phi-mu-r{r}",
            f"phi^{r}(mu) = xi~_{r} * mu",
            lhs2.sym == rhs2.sym and lhs2.value == rhs2.value,
        )
        # xi_r = xi phi^-1(xi) ... phi^-(r-1)(xi), both sides independently
        prod = pe.one()
        for i in range(r):
            prod = prod * pe.xi().phi(-i)
        rep.check(
            f"elements/xi-r-product-r{r}",
            f"xi_{r} = xi * phi^-1(xi) * ... * phi^-({r - 1})(xi)",
            prod.sym == pe.xi_r(r).sym and prod.value == pe.xi_r(r).value,
        )
    # mu is a non-zero-divisor: witt_divide_exact(mu*u, mu) = u on random u
    rng = random.Random(seed)
    ok = True
    muw = mu.witt()
    for _ in range(8):
        u = WittVector(pe.wring, pe.wring.random_element(rng, 2))
        if witt_divide_exact(u * muw, muw) != u:
            ok = False
            break
    rep.check("elements/mu-nzd", "mu * u = mu * v forces u = v (sampled)", ok)
    # xi is distinguished: its second Witt component is a unit
    if s >= 2:
        xi1 = pe.xi().value[1]
        rep.check(
            "elements/xi-distinguished",
            "the second Witt component of xi is a unit of the localized model",
            pe.wring.base.is_unit(xi1),
        )
    return rep


def theta_suite(p: int, depth: int, s: int, r_max: int, level: int, M: int) -> Report:
    rep = Report(
        "perfectoid-theta", {"p": p, "N": depth, "s": s, "r": r_max, "level": level, "M": M}
    )
    pe = make_elements(p, depth, s)
    target = CyclotomicTarget(p, level, M)
    for r in range(1, r_max + 1):
        w = target.witt(r)
        # theta~_r(mu) = [zeta_{p^r}] - 1
        got = theta_tilde_r(pe.mu(), target, r)
        expect = target.teichmuller_zeta(r, r) - WittVector(w, w.one)
        rep.check(
            f"theta/mu-r{r}", f"theta~_{r}(mu) = [zeta_{{p^{r}}}] - 1", got == expect
        )
        # theta~_r(xi~_r) = 0
        got = theta_tilde_r(pe.xi_tilde_r(r), target, r)
        rep.check(
            f"theta/xi-tilde-kernel-r{r}",
            f"theta~_{r}(xi~_{r}) = 0",
            got == WittVector(w, w.zero),
        )
        # theta~_r(c) = c on integers
        from .symbolic import sym_const

        got = theta_tilde_r(pe.element(sym_const(7)), target, r)
        rep.check(
            f"theta/integers-r{r}", f"theta~_{r} fixes integer constants", got == WittVector(w, w.from_int(7))
        )
        # compatibility: theta~_r(phi(x)) = F(theta~_{r+1}(x)) on Teichmullers
        if r < r_max:
            ok = True
            for k in (1, p, 1 + p):
                from fractions import Fraction

                x = pe.teichmuller(Fraction(k, p ** min(depth, 1)))
                lhs = theta_tilde_r(x, target, r + 1).frobenius()
                rhs = theta_tilde_r(x, target, r)
                if lhs != rhs:
                    ok = False
            rep.check(
                f"theta/F-compat-r{r}",
                f"F o theta~_{r + 1} = theta~_{r} on Teichmuller generators",
                ok,
            )
    return rep


def ghost_theta_checks(p: int, r: int, M: int, depth: int | None = None, s: int | None = None) -> Report:
    """gh(theta_r(xi)) = (0, p, ..., p), via gh o theta_r = (theta, theta phi, ...)."""
    depth = depth if depth is not None else max(1, r)
    s = s if s is not None else r + 1
    rep = Report("perfectoid-ghost", {"p": p, "r": r, "M": M})
    pe = make_elements(p, depth, s)
    target = CyclotomicTarget(p, max(r, 1), M)
    tr = theta_r(pe.xi(), target, r)
    gh = tr.ghost()
    cy = target.ring
    expect = [cy.zero] + [cy.from_int(p)] * (r - 1)
    rep.check(
        "ghost/theta-r-xi",
        f"gh(theta_{r}(xi)) = (0, {p}, ..., {p})",
        gh == expect,
    )
    # theta phi^i (xi) = p for i >= 1, theta(xi) = 0
    t1 = CyclotomicTarget(p, 1, M)
    v0 = theta_r(pe.xi(), t1, 1)
    rep.check("ghost/theta-xi", "theta(xi) = 0", v0 == WittVector(v0.ring, v0.ring.zero))
    ok = True
    for i in range(1, min(3, depth + 1)):
        vi = theta_r(pe.xi().phi(i), t1, 1)
        if vi != WittVector(vi.ring, vi.ring.from_int(p)):
            ok = False
    rep.check("ghost/theta-phi-xi", "theta(phi^i(xi)) = p for i >= 1", ok)
    return rep


def divisibility_suite(p: int, r: int, M: int, depth: int = 2, s: int = 2, seed: int = 0) -> Report:
    rep = Report("perfectoid-divisibility", {"p": p, "r": r, "M": M, "seed": seed})
    target = CyclotomicTarget(p, r, M)
    w = target.witt(r)
    zm1 = target.teichmuller_zeta(r, r) - WittVector(w, w.one)
    pr = WittVector(w, w.from_int(p ** r))
    try:
        q = witt_divide_exact(pr, zm1)
        ok = (zm1 * q) == pr
    except NotDivisible:
        ok = False
    rep.check(
        "div/zeta-divides-pr",
        f"[zeta_{{p^{r}}}] - 1 divides p^{r} in W_{r}",
        ok,
    )
    power = zm1 ** (p ** r - 1)
    pw = WittVector(w, w.from_int(p))
    try:
        q2 = witt_divide_exact(power, pw)
        ok2 = (pw * q2) == power
    except NotDivisible:
        ok2 = False
    rep.check(
        "div/p-divides-power",
        f"p divides ([zeta_{{p^{r}}}] - 1)^{p ** r - 1} in W_{r}",
        ok2,
    )
    # tilt side: [eps^k] - 1 divides [eps^k'] - 1 iff v_p(k) <= v_p(k')
    pe = make_elements(p, depth, s)
    from fractions import Fraction

    samples = [Fraction(1), Fraction(1, p), Fraction(1, p ** depth), Fraction(p), Fraction(1 + p, p)]
    ok3 = True
    for k in samples:
        for k2 in samples:
            a = pe.eps_minus_one(k2).witt()
            b = pe.eps_minus_one(k).witt()
            divisible = True
            try:
                qq = witt_divide_exact(a, b)
                divisible = (b * qq) == a
            except NotDivisible:
                divisible = False
            vk = _vp(k, p)
            vk2 = _vp(k2, p)
            if divisible != (vk <= vk2):
                ok3 = False
                rep.check(
                    f"div/eps-{k}-{k2}",
                    f"[eps^{k}]-1 | [eps^{k2}]-1 iff v_p({k}) <= v_p({k2})",
                    False,
                    divisible=divisible,
                )
    rep.check(
        "div/eps-valuation-pattern",
        "[eps^k]-1 divides [eps^k']-1 exactly when v_p(k) <= v_p(k')",
        ok3,
    )
    return rep


def _vp(k, p: int) -> int:
    if k == 0:
        return 10 ** 9
    v = 0
    num, den = k.numerator, k.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v
