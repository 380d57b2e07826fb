"""Perfectoid model: distinguished elements, comparison maps, divisibility."""

from fractions import Fraction

import pytest

from wittkit.errors import NotDivisible, UnsupportedElement
from wittkit.perfectoid import (
    CyclotomicTarget,
    divisibility_suite,
    elements_suite,
    ghost_theta_checks,
    make_elements,
    theta_r,
    theta_suite,
    theta_tilde_r,
)
from wittkit.perfectoid.symbolic import (
    SymbolicRing,
    sym,
    sym_divide,
    sym_mul,
    sym_q,
)
from wittkit.witt import WittVector, witt_divide_exact


def test_symbolic_division():
    # (q - 1) / (q^(1/2) - 1) = q^(1/2) + 1
    a = sym([(1, 1), (0, -1)])
    b = sym([(Fraction(1, 2), 1), (0, -1)])
    q = sym_divide(a, b)
    assert q == sym([(Fraction(1, 2), 1), (0, 1)])
    assert sym_mul(b, q) == a
    with pytest.raises(NotDivisible):
        sym_divide(sym([(Fraction(1, 2), 1), (0, -1)]), a)
    # negative exponents
    a2 = sym([(-1, 1), (0, -1)])
    b2 = sym([(Fraction(-1, 2), 1), (0, -1)])
    q2 = sym_divide(a2, b2)
    assert sym_mul(b2, q2) == a2


def test_symbolic_phi_invertible():
    s = SymbolicRing(2)
    x = sym_q(Fraction(3, 4))
    assert s.phi(s.phi(x, 1), -1) == x
    assert s.phi(x, 2) == sym_q(3)


def test_mu_xi_identities_p2():
    pe = make_elements(2, 1, 2)
    mu = pe.mu()
    xi = pe.xi()
    # xi = [1] + [eps^(1/2)]
    assert xi.sym == sym([(0, 1), (Fraction(1, 2), 1)])
    assert (xi * mu.phi(-1)).value == mu.value
    # the evaluated components: phi^-1(mu) = [1 + t^(1/2)] - 1
    root = pe.wring.base.add(pe.wring.base.one, pe.wring.base.t_power(Fraction(1, 2)))
    mu_root = WittVector(pe.wring, pe.wring.teichmuller(root)) - WittVector(pe.wring, pe.wring.one)
    assert mu.phi(-1).witt() == mu_root
    # witt division recovers xi
    got = witt_divide_exact(mu.witt(), mu_root)
    assert got == xi.witt()


def test_mu_xi_identities_p3():
    pe = make_elements(3, 1, 2)
    xi = pe.xi()
    # xi mod V: 1 + (1+t^(1/3)) + (1+t^(1/3))^2 in the base
    base = pe.wring.base
    root = base.add(base.one, base.t_power(Fraction(1, 3)))
    expect0 = base.add(base.add(base.one, root), base.mul(root, root))
    assert xi.value[0] == expect0


def test_phi_mu_equals_xi_tilde_mu():
    for p in (2, 3):
        pe = make_elements(p, 2, 3)
        lhs = pe.mu().phi(1)
        rhs = pe.xi_tilde_r(1) * pe.mu()
        assert lhs.sym == rhs.sym
        assert lhs.value == rhs.value


def test_elements_suite():
    for p in (2, 3):
        rep = elements_suite(p, 3, 3, 2, seed=7)
        assert rep.passed, [r.id for r in rep.failures()]


def test_theta_tilde_mu():
    pe = make_elements(2, 2, 2)
    target = CyclotomicTarget(2, 2, 6)
    got = theta_tilde_r(pe.mu(), target, 1)
    w = target.witt(1)
    z2 = target.ring.zeta(1)
    expect = WittVector(w, w.teichmuller(z2)) - WittVector(w, w.one)
    assert got == expect


def test_theta_rejects_raw_witt_vectors():
    pe = make_elements(2, 1, 2)
    target = CyclotomicTarget(2, 1, 4)
    with pytest.raises(UnsupportedElement):
        theta_tilde_r(pe.mu().witt(), target, 1)


def test_theta_suite():
    for p in (2, 3):
        rep = theta_suite(p, 3, 3, 2, level=4, M=6)
        assert rep.passed, [r.to_json() for r in rep.failures()]


def test_ghost_theta():
    for p in (2, 3):
        rep = ghost_theta_checks(p, 2, 6)
        assert rep.passed, [r.to_json() for r in rep.failures()]


def test_divisibility_zeta2():
    # r=1, p=2: [zeta_2] - 1 = -2 divides 2 and vice versa
    target = CyclotomicTarget(2, 1, 6)
    w = target.witt(1)
    zm1 = target.teichmuller_zeta(1, 1) - WittVector(w, w.one)
    assert zm1 == WittVector(w, w.from_int(-2))
    rep = divisibility_suite(2, 1, 6)
    assert rep.passed, [r.to_json() for r in rep.failures()]


def test_divisibility_suites():
    for p, r in [(2, 2), (3, 2)]:
        rep = divisibility_suite(p, r, 6)
        assert rep.passed, [r.to_json() for r in rep.failures()]


def test_integral_cyclotomic_power_divisibility():
    # ([zeta_4] - 1)^3 is divisible by 2 in the integral cyclotomic ring
    from wittkit.rings import CyclotomicQuotient

    ring = CyclotomicQuotient(2, 2, None)
    z = ring.el(ring.zeta())
    power = (z - 1) ** 3
    q = ring.divide_exact(power.payload, ring.from_int(2))
    assert ring.mul(q, ring.from_int(2)) == power.payload
