"""Koszul cohomology: closed form against the normal-form oracle."""

import random
from itertools import product
from math import comb

import pytest

from wittkit.complexes import cohomology
from wittkit.errors import HypothesisViolated
from wittkit.koszul import (
    KoszulSpec,
    build_koszul,
    enumerate_weights,
    group_cohomology_model,
    koszul_cohomology_closed_form,
    normalized,
)
from wittkit.rings import ZZ, ModularIntegers


def test_ranks_and_selfduality():
    for d in range(1, 5):
        k = build_koszul(KoszulSpec(ZZ, tuple(range(2, 2 + d))))
        assert k.ranks == [comb(d, n) for n in range(d + 1)]
        assert k.ranks == k.ranks[::-1]


def test_closed_form_k_2_4():
    spec = KoszulSpec(ZZ, (2, 4))
    k = build_koszul(spec)
    assert koszul_cohomology_closed_form(spec, 2, 0) == normalized(cohomology(k, 0))
    for n in (1, 2):
        cf = koszul_cohomology_closed_form(spec, 2, n)
        assert cf == normalized(cohomology(k, n))
        assert cf.torsion == (2,)


def test_closed_form_nonzerodivisor_single():
    spec = KoszulSpec(ZZ, (5,))
    assert koszul_cohomology_closed_form(spec, 5, 0).is_zero()
    cf = koszul_cohomology_closed_form(spec, 5, 1)
    assert cf.free_rank == 0 and cf.torsion == (5,)


def test_closed_form_over_z8():
    base = ModularIntegers(8)
    spec = KoszulSpec(base, (base.from_int(2), base.from_int(2)))
    k = build_koszul(spec)
    for n in range(3):
        cf = koszul_cohomology_closed_form(spec, base.from_int(2), n)
        assert cf == normalized(cohomology(k, n))


def test_closed_form_hypothesis_violated():
    spec = KoszulSpec(ZZ, (2, 3))
    with pytest.raises(HypothesisViolated):
        koszul_cohomology_closed_form(spec, 2, 1)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_closed_form_all_multiple_patterns(d):
    # all specs with g_i in {g, 2g, 4g}, at least one g_i = g, over Z with g = 2
    g = 2
    count = 0
    for gs in product((g, 2 * g, 4 * g), repeat=d):
        if g not in gs:
            continue
        spec = KoszulSpec(ZZ, gs)
        k = build_koszul(spec)
        for n in range(d + 1):
            assert koszul_cohomology_closed_form(spec, g, n) == normalized(cohomology(k, n))
        count += 1
    assert count == 3 ** d - 2 ** d


def test_permutation_invariance():
    rng = random.Random(41)
    for _ in range(10):
        gs = [2 * rng.randint(1, 4) for _ in range(3)]
        k1 = build_koszul(KoszulSpec(ZZ, tuple(gs)))
        rng.shuffle(gs)
        k2 = build_koszul(KoszulSpec(ZZ, tuple(gs)))
        for n in range(4):
            assert normalized(cohomology(k1, n)) == normalized(cohomology(k2, n))


def test_group_model_trivial_weight():
    weights = enumerate_weights(2, 0, 1)
    assert len(weights) == 1
    model = group_cohomology_model(ZZ, 1, weights, [(ZZ.zero,)])
    (w, cplx), = model
    assert cohomology(cplx, 0).free_rank == 1
    assert cohomology(cplx, 1).free_rank == 1


def test_group_model_weight_enumeration():
    ws = enumerate_weights(2, 1, 2)
    assert len(ws) == 4
    from fractions import Fraction

    assert ws[0].entries == (Fraction(0), Fraction(0))
    assert any(w.entries == (Fraction(1, 2), Fraction(1, 2)) for w in ws)


def test_group_model_d2_trivial_action_ranks():
    # all weights zero: H^n is free of rank C(2, n)
    model = group_cohomology_model(ZZ, 2, enumerate_weights(2, 0, 2), [(ZZ.zero, ZZ.zero)])
    (_, cplx), = model
    for n in range(3):
        assert cohomology(cplx, n).free_rank == comb(2, n)
