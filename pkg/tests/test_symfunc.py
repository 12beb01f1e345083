import random
from fractions import Fraction

import pytest

from braidchar.characters import ClassFunction
from braidchar.combinatorics import Partition, partitions
from braidchar.symfunc import (SymFunc, ch_regular, characteristic,
                               elementary, homogeneous, plethysm, power,
                               schur, schur_expansion_json, to_schur)


def P(*parts):
    return Partition(parts)


def test_newton_identities_degree_two():
    assert homogeneous(2).coeffs == {P(1, 1): Fraction(1, 2), P(2): Fraction(1, 2)}
    assert elementary(2).coeffs == {P(1, 1): Fraction(1, 2), P(2): Fraction(-1, 2)}


def test_schur_round_trip():
    for n in range(0, 7):
        for lam in partitions(n):
            assert to_schur(schur(lam)) == {lam: Fraction(1)}


def test_e_and_h_are_schur_hooks():
    for p in range(0, 6):
        assert elementary(p) == schur(P(*([1] * p)))
        assert homogeneous(p) == schur(P(p) if p else P())


def test_product_examples():
    assert to_schur(homogeneous(1) * homogeneous(1)) == {P(2): 1, P(1, 1): 1}
    assert to_schur(schur(P(2)) * homogeneous(2)) == {P(4): 1, P(3, 1): 1, P(2, 2): 1}
    assert to_schur(schur(P(1, 1)) * homogeneous(2)) == {P(3, 1): 1, P(2, 1, 1): 1}


def test_power_multiplication_merges_indices():
    got = power(P(2, 1)) * power(P(3))
    assert got.coeffs == {P(3, 2, 1): Fraction(1)}
    assert got.degree == 6


def test_plethysm_power_sum_rule():
    assert plethysm(power(P(2)), power(P(3))) == power(P(6))
    f = power(P(2, 1))
    assert plethysm(f, power(P(2))).coeffs == {P(4, 2): Fraction(1)}


def test_plethysm_e2_e2():
    assert to_schur(plethysm(elementary(2), elementary(2))) == {P(2, 1, 1): 1}


def test_plethysm_rejects_zero():
    with pytest.raises(ValueError):
        plethysm(elementary(2), SymFunc.zero(1))


def _random_symfunc(rng, degree):
    coeffs = {}
    for mu in partitions(degree):
        if rng.random() < 0.6:
            coeffs[mu] = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
    return SymFunc(degree, coeffs)


def test_plethysm_ring_laws():
    rng = random.Random(20240901)
    for _ in range(12):
        df, dg, dh = rng.randint(1, 3), rng.randint(1, 3), rng.randint(1, 2)
        f = _random_symfunc(rng, df)
        g = _random_symfunc(rng, dg)
        h = _random_symfunc(rng, dh)
        if not h.coeffs:
            h = power(P(*([1] * dh)))
        assert plethysm(f * g, h) == plethysm(f, h) * plethysm(g, h)
        if df == dg:
            assert plethysm(f + g, h) == plethysm(f, h) + plethysm(g, h)
        p1 = power(P(1))
        assert plethysm(f, p1) == f
        assert plethysm(p1, h) == h


def test_ch_regular():
    assert ch_regular(2) == power(P(1, 1))
    assert to_schur(ch_regular(2)) == {P(2): 1, P(1, 1): 1}
    assert to_schur(ch_regular(3)) == {P(3): 1, P(2, 1): 2, P(1, 1, 1): 1}
    from braidchar.characters import dimension
    for m in range(2, 7):
        mults = to_schur(ch_regular(m))
        assert all(mults[lam] == dimension(lam) for lam in mults)


def test_schur_positivity_of_eh_products():
    rng = random.Random(7)
    for _ in range(20):
        total = SymFunc.one()
        budget = 8
        while budget > 0 and rng.random() < 0.8:
            p = rng.randint(1, min(4, budget))
            factor = elementary(p) if rng.random() < 0.5 else homogeneous(p)
            total = total * factor
            budget -= p
        if total.degree == 0:
            continue
        for lam, c in to_schur(total).items():
            assert c.denominator == 1 and c > 0, (lam, c)


def test_plethysm_into_e_column_and_row_bounds():
    # terms of v_a[e_q] fit in at most a columns and at least q rows
    for a in range(1, 9):
        for q in range(2, 9):
            if a * q > 8:
                continue
            for outer in (elementary(a), homogeneous(a)):
                for lam in to_schur(plethysm(outer, elementary(q))):
                    assert lam[0] <= a, (a, q, lam)
                    assert len(lam) >= q, (a, q, lam)


def test_characteristic_of_regular_class_function():
    reg = ClassFunction(3, {P(1, 1, 1): 6})
    assert characteristic(reg) == ch_regular(3)


def test_symfunc_guards():
    with pytest.raises(ValueError):
        SymFunc(2, {P(1): 1})
    with pytest.raises(ValueError):
        elementary(2) + elementary(3)


def test_schur_expansion_json():
    f = schur(P(3, 1)) * 2 + schur(P(2, 2))
    assert schur_expansion_json(f) == {"3,1": "2", "2,2": "1"}
    half = schur(P(2)) * Fraction(1, 2)
    assert schur_expansion_json(half) == {"2": "1/2"}
