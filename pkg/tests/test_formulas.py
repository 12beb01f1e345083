from fractions import Fraction

import pytest

from braidchar.algebras import PFB_DUAL, PVB_DUAL
from braidchar.characters import (cf_tail, decompose, multiplicity_alternating,
                                  multiplicity_trivial)
from braidchar.combinatorics import Partition, lah, partitions, stirling2
from braidchar.formulas import (char_formula, char_pfb, char_pvb,
                                char_pvb_substitution, constraint_checks,
                                decompose_formula, decompose_pfb,
                                decompose_pvb, hilbert,
                                no_repeated_odd_count, stability_report,
                                trivial_multiplicity_pvb)
from braidchar.oracle import degree_class_function, graded_character
from braidchar.symfunc import characteristic, to_schur


def P(*parts):
    return Partition(parts)


def ident(n):
    return P(*([1] * n))


# --- Hilbert series ---------------------------------------------------------

def test_hilbert_examples():
    assert hilbert(PVB_DUAL, 4).coeffs == (1, 12, 36, 24)
    assert hilbert(PFB_DUAL, 3).coeffs == (1, 3, 1)
    assert hilbert(PVB_DUAL, 1).coeffs == (1,)
    assert hilbert(PFB_DUAL, 4).coeffs == (1, 6, 7, 1)


# --- character formulas -------------------------------------------------------

def test_char_pvb_examples():
    assert char_pvb(2, P(2)).coeffs == (1, 0)
    assert char_pvb(4, P(2, 2)).coeffs == (1, 0, -4, 0)
    assert char_pvb(4, ident(4)).coeffs == (1, 12, 36, 24)


def test_char_pfb_examples():
    assert char_pfb(2, P(2)).coeffs == (1, -1)
    assert char_pfb(4, P(2, 2)).coeffs == (1, -2, -1, 1)
    for n in range(2, 7):
        assert char_pfb(n, ident(n)).coeffs == \
            tuple(stirling2(n, n - k) for k in range(n))


def test_char_at_identity_equals_hilbert():
    for algebra in (PVB_DUAL, PFB_DUAL):
        for n in range(1, 9):
            assert char_formula(algebra, n, ident(n)).coeffs == hilbert(algebra, n).coeffs


def test_char_pvb_substitution_form_agrees():
    for n in range(1, 7):
        for mu in partitions(n):
            assert char_pvb(n, mu).coeffs == char_pvb_substitution(n, mu).coeffs


def test_formula_matches_oracle_small():
    for n in range(1, 5):
        for mu in partitions(n):
            assert char_pvb(n, mu).coeffs == graded_character(PVB_DUAL, n, mu).coeffs
            assert char_pfb(n, mu).coeffs == graded_character(PFB_DUAL, n, mu).coeffs


def test_graded_character_invariants():
    for algebra in (PVB_DUAL, PFB_DUAL):
        for n in range(1, 7):
            dims = hilbert(algebra, n).coeffs
            for mu in partitions(n):
                gc = char_formula(algebra, n, mu)
                assert gc.coeffs[0] == 1
                assert all(abs(c) <= d for c, d in zip(gc.coeffs, dims))


# --- decomposition tables --------------------------------------------------------

def test_decompose_pvb_printed_tables():
    for n in range(4, 8):
        table = {cf_tail(lam): m for lam, m in decompose_pvb(n, 1).entries}
        assert table == {(): 1, (1,): 2, (1, 1): 1, (2,): 1}
    assert {cf_tail(lam): m for lam, m in decompose_pvb(3, 1).entries} == \
        {(): 1, (1,): 2, (1, 1): 1}
    assert {cf_tail(lam): m for lam, m in decompose_pvb(2, 1).entries} == \
        {(): 1, (1,): 1}


def test_decompose_pfb_printed_tables():
    assert decompose_pfb(2, 1).as_dict() == {P(1, 1): 1}
    for n in range(3, 8):
        table = {cf_tail(lam): m for lam, m in decompose_pfb(n, 1).entries}
        assert table == {(1,): 1, (1, 1): 1}


def test_decompose_degree_zero_is_trivial_module():
    for algebra in (PVB_DUAL, PFB_DUAL):
        for n in range(1, 6):
            assert decompose_formula(algebra, n, 0).as_dict() == {P(n): 1}


def test_decompose_matches_oracle_decomposition():
    for algebra in (PVB_DUAL, PFB_DUAL):
        for n in range(1, 6):
            for k in range(n):
                table = decompose_formula(algebra, n, k).as_dict()
                mults = decompose(degree_class_function(algebra, n, k))
                assert mults == {lam: Fraction(m) for lam, m in table.items()}


def test_frobenius_bridge():
    # decomposing a class function and expanding its characteristic in the
    # Schur basis must agree multiplicity for multiplicity
    for algebra in (PVB_DUAL, PFB_DUAL):
        for n in range(1, 7):
            for k in range(n):
                f = degree_class_function(algebra, n, k)
                assert decompose(f) == to_schur(characteristic(f))


def test_decompose_range_validation():
    with pytest.raises(ValueError):
        decompose_formula(PVB_DUAL, 3, 3)
    with pytest.raises(ValueError):
        decompose_formula(PFB_DUAL, 3, -1)


# --- multiplicity counts -----------------------------------------------------------

def test_trivial_multiplicity_pvb_examples():
    for n in range(2, 8):
        assert trivial_multiplicity_pvb(n, 1) == 1
    for n in range(4, 8):
        assert trivial_multiplicity_pvb(n, 2) == 1
    # decisive value: partitions of 4 with no repeated odd part are
    # {4}, {3,1}, {2,2}, all with at most 3 parts
    assert trivial_multiplicity_pvb(7, 4) == 3
    assert no_repeated_odd_count(4) == 3


def test_trivial_multiplicity_matches_oracle():
    for n in range(2, 7):
        for k in range(1, n):
            got = multiplicity_trivial(degree_class_function(PVB_DUAL, n, k))
            assert got == trivial_multiplicity_pvb(n, k), (n, k)


def test_trivial_multiplicity_decisive_oracle_check():
    got = multiplicity_trivial(degree_class_function(PVB_DUAL, 7, 4))
    assert got == 3


def test_partition_bijection_both_sides():
    # adding one to every part and padding with ones turns restricted
    # partitions of k into length n-k partitions of n without repeated evens
    for n in range(2, 10):
        for k in range(1, n):
            left = len(partitions(k, max_length=n - k, no_repeated_odd=True))
            right = len(partitions(n, exact_length=n - k, no_repeated_even=True))
            assert left == right, (n, k)


def test_pfb_trivial_multiplicity_vanishes():
    for n in range(2, 7):
        for k in range(1, n):
            assert multiplicity_trivial(degree_class_function(PFB_DUAL, n, k)) == 0


def test_alternating_multiplicities_agree_and_vanish():
    for n in range(2, 7):
        for k in range(1, n):
            alt_v = multiplicity_alternating(degree_class_function(PVB_DUAL, n, k))
            alt_f = multiplicity_alternating(degree_class_function(PFB_DUAL, n, k))
            assert alt_v == alt_f, (n, k)
            if n >= 2 * (k + 1):
                assert alt_v == 0, (n, k)


# --- constraint checks ---------------------------------------------------------------

def test_constraint_checks_examples():
    assert constraint_checks(5, 2).ok
    rep = constraint_checks(4, 1)
    assert rep.ok
    assert rep.two_row == ((P(3, 1), 1),)
    rep = constraint_checks(6, 3)
    assert rep.ok
    assert not rep.small_tail


def test_constraint_checks_sweep():
    for n in range(2, 7):
        for k in range(1, n):
            assert constraint_checks(n, k).ok, (n, k)


# --- stability -------------------------------------------------------------------------

def test_stability_pvb_degree_one():
    rep = stability_report(PVB_DUAL, 1, range(2, 9))
    assert rep.stable_from == 4
    assert rep.stable_from_bound
    assert rep.trajectories[(1,)] == {2: 1, 3: 2, 4: 2, 5: 2, 6: 2, 7: 2, 8: 2}
    # the V(2) label is undefined below n=4
    assert rep.trajectories[(2,)] == {2: None, 3: None, 4: 1, 5: 1, 6: 1, 7: 1, 8: 1}


def test_stability_pfb_degree_one():
    rep = stability_report(PFB_DUAL, 1, range(2, 9))
    assert rep.stable_from == 3
    assert rep.stable_from_bound


def test_stability_json_shape():
    rep = stability_report(PFB_DUAL, 1, range(2, 5))
    doc = rep.to_json_dict()
    assert doc["k"] == 1
    assert doc["stable_from"] == 3
    assert doc["trajectory"]["V(1)"]["3"] == 1


def test_stability_range_validation():
    with pytest.raises(ValueError):
        stability_report(PVB_DUAL, 2, [2, 3])
