import random
from fractions import Fraction

import pytest

from braidchar.algebras import PFB_DUAL, PVB_DUAL
from braidchar.combinatorics import Partition, partitions
from braidchar.koszul import (TruncatedSeries, dual_character, invert,
                              verify_identity)


def P(*parts):
    return Partition(parts)


def test_invert_examples():
    geo2 = invert(TruncatedSeries.from_polynomial([1, -2], 6))
    assert geo2.coeffs == tuple(Fraction(2 ** k) for k in range(7))
    ones = invert(TruncatedSeries.from_polynomial([1, -1], 6))
    assert ones.coeffs == tuple(Fraction(1) for _ in range(7))
    assert invert(TruncatedSeries.from_polynomial([1], 4)) == TruncatedSeries.one(4)


def test_invert_rejects_zero_constant_term():
    with pytest.raises(ZeroDivisionError):
        invert(TruncatedSeries.from_polynomial([0, 1], 3))


def test_invert_is_an_involution_on_random_series():
    rng = random.Random(5150)
    for _ in range(25):
        coeffs = [Fraction(1)] + [Fraction(rng.randint(-4, 4), rng.randint(1, 4))
                                  for _ in range(8)]
        s = TruncatedSeries(coeffs)
        assert invert(invert(s)) == s
        assert s * invert(s) == TruncatedSeries.one(8)


def test_series_multiplication_truncates():
    a = TruncatedSeries.from_polynomial([1, 1], 3)
    b = TruncatedSeries.from_polynomial([1, -1], 5)
    assert (a * b).coeffs == (1, 0, -1, 0)


def test_dual_character_degenerate_cases():
    free = dual_character(PVB_DUAL, 2, P(1, 1), 6)
    assert free.coeffs == tuple(Fraction(2 ** k) for k in range(7))
    poly = dual_character(PFB_DUAL, 2, P(1, 1), 6)
    assert poly.coeffs == tuple(Fraction(1) for _ in range(7))
    # the transposition class of the two-strand chain algebra has the constant
    # graded character 1
    flat = dual_character(PVB_DUAL, 2, P(2), 6)
    assert flat.coeffs == (1, 0, 0, 0, 0, 0, 0)


def test_dual_character_pfb3_identity_class():
    got = dual_character(PFB_DUAL, 3, P(1, 1, 1), 5)
    assert got.coeffs == (1, 3, 8, 21, 55, 144)


def test_identity_sweep():
    for algebra in (PVB_DUAL, PFB_DUAL):
        for n in range(1, 6):
            for mu in partitions(n):
                ok, residual = verify_identity(algebra, n, mu, 12)
                assert ok and residual is None, (algebra, n, mu)


def test_identity_class_series_are_graded_dimensions():
    for algebra in (PVB_DUAL, PFB_DUAL):
        for n in range(1, 7):
            ident = dual_character(algebra, n, P(*([1] * n)), 10)
            assert all(c.denominator == 1 and c >= 0 for c in ident.coeffs)
            for mu in partitions(n):
                s = dual_character(algebra, n, mu, 10)
                assert all(abs(c) <= d for c, d in zip(s.coeffs, ident.coeffs))


def test_json_serialization_keeps_exact_values():
    s = invert(TruncatedSeries.from_polynomial([1, Fraction(1, 3)], 3))
    assert s.to_json_list() == ["1", "-1/3", "1/9", "-1/27"]
