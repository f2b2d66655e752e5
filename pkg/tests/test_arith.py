from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from surgerygate.arith import (
    NegContFrac,
    Slope,
    dedekind_sum,
    dedekind_sum_cf,
    is_cosmetic_residue,
    mod_inverse,
    neg_cont_frac,
    reduce_slope,
    sawtooth,
)


def test_sawtooth_values():
    assert sawtooth(Fraction(1, 2)) == 0
    assert sawtooth(3) == 0
    assert sawtooth(Fraction(1, 4)) == Fraction(-1, 4)
    assert sawtooth(Fraction(-1, 4)) == Fraction(1, 4)
    assert sawtooth(Fraction(7, 3)) == sawtooth(Fraction(1, 3))


def test_dedekind_small_values():
    assert dedekind_sum(1, 2) == 0
    assert dedekind_sum(1, 3) == Fraction(1, 18)
    assert dedekind_sum(2, 5) == 0
    assert dedekind_sum(1, 5) == Fraction(1, 5)
    # periodicity in q and oddness in q
    assert dedekind_sum(7, 5) == dedekind_sum(2, 5)
    assert dedekind_sum(-2, 5) == -dedekind_sum(2, 5)
    # sign(p) convention
    assert dedekind_sum(1, -3) == -Fraction(1, 18)


def test_dedekind_reciprocity():
    # s(q,p) + s(p,q) = -1/4 + (p/q + q/p + 1/(pq)) / 12
    for p in range(2, 40):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            lhs = dedekind_sum(q, p) + dedekind_sum(p, q)
            rhs = Fraction(-1, 4) + (
                Fraction(p, q) + Fraction(q, p) + Fraction(1, p * q)
            ) / 12
            assert lhs == rhs, (p, q)


def test_neg_cont_frac_examples():
    assert neg_cont_frac(7, 5).terms == (2, 2, 3)
    assert neg_cont_frac(3, 1).terms == (3,)
    assert neg_cont_frac(5, 4).terms == (2, 2, 2, 2)
    with pytest.raises(ValueError):
        neg_cont_frac(4, 2)
    with pytest.raises(ValueError):
        neg_cont_frac(3, 3)


def test_neg_cont_frac_round_trip():
    for p in range(2, 60):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            cf = neg_cont_frac(p, q)
            assert all(a >= 2 for a in cf.terms)
            assert cf.evaluate() == Fraction(p, q)


def test_neg_cont_frac_term_validation():
    with pytest.raises(ValueError):
        NegContFrac((2, 1, 3))


def test_mod_inverse():
    assert mod_inverse(3, 7) == 5
    assert mod_inverse(1, 1) == 1  # the q' = p convention at p = 1
    assert mod_inverse(4, 5) == 4
    with pytest.raises(ValueError):
        mod_inverse(2, 4)


def test_two_routes_agree_sample():
    for p in range(2, 80):
        for q in range(1, p):
            if gcd(p, q) == 1:
                assert dedekind_sum(q, p) == dedekind_sum_cf(q, p), (q, p)


@given(st.integers(2, 3000), st.integers(1, 3000))
def test_two_routes_agree_hypothesis(p, q):
    q %= p
    if q == 0 or gcd(p, q) != 1:
        return
    assert dedekind_sum(q, p) == dedekind_sum_cf(q, p)


def test_slope_canonicalization():
    assert reduce_slope(4, 6) == Slope(2, 3)
    assert reduce_slope(-4, 6) == Slope(-2, 3)
    assert reduce_slope(4, -6) == Slope(-2, 3)
    assert reduce_slope(3, 0) == Slope(1, 0)
    assert reduce_slope(1, 0).is_infinity
    assert str(Slope(5, 2)) == "5/2"
    assert str(Slope(-3, 1)) == "-3"
    with pytest.raises(ValueError):
        Slope(2, 4)
    with pytest.raises(ValueError):
        reduce_slope(0, 0)


def test_cosmetic_residue():
    assert is_cosmetic_residue(1, 7)  # vacuous mod 1
    assert is_cosmetic_residue(2, 1)
    assert is_cosmetic_residue(5, 2)
    assert is_cosmetic_residue(13, 5)
    assert not is_cosmetic_residue(5, 1)
    assert not any(is_cosmetic_residue(3, q) for q in (1, 2, 4, 5))
    with pytest.raises(ValueError):
        is_cosmetic_residue(4, 2)
