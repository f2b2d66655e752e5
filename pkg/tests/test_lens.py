from fractions import Fraction
from math import gcd

import pytest

from surgerygate.arith import dedekind_sum
from surgerygate.lens import (
    LensSpace,
    SpinCIndex,
    d_lens,
    d_lens_all,
    d_lens_signed,
    lambda_lens,
    lambda_lens_signed,
    tau_lens,
)


def test_lens_space_canonicalization():
    assert LensSpace(5, 7).q == 2
    assert LensSpace(1, 3).q == 0
    assert str(LensSpace(1, 0)) == "S3"
    assert str(LensSpace(3, 1)) == "L(3,1)"
    with pytest.raises(ValueError):
        LensSpace(4, 2)
    with pytest.raises(ValueError):
        LensSpace(0, 1)


def test_d_small_lens_spaces():
    assert d_lens_all(LensSpace(2, 1)) == [Fraction(1, 4), Fraction(-1, 4)]
    assert d_lens_all(LensSpace(3, 1)) == [
        Fraction(1, 2),
        Fraction(-1, 6),
        Fraction(-1, 6),
    ]
    assert d_lens(LensSpace(1, 0), 0) == 0
    assert d_lens(LensSpace(7, 1), SpinCIndex(0)) == Fraction(3, 2)


def test_d_index_bounds():
    with pytest.raises(ValueError):
        d_lens(LensSpace(3, 1), 3)
    with pytest.raises(ValueError):
        d_lens_signed(0, 1, 0)


def test_d_sum_identity():
    # sum_i d(L(p,q), i) = p * s(q,p)
    for p in range(2, 25):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            assert sum(d_lens_all(LensSpace(p, q))) == p * dedekind_sum(q, p)


def test_d_signed_orientation_reversal():
    for p in range(2, 12):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            for i in range(p):
                assert d_lens_signed(-p, q, i) == -d_lens_signed(p, q, i)


def test_d_signed_accepts_unreduced_q():
    # the labeling is stable under q -> q mod p
    for p in range(2, 10):
        for q in range(1, 30):
            if gcd(p, q % p) != 1 or q % p == 0:
                continue
            for i in range(p):
                assert d_lens_signed(p, q, i) == d_lens_signed(p, q % p, i)


def test_lambda_lens_values():
    assert lambda_lens(LensSpace(3, 1)) == Fraction(-1, 36)
    assert lambda_lens(LensSpace(2, 1)) == 0
    assert lambda_lens(LensSpace(1, 0)) == 0
    assert lambda_lens_signed(-3, 1) == Fraction(1, 36)
    assert lambda_lens_signed(1, 5) == 0


def test_tau_lens_values():
    assert tau_lens(LensSpace(2, 1)) == 0
    assert tau_lens(LensSpace(3, 1)) == Fraction(-2, 3)
    assert tau_lens(LensSpace(1, 0)) == 0
