"""Exact integer/rational arithmetic primitives.

Dedekind sums are computed by two independent routes: the direct
sawtooth-correlation sum (O(p)) and the negative-continued-fraction
formula (O(log p)).  Both are exact; the pair doubles as a correctness
witness.  No floating point is used anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

# Exact rationals are plain fractions.Fraction values: always reduced,
# positive denominator, structural equality.
Rational = Fraction

# Direct summation switches to a pure-Python loop above this modulus so
# the int64 vectorized path can never overflow (sums are bounded by p^3).
_NUMPY_LIMIT = 1 << 20


@dataclass(frozen=True)
class Slope:
    """A reduced surgery coefficient p/q with q > 0, or (1, 0) for infinity."""

    p: int
    q: int

    def __post_init__(self):
        if self.q < 0 or (self.q == 0 and self.p != 1):
            raise ValueError("Slope must be canonical: q > 0 or (p,q)=(1,0)")
        if gcd(abs(self.p), self.q) != 1:
            raise ValueError(f"Slope {self.p}/{self.q} is not reduced")

    @property
    def is_infinity(self) -> bool:
        return self.q == 0

    def __str__(self) -> str:
        if self.is_infinity:
            return "inf"
        return f"{self.p}/{self.q}" if self.q != 1 else str(self.p)


@dataclass(frozen=True)
class NegContFrac:
    """Negative continued fraction [a_1, ..., a_n], all a_i >= 2."""

    terms: tuple[int, ...]

    def __post_init__(self):
        if any(a < 2 for a in self.terms):
            raise ValueError("negative continued fraction terms must be >= 2")

    def evaluate(self) -> Fraction:
        """Evaluate a_1 - 1/(a_2 - 1/(... - 1/a_n))."""
        value = Fraction(self.terms[-1])
        for a in reversed(self.terms[:-1]):
            value = a - 1 / value
        return value


def reduce_slope(p: int, q: int) -> Slope:
    """Reduce (p, q) to a canonical Slope; q = 0 yields the infinity slope."""
    if p == 0 and q == 0:
        raise ValueError("slope (0, 0) is not defined")
    if q == 0:
        return Slope(1, 0)
    g = gcd(abs(p), abs(q))
    p, q = p // g, q // g
    if q < 0:
        p, q = -p, -q
    return Slope(p, q)


def sawtooth(x) -> Fraction:
    """The sawtooth ((x)): x - [x] - 1/2 off the integers, 0 on them."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - (x.numerator // x.denominator) - Fraction(1, 2)


def dedekind_sum(q: int, p: int) -> Fraction:
    """Dedekind sum s(q, p) by direct summation.

    s(q,p) = sign(p) * sum_{k=1}^{|p|-1} ((k/p))((kq/p)).  q is reduced
    mod |p| first (the sum is periodic in q), so negative q is fine.
    """
    if p == 0:
        raise ValueError("p must be nonzero")
    sign = 1 if p > 0 else -1
    p = abs(p)
    if gcd(p, q % p if p > 1 else 1) != 1 and gcd(p, q) != 1:
        raise ValueError(f"dedekind_sum requires gcd(p, q) = 1, got ({q}, {p})")
    q = q % p if p > 1 else 0
    if p == 1:
        return Fraction(0)
    # With gcd(q,p)=1 no summand vanishes and k -> kq mod p is a permutation,
    # so the sum collapses to (4*sum k*(kq mod p) - p^2(p-1)) / (4 p^2).
    if p < _NUMPY_LIMIT:
        k = np.arange(1, p, dtype=np.int64)
        total = int(np.dot(k, (k * q) % p))
    else:
        total = sum(k * (k * q % p) for k in range(1, p))
    return sign * Fraction(4 * total - p * p * (p - 1), 4 * p * p)


def neg_cont_frac(p: int, q: int) -> NegContFrac:
    """Negative continued fraction expansion p/q = [a_1, ..., a_n], a_i >= 2."""
    if not (p > q >= 1):
        raise ValueError(f"neg_cont_frac requires p > q >= 1, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise ValueError(f"neg_cont_frac requires gcd(p, q) = 1, got ({p}, {q})")
    terms = []
    while q > 0:
        a = -(-p // q)  # ceil(p/q)
        terms.append(a)
        p, q = q, a * q - p
    return NegContFrac(tuple(terms))


def mod_inverse(q: int, p: int) -> int:
    """The unique 0 < q' <= p with q*q' = 1 (mod p); returns p when p = 1."""
    if p < 1:
        raise ValueError("p must be >= 1")
    if gcd(p, q) != 1:
        raise ValueError(f"mod_inverse requires gcd(p, q) = 1, got ({q}, {p})")
    inv = pow(q, -1, p)
    return inv if inv != 0 else p


def dedekind_sum_cf(q: int, p: int) -> Fraction:
    """Dedekind sum s(q, p) via the negative-continued-fraction formula.

    s(q,p) = (q/p + q'/p + sum_i (a_i - 3)) / 12 with q q' = 1 (mod p),
    0 < q' < p and p/q = [a_1, ..., a_n].  Requires 0 < q < p.
    """
    if not (0 < q < p):
        raise ValueError(f"dedekind_sum_cf requires 0 < q < p, got ({q}, {p})")
    if gcd(p, q) != 1:
        raise ValueError(f"dedekind_sum_cf requires gcd(p, q) = 1, got ({q}, {p})")
    qp = mod_inverse(q, p)
    cf = neg_cont_frac(p, q)
    return (Fraction(q, p) + Fraction(qp, p) + sum(a - 3 for a in cf.terms)) / 12


def is_cosmetic_residue(p: int, q: int) -> bool:
    """True iff q^2 = -1 (mod p)."""
    if p < 1:
        raise ValueError("p must be >= 1")
    if gcd(p, q) != 1:
        raise ValueError(f"requires gcd(p, q) = 1, got ({p}, {q})")
    return (q * q + 1) % p == 0
