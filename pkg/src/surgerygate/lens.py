"""Exact invariants of lens spaces L(p, q).

Correction terms d(L(p,q), i) come from the standard recursion

    d(p, q, i) = ((2i + 1 - p - q)^2 - pq) / (4pq) - d(q, p mod q, i mod q)

with d = 0 on S^3.  Its constants are pinned by testable anchors (the
sum identity sum_i d = p*s(q,p), orientation reversal, and the direct
unknot mapping-cone computation) rather than trusted blindly.  The
i-labeling produced here is the canonical one the mapping-cone engine
anchors its absolute gradings to; it is stable under q -> q mod p, so
surgery coefficients with q > p may be fed in directly.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import dedekind_sum

_memo: dict[tuple[int, int, int], Fraction] = {}
_memo_lock = threading.Lock()


@dataclass(frozen=True)
class LensSpace:
    """L(p, q) with p >= 1 and q canonicalized to [1, p) (0 for S^3)."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1:
            raise ValueError("p must be >= 1")
        if self.p == 1:
            object.__setattr__(self, "q", 0)
            return
        q = self.q % self.p
        if gcd(self.p, q) != 1:
            raise ValueError(f"L({self.p},{self.q}) requires gcd(p, q) = 1")
        object.__setattr__(self, "q", q)

    def __str__(self) -> str:
        return "S3" if self.p == 1 else f"L({self.p},{self.q})"


@dataclass(frozen=True)
class SpinCIndex:
    """Spin^c label i in [0, p-1]."""

    i: int

    def __post_init__(self):
        if self.i < 0:
            raise ValueError("Spin^c index must be >= 0")


def _d_rec(p: int, q: int, i: int) -> Fraction:
    """Recursion core; accepts any coprime p, q >= 1 and 0 <= i < p."""
    if p == 1:
        return Fraction(0)
    key = (p, q, i)
    with _memo_lock:
        hit = _memo.get(key)
    if hit is not None:
        return hit
    val = Fraction((2 * i + 1 - p - q) ** 2 - p * q, 4 * p * q) - _d_rec(
        q, p % q, i % q
    )
    with _memo_lock:
        _memo[key] = val
    return val


def d_lens(space: LensSpace, index: SpinCIndex | int) -> Fraction:
    """Correction term d(L(p,q), i), exact."""
    i = index.i if isinstance(index, SpinCIndex) else index
    if not 0 <= i < space.p:
        raise ValueError(f"index {i} out of range for p={space.p}")
    if space.p == 1:
        return Fraction(0)
    return _d_rec(space.p, space.q, i)


def d_lens_all(space: LensSpace) -> list[Fraction]:
    """The full vector (d(L(p,q), i))_{i=0..p-1}."""
    return [d_lens(space, i) for i in range(space.p)]


def d_lens_signed(p: int, q: int, i: int) -> Fraction:
    """d of the surgery S^3_{p/q}(unknot) in the surgery-formula labeling.

    p may be negative (L(p,q) = -L(-p,q) with the same Spin^c labels);
    q >= 1 need not be reduced mod p.
    """
    if p == 0 or q < 1:
        raise ValueError("requires p != 0 and q >= 1")
    if abs(p) == 1:
        return Fraction(0)
    if not 0 <= i < abs(p):
        raise ValueError(f"index {i} out of range for p={p}")
    if p > 0:
        return _d_rec(p, q, i)
    return -_d_rec(-p, q, i)


def lambda_lens(space: LensSpace) -> Fraction:
    """Casson-Walker invariant lambda(L(p,q)) = -s(q,p)/2."""
    if space.p == 1:
        return Fraction(0)
    return -dedekind_sum(space.q, space.p) / 2


def lambda_lens_signed(p: int, q: int) -> Fraction:
    """lambda(L(p,q)) for a signed surgery coefficient p/q (q >= 1)."""
    if p == 0:
        raise ValueError("p must be nonzero")
    value = lambda_lens(LensSpace(abs(p), q % abs(p) if abs(p) > 1 else 0))
    return value if p > 0 else -value


def tau_lens(space: LensSpace) -> Fraction:
    """Total Casson-Gordon invariant tau(L(p,q)) = -4p*s(q,p)."""
    if space.p == 1:
        return Fraction(0)
    return -4 * space.p * dedekind_sum(space.q, space.p)
