"""Casson-Walker and total Casson-Gordon invariants of knot surgeries.

Both invariants are computed through their surgery formulas:

    lambda(S^3_{p/q}(K)) = lambda(L(p,q)) + (q / 2p) * Delta_K''(1)
    tau(S^3_{p/q}(K))    = tau(L(p,q)) - sigma(K, p)

with the normalization lambda(S^3_{+1}(right trefoil)) = 1; every lambda
value is relative to that convention.  Only knots in S^3 are exposed
(lambda(S^3) = 0 is folded into the formula).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import Rational, Slope
from .knots import KnotData, second_derivative_at_one, sigma_total
from .lens import LensSpace, lambda_lens_signed, tau_lens


@dataclass(frozen=True)
class SurgeryPresentation:
    """A knot in S^3 together with a finite surgery slope."""

    knot: KnotData
    slope: Slope

    def __post_init__(self):
        if self.slope.is_infinity:
            raise ValueError("surgery slope must be finite")


def casson_walker(s: SurgeryPresentation) -> Rational:
    """lambda(S^3_{p/q}(K)), exact.

    Requires p != 0 (the surgered manifold must be a rational homology
    sphere).  The slope sign rides on p; oddness of the Dedekind sum
    gives lambda(L(p,-q)) = -lambda(L(p,q)) automatically.
    """
    p, q = s.slope.p, s.slope.q
    if p == 0:
        raise ValueError("0-surgery is not a rational homology sphere")
    dd = second_derivative_at_one(s.knot.alexander)
    return lambda_lens_signed(p, q) + Fraction(q, 2 * p) * dd


def casson_gordon(s: SurgeryPresentation) -> Rational:
    """tau(S^3_{p/q}(K)) = tau(L(p,q)) - sigma(K, p), exact.

    Requires p >= 1 and a Seifert matrix on the record (sigma is a sum
    of generalized signatures at p-th roots of unity); near-singular
    eigenvalue failures propagate.
    """
    p, q = s.slope.p, s.slope.q
    if p < 1:
        raise ValueError("casson_gordon requires p >= 1")
    if s.knot.seifert is None:
        raise ValueError(f"{s.knot.name}: Seifert matrix required for sigma(K, p)")
    return tau_lens(LensSpace(p, q % p if p > 1 else 0)) - sigma_total(s.knot.seifert, p)


def rustamov_identity_check(
    lam: Rational,
    d_list: list[Rational],
    chi_list: list[int],
    h1_order: int,
) -> bool:
    """True iff h1_order * lam = sum_i (chi_i - d_i / 2), exactly.

    The lists run over the Spin^c structures of a rational homology
    sphere with |H_1| = h1_order.
    """
    if h1_order < 1:
        raise ValueError("h1_order must be a positive integer")
    if len(d_list) != h1_order or len(chi_list) != h1_order:
        raise ValueError("d_list and chi_list must both have length h1_order")
    rhs = sum(Fraction(chi) - Fraction(d) / 2 for chi, d in zip(chi_list, d_list))
    return h1_order * Fraction(lam) == rhs
