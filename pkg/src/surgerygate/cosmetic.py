"""Purely-cosmetic-surgery obstruction pipeline.

A purely cosmetic pair of surgeries on a nontrivial knot forces, in
order: tau(K) = 0; Delta_K''(1) = 0; V_0 = H_0 = 0 (on both
orientations); the slopes to be p/q and -p/q with q^2 = -1 (mod p);
the d-invariants of the two surgeries to agree with the lens-space
values (up to the orientation sign); and the total Euler characteristic
of HF_red of the candidate surgery to vanish.  Each necessary condition
is run as a check with recorded witnesses; the first failure decides the
verdict.  "NotObstructed" means only that every implemented obstruction
passes, never that a cosmetic pair exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .arith import Slope, is_cosmetic_residue
from .cone import d_surgery, d_surgery_signed, euler_char_red
from .knots import KnotData, second_derivative_at_one
from .lens import d_lens_signed

PASSED, FAILED, SKIPPED = "passed", "failed", "skipped"


@dataclass(frozen=True)
class SlopePair:
    """The candidate slope pair (p/q, -p/q); requires q^2 = -1 (mod p)."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise ValueError("SlopePair requires positive p and q")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"SlopePair ({self.p},{self.q}) is not reduced")
        if not is_cosmetic_residue(self.p, self.q):
            raise ValueError(
                f"SlopePair ({self.p},{self.q}) fails q^2 = -1 (mod p)"
            )

    @property
    def positive(self) -> Slope:
        return Slope(self.p, self.q)

    @property
    def negative(self) -> Slope:
        return Slope(-self.p, self.q)


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # passed / failed / skipped
    witness: str


@dataclass(frozen=True)
class NuGateRecord:
    """Consistency of declared tau with the V_0 = 0 => nu <= 0 => tau <= 0 chain."""

    applied: bool
    consistent: bool
    detail: str


@dataclass(frozen=True)
class CosmeticReport:
    knot_name: str
    verdict: str  # Obstructed / NotObstructed / Indeterminate
    reason: str | None
    candidates: tuple[SlopePair, ...]
    missing_inputs: tuple[str, ...]
    checks: tuple[CheckResult, ...]
    nu: NuGateRecord

    def __post_init__(self):
        if self.verdict == "Obstructed" and self.reason is None:
            raise ValueError("Obstructed verdict requires a witness reason")
        if (self.verdict == "NotObstructed") != bool(self.candidates):
            raise ValueError("candidates nonempty iff verdict NotObstructed")


def enumerate_candidate_pairs(p_max: int, q_max: int) -> list[SlopePair]:
    """All reduced (p, q) within bounds with q^2 = -1 (mod p), sorted.

    p = 1 pairs are included (the residue condition is vacuous mod 1).
    """
    if p_max < 1 or q_max < 1:
        raise ValueError("bounds must be >= 1")
    return [
        SlopePair(p, q)
        for p in range(1, p_max + 1)
        for q in range(1, q_max + 1)
        if gcd(p, q) == 1 and is_cosmetic_residue(p, q)
    ]


def nu_gate(K: KnotData) -> NuGateRecord:
    """If V_0 = 0 then nu(K) <= 0, and nu in {tau, tau+1} forces tau <= 0."""
    if K.vh.V(0) != 0:
        return NuGateRecord(False, True, f"skipped: V_0 = {K.vh.V(0)} != 0")
    if K.tau > 0:
        return NuGateRecord(
            True,
            False,
            f"V_0 = 0 forces tau <= 0 but record declares tau = {K.tau}",
        )
    return NuGateRecord(True, True, f"V_0 = 0 and tau = {K.tau} <= 0")


def _is_unknot(K: KnotData) -> bool:
    return (
        K.vh.genus == 0
        and K.vh.V(0) == 0
        and not K.reduced
        and K.alexander.coeffs == (1,)
    )


def _multiset_witness(name: str, got, want) -> str:
    got, want = sorted(got), sorted(want)
    for a, b in zip(got, want):
        if a != b:
            return f"{name}: multiset mismatch, {a} vs {b}"
    return f"{name}: multiset mismatch (sizes {len(got)} vs {len(want)})"


def check_knot(K: KnotData, p_max: int, q_max: int) -> CosmeticReport:
    """Run the obstruction pipeline on one knot record.

    The unknot is rejected (the pipeline's hypotheses assume a nontrivial
    knot).  All checks are run and recorded; the verdict comes from the
    first failure.  If nothing fails but an orientation-dependent check
    had to be skipped for missing inputs, the verdict is Indeterminate.
    """
    if _is_unknot(K):
        raise ValueError("cosmetic gate requires a nontrivial knot")
    checks: list[CheckResult] = []
    missing: list[str] = []

    def record(name: str, ok: bool, witness: str):
        checks.append(CheckResult(name, PASSED if ok else FAILED, witness))

    def skip(name: str, witness: str, needs: str):
        checks.append(CheckResult(name, SKIPPED, witness))
        if needs not in missing:
            missing.append(needs)

    record("tau-vanishing", K.tau == 0, f"tau(K) = {K.tau}")
    dd = second_derivative_at_one(K.alexander)
    record("alexander-second-derivative", dd == 0, f"Delta''(1) = {dd}")
    v0 = K.vh.V(0)
    record("v0-vanishing", v0 == 0, f"V_0 = {v0}")
    if K.mirror_vh is not None:
        mv0 = K.mirror_vh.V(0)
        record("mirror-v0-vanishing", mv0 == 0, f"mirror V_0 = {mv0}")
    else:
        skip("mirror-v0-vanishing", "mirror_vh not supplied", "mirror_vh")

    pairs = enumerate_candidate_pairs(p_max, q_max)
    for pair in pairs:
        p, q = pair.p, pair.q
        lens_ds = [d_lens_signed(p, q, i) for i in range(p)]
        pos_ds = [d_surgery(K, p, q, i) for i in range(p)]
        name = f"d-match({p}/{q})"
        if sorted(pos_ds) == sorted(lens_ds):
            record(name, True, "d(S^3_{p/q}(K)) = d(L(p,q)) as multisets")
        else:
            record(name, False, _multiset_witness(name, pos_ds, lens_ds))
        neg_ds = [d_surgery_signed(K, pair.negative, i) for i in range(p)]
        name = f"d-match(-{p}/{q})"
        if any(d is None for d in neg_ds):
            skip(name, "mirror V-data needed for negative slopes", "mirror_vh")
        elif sorted(neg_ds) == sorted(-d for d in lens_ds):
            record(name, True, "d(S^3_{-p/q}(K)) = -d(L(p,q)) as multisets")
        else:
            record(
                name,
                False,
                _multiset_witness(name, neg_ds, [-d for d in lens_ds]),
            )
        if v0 == 0:
            chi = sum(euler_char_red(K, pair.positive, i) for i in range(p))
            record(
                f"euler-sum({p}/{q})",
                chi == 0,
                f"sum_i chi(HF_red(S^3_{{{p}/{q}}}(K), i)) = {chi}",
            )
        else:
            skip(
                f"euler-sum({p}/{q})",
                "chi test requires V_0 = 0",
                "v0-vanishing",
            )

    nu = nu_gate(K)
    failure = next((c for c in checks if c.status == FAILED), None)
    if failure is not None:
        verdict, reason, cands = "Obstructed", f"{failure.name}: {failure.witness}", ()
    elif missing:
        verdict, reason, cands = "Indeterminate", None, ()
    else:
        verdict, reason, cands = "NotObstructed", None, tuple(pairs)
    return CosmeticReport(
        knot_name=K.name,
        verdict=verdict,
        reason=reason,
        candidates=cands,
        missing_inputs=tuple(missing),
        checks=tuple(checks),
        nu=nu,
    )
