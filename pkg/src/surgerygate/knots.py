"""Knot input data model.

Holds the data the surgery formulas consume: the symmetric Alexander
polynomial, an optional Seifert matrix (for generalized signatures), the
V/H tower-shift profile, the reduced summands of the knot complexes, and
the tau bookkeeping.  Nothing here is derived from diagrams; records are
ingested and validated.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import mpmath


class NearSingularError(ArithmeticError):
    """An eigenvalue sign could not be certified at the maximum precision."""


@dataclass(frozen=True)
class AlexanderPoly:
    """Symmetric normalization: Delta(t) = a_0 + sum_{k>=1} a_k (t^k + t^-k)."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(a) for a in self.coeffs))
        if not self.coeffs:
            raise ValueError("empty coefficient list")
        if self.coeffs[0] + 2 * sum(self.coeffs[1:]) != 1:
            raise ValueError("normalization: Delta(1) must equal 1")
        if len(self.coeffs) > 1 and self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self) -> str:
        parts = [str(self.coeffs[0])]
        for k, a in enumerate(self.coeffs[1:], start=1):
            if a:
                parts.append(f"{a:+d}*(t^{k}+t^-{k})")
        return " ".join(parts)


@dataclass(frozen=True)
class SeifertMatrix:
    """A square integer matrix; even size is not required at the type level."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        if any(len(row) != len(rows) for row in rows):
            raise ValueError("Seifert matrix must be square")
        object.__setattr__(self, "entries", rows)

    @property
    def size(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class VHProfile:
    """The tower-shift sequences V_k (and H_k = V_{-k}) of a knot.

    v_pos stores V_0..V_g.  v_neg optionally stores V_{-1}..V_{-g};
    when omitted the negative side defaults to V_{-k} = V_k + k, the
    extension forced by symmetry of the knot complex (it makes the
    v/h maps simultaneously homogeneous in the mapping cone).  Beyond
    the stored range: V_k = 0 for k >= g and V_k grows by unit steps
    for k < -g.
    """

    genus: int
    v_pos: tuple[int, ...]
    v_neg: tuple[int, ...] | None = None
    declared_h: tuple[int, ...] | None = None  # optional H_0..H_g, diagnostics only

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus bound must be non-negative")
        if len(self.v_pos) != self.genus + 1:
            raise ValueError("v_pos must list V_0..V_g")
        if self.v_neg is not None and len(self.v_neg) != self.genus:
            raise ValueError("v_neg must list V_-1..V_-g")
        object.__setattr__(self, "v_pos", tuple(int(v) for v in self.v_pos))
        if self.v_neg is not None:
            object.__setattr__(self, "v_neg", tuple(int(v) for v in self.v_neg))

    def V(self, k: int) -> int:
        g = self.genus
        if k > g:
            return 0
        if k >= 0:
            return self.v_pos[k]
        if k >= -g:
            if self.v_neg is not None:
                return self.v_neg[-k - 1]
            return self.v_pos[-k] + (-k)
        # monotone unit-step tail below -g
        return self.V(-g) + (-g - k)

    def H(self, k: int) -> int:
        return self.V(-k)


@dataclass(frozen=True)
class ReducedSummand:
    """One reduced summand A_{k,red}: rank and generator gradings.

    local_gradings are relative to the bottom of the tower of A_k.  By
    default the generators carry trivial U-action and map to zero under
    v/h; v_flags/h_flags may mark generators whose image is the
    grading-compatible tower element instead.
    """

    k: int
    rank: int
    local_gradings: tuple[int, ...]
    v_flags: tuple[bool, ...] | None = None
    h_flags: tuple[bool, ...] | None = None

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be positive")
        if len(self.local_gradings) != self.rank:
            raise ValueError("one local grading per generator")
        for flags in (self.v_flags, self.h_flags):
            if flags is not None and len(flags) != self.rank:
                raise ValueError("one flag per generator")


@dataclass(frozen=True)
class KnotData:
    name: str
    alexander: AlexanderPoly
    tau: int
    vh: VHProfile
    reduced: tuple[ReducedSummand, ...] = ()
    seifert: SeifertMatrix | None = None
    mirror_vh: VHProfile | None = None

    def __post_init__(self):
        ranks = {s.k: s.rank for s in self.reduced}
        if len(ranks) != len(self.reduced):
            raise ValueError("duplicate reduced summand index")
        for k, r in ranks.items():
            if ranks.get(-k, 0) != r:
                raise ValueError(f"reduced ranks must satisfy rank({k}) = rank({-k})")
        if self.seifert is not None:
            derived = alexander_from_seifert(self.seifert)
            if derived != self.alexander:
                raise ValueError(
                    f"Seifert matrix of {self.name} yields {derived}, "
                    f"record declares {self.alexander}"
                )

    def summand(self, k: int) -> ReducedSummand | None:
        for s in self.reduced:
            if s.k == k:
                return s
        return None

    @property
    def reduced_total_rank(self) -> int:
        return sum(s.rank for s in self.reduced)


# ---------------------------------------------------------------------------
# Alexander polynomial operations


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_det(mat: list[list[list[int]]]) -> list[int]:
    """Determinant of a matrix of integer polynomials (cofactor expansion)."""
    n = len(mat)
    if n == 0:
        return [1]
    if n == 1:
        return mat[0][0]
    acc: list[int] = [0]
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
        term = _poly_mul(mat[0][j], _poly_det(minor))
        if j % 2:
            term = [-c for c in term]
        width = max(len(acc), len(term))
        acc = [
            (acc[i] if i < len(acc) else 0) + (term[i] if i < len(term) else 0)
            for i in range(width)
        ]
    return acc


def alexander_from_seifert(A: SeifertMatrix) -> AlexanderPoly:
    """Delta(t) = det(t^(1/2) A - t^(-1/2) A^T), normalized so Delta(1) = 1."""
    n = A.size
    if n == 0:
        return AlexanderPoly((1,))
    # det(tA - A^T) as a polynomial, then recenter by t^(-n/2)
    mat = [
        [[-A.entries[j][i], A.entries[i][j]] for j in range(n)] for i in range(n)
    ]
    det = _poly_det(mat)
    det += [0] * (n + 1 - len(det))
    at_one = sum(det)
    if n % 2 != 0 or abs(at_one) != 1:
        raise ValueError("not a valid Seifert matrix: cannot normalize Delta(1) = 1")
    half = n // 2
    sym = [at_one * c for c in det]  # epsilon = det(A - A^T) = +-1
    for k in range(1, half + 1):
        if sym[half + k] != sym[half - k]:
            raise ValueError("not a valid Seifert matrix: asymmetric determinant")
    coeffs = sym[half:]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return AlexanderPoly(tuple(coeffs))


def second_derivative_at_one(delta: AlexanderPoly) -> int:
    """Delta''(1) = 2 sum_{k>=1} k^2 a_k, computed symbolically."""
    return 2 * sum(k * k * a for k, a in enumerate(delta.coeffs) if k >= 1)


def torsion_coefficients(delta: AlexanderPoly) -> list[int]:
    """t_k = sum_{j>=1} j * a_{k+j} for k = 0..g-1."""
    g = delta.degree
    a = delta.coeffs
    return [sum(j * a[k + j] for j in range(1, g - k + 1)) for k in range(g)]


def vh_from_lspace_knot(delta: AlexanderPoly) -> VHProfile:
    """V profile of an L-space knot with this Alexander polynomial.

    Uses V_k = t_k for k >= 0.  Rejects polynomials whose torsion
    coefficients are negative or increasing (not an L-space knot).
    This is a convenience constructor, not a general rule.
    """
    t = torsion_coefficients(delta)
    if any(x < 0 for x in t):
        raise ValueError("torsion coefficients are negative: not an L-space knot")
    if any(t[i] < t[i + 1] for i in range(len(t) - 1)):
        raise ValueError("torsion coefficients increase: not an L-space knot")
    return VHProfile(genus=delta.degree, v_pos=tuple(t) + (0,))


def validate_vh(vh: VHProfile) -> list[str]:
    """Diagnostic check of a profile; returns violations (and warnings).

    Hard violations: V not non-increasing, V_g != 0, declared H values
    that break H_k = V_{-k}.  Step sizes outside {0, 1} only warn (that
    bound comes from outside the model implemented here).
    """
    out: list[str] = []
    g = vh.genus
    seq = [(k, vh.V(k)) for k in range(-g - 1, g + 2)]
    for (k0, v0), (_, v1) in zip(seq, seq[1:]):
        if v0 < v1:
            out.append(f"monotonicity: V_{k0} = {v0} < V_{k0 + 1} = {v1}")
        elif v0 - v1 > 1:
            out.append(f"warning: step V_{k0} - V_{k0 + 1} = {v0 - v1} not in {{0,1}}")
    if vh.V(g) != 0:
        out.append(f"vanishing tail: V_{g} = {vh.V(g)} != 0")
    if vh.declared_h is not None:
        for k, h in enumerate(vh.declared_h):
            if h != vh.V(-k):
                out.append(f"H_{k} != V_{-k}: declared {h}, profile has {vh.V(-k)}")
    return out


def vh_errors(vh: VHProfile) -> list[str]:
    return [v for v in validate_vh(vh) if not v.startswith("warning:")]


# ---------------------------------------------------------------------------
# Generalized signature function
#
# At xi = e^{2 pi i r / p} the Hermitian form (1-conj(xi))A + (1-xi)A^T is
# singular exactly when xi is a root of the Alexander polynomial.  The
# nullity there is certified exactly (linear algebra over the cyclotomic
# field Q(zeta_d)), the zero eigenvalues are discarded, and the signature
# is the sign count of the remaining certified-nonzero eigenvalues (the
# two-sided-limit average convention at jump points).

_DEFAULT_PREC = 128
_MAX_PREC = 1024


@lru_cache(maxsize=None)
def _cyclotomic(d: int) -> tuple[int, ...]:
    """Coefficients (low degree first) of the d-th cyclotomic polynomial."""
    poly = [-1] + [0] * (d - 1) + [1]  # x^d - 1
    for e in range(1, d):
        if d % e:
            continue
        div = list(_cyclotomic(e))
        # exact synthetic division (divisor is monic)
        out = [0] * (len(poly) - len(div) + 1)
        rem = poly[:]
        for i in range(len(out) - 1, -1, -1):
            out[i] = rem[i + len(div) - 1]
            for j, c in enumerate(div):
                rem[i + j] -= out[i] * c
        poly = out
    return tuple(poly)


def _pm_divmod(a: list[Fraction], b: list[Fraction]):
    """Polynomial division with remainder over Q (b nonzero)."""
    a = a[:]
    while a and a[-1] == 0:
        a.pop()
    db = len(b) - 1
    quo = [Fraction(0)] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        c = a[-1] / b[-1]
        quo[len(a) - 1 - db] = c
        for j in range(db + 1):
            a[len(a) - 1 - db + j] -= c * b[j]
        while a and a[-1] == 0:
            a.pop()
    return quo, a


def _pm_mul(a, b, phi):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    _, rem = _pm_divmod(out, phi)
    return rem


def _pm_inv(a, phi):
    """Inverse of a nonzero element of Q[y]/phi (phi irreducible)."""
    r0, r1 = [Fraction(c) for c in phi], a[:]
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while any(c != 0 for c in r1):
        q, r = _pm_divmod(r0, r1)
        s = [x for x in s0]
        prod = [Fraction(0)] * (len(q) + len(s1) - 1) if q and s1 else []
        for i, x in enumerate(q):
            for j, y in enumerate(s1):
                prod[i + j] += x * y
        width = max(len(s), len(prod), 1)
        s = [
            (s[i] if i < len(s) else 0) - (prod[i] if i < len(prod) else 0)
            for i in range(width)
        ]
        r0, r1, s0, s1 = r1, r, s1, s
    if len(r0) != 1:
        raise ZeroDivisionError("element not invertible")
    _, rem = _pm_divmod([c / r0[0] for c in s0], [Fraction(c) for c in phi])
    return rem


def _exact_nullity(A: SeifertMatrix, r: int, p: int) -> int:
    """Nullity of (1-conj(xi))A + (1-xi)A^T at xi = e^{2 pi i r / p}.

    Since |xi| = 1 and xi != 1 the form factors as a unit times
    A^T - conj(xi) A, whose rank over Q(zeta_d) (d the order of xi) is
    computed by exact Gaussian elimination; rank is Galois-invariant, so
    the abstract root y of the cyclotomic polynomial stands in for xi.
    """
    from math import gcd as _gcd

    n = A.size
    d = p // _gcd(r, p)
    phi = [Fraction(c) for c in _cyclotomic(d)]
    deg = len(phi) - 1

    def elem(c0: int, c1: int):
        # c0 + c1 * y reduced mod phi
        e = [Fraction(c0), Fraction(c1)][: max(1, min(2, deg + 1))]
        if deg == 1:  # y = -phi[0]/phi[1] is rational
            return [Fraction(c0) + Fraction(c1) * (-phi[0] / phi[1])]
        return e

    M = [
        [elem(A.entries[j][i], -A.entries[i][j]) for j in range(n)]
        for i in range(n)
    ]
    rank = 0
    for col in range(n):
        piv = next(
            (row for row in range(rank, n) if any(c != 0 for c in M[row][col])),
            None,
        )
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = _pm_inv(M[rank][col], phi)
        for row in range(rank + 1, n):
            if any(c != 0 for c in M[row][col]):
                factor = _pm_mul(M[row][col], inv, phi)
                for j in range(col, n):
                    prod = _pm_mul(factor, M[rank][j], phi)
                    width = max(len(M[row][j]), len(prod), 1)
                    M[row][j] = [
                        (M[row][j][k] if k < len(M[row][j]) else 0)
                        - (prod[k] if k < len(prod) else 0)
                        for k in range(width)
                    ]
        rank += 1
    return n - rank


def _start_precision() -> int:
    env = os.environ.get("SURGERY_GATE_PRECISION")
    if env:
        return max(16, int(env))
    return _DEFAULT_PREC


def signature_function(
    A: SeifertMatrix, r: int, p: int, start_prec: int | None = None
) -> int:
    """Signature of (1 - conj(xi)) A + (1 - xi) A^T at xi = exp(2 pi i r / p).

    Eigenvalues are computed in high-precision complex arithmetic; a sign
    pattern is accepted only when the number of eigenvalues below the
    certification threshold equals the exact nullity of the form (zero at
    non-roots of the Alexander polynomial) and the rest clear it.  The
    precision ladder doubles up to 1024 bits before raising
    NearSingularError.  At roots of the Alexander polynomial the exact
    zeros are discarded, giving the average of the one-sided signature
    limits.
    """
    if not 1 <= r <= p - 1:
        raise ValueError("requires 1 <= r <= p-1 (xi = 1 is excluded)")
    n = A.size
    if n == 0:
        return 0
    nullity = _exact_nullity(A, r, p)
    prec = start_prec if start_prec is not None else _start_precision()
    max_prec = max(_MAX_PREC, prec)
    while prec <= max_prec:
        with mpmath.workprec(prec):
            xi = mpmath.expjpi(mpmath.mpf(2 * r) / p)
            one = mpmath.mpf(1)
            M = mpmath.matrix(n, n)
            scale = mpmath.mpf(0)
            for i in range(n):
                for j in range(n):
                    val = (one - mpmath.conj(xi)) * A.entries[i][j] + (
                        one - xi
                    ) * A.entries[j][i]
                    M[i, j] = val
                    scale = max(scale, abs(val))
            eigs = mpmath.eighe(M, eigvals_only=True)
            tol = scale * n * n * mpmath.mpf(2) ** (8 - prec)
            if sum(1 for e in eigs if abs(e) <= tol) == nullity:
                return sum(1 if e > 0 else -1 for e in eigs if abs(e) > tol)
        prec *= 2
    raise NearSingularError(
        f"near-singular: eigenvalue sign at xi = exp(2*pi*i*{r}/{p}) "
        f"could not be certified up to {max_prec} bits"
    )


def sigma_total(A: SeifertMatrix, p: int, start_prec: int | None = None) -> int:
    """sigma(K, p) = sum_{r=1}^{p-1} sigma_K(e^{2 pi i r / p}); 0 for p = 1."""
    if p < 1:
        raise ValueError("p must be >= 1")
    return sum(signature_function(A, r, p, start_prec=start_prec) for r in range(1, p))
