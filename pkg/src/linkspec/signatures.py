"""Levine-Tristram signatures and nullities over the unit circle.

The hermitian pencil at xi = exp(2*pi*i*alpha) is
    H(xi) = (1-xi)*S + (-1)^(n+1)*(1-conj(xi))*S^T,
which is hermitian for n odd and anti-hermitian for n even; for n even we
work with i*H(xi) instead (a convention calibrated against the spectrum of
suspension singularities; see hvs.py).

Nullities are exact: the pencil degenerates at xi precisely at roots of the
Alexander polynomial (plus the constant contribution n0), and the rank drop
at a root of unity is computed over the cyclotomic field by companion-matrix
substitution.  Signatures are eigenvalue sign counts with the exact nullity
pinned, escalating working precision until the sign split is unambiguous.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np
import sympy
from sympy import QQ, Poly, cyclotomic_poly

from sympy.polys.matrices import DomainMatrix

from . import linalg
from .linalg import Inertia, split_by_known_nullity, t
from .roots import RootAngle, rational_points_between, unit_circle_roots
from .seifert import SeifertMatrix, alexander, n0 as seifert_n0


@dataclass(frozen=True)
class CirclePoint:
    """A point xi = exp(2*pi*i*alpha) on the unit circle, alpha in (0,1) exact."""

    alpha: Fraction

    def __post_init__(self):
        a = Fraction(self.alpha)
        object.__setattr__(self, "alpha", a)
        if not 0 < a < 1:
            raise ValueError("alpha must lie strictly between 0 and 1 (xi != 1)")

    @property
    def xi(self) -> complex:
        return complex(np.exp(2j * np.pi * float(self.alpha)))


@functools.lru_cache(maxsize=None)
def circle_roots(S: SeifertMatrix) -> tuple[RootAngle, ...]:
    """Unit-circle roots of the Alexander polynomial of S (shared, refinable)."""
    delta = alexander(S)
    if delta.degree() <= 0:
        return ()
    return tuple(unit_circle_roots(delta))


def hermitian_pencil(S: SeifertMatrix, p: CirclePoint) -> np.ndarray:
    """Numeric hermitian pencil at p; for n even the anti-hermitian pencil is
    multiplied by i (hermitianization convention)."""
    return _pencil_numeric(S, p.alpha, dps=None)


@functools.lru_cache(maxsize=None)
def _float_matrix(S: SeifertMatrix) -> np.ndarray:
    return np.array(S.entries, dtype=float).reshape(S.mu, S.mu)


def _pencil_numeric(S: SeifertMatrix, alpha: Fraction, dps: int | None):
    M = _float_matrix(S)
    sign = (-1) ** (S.n + 1)
    if dps is None:
        xi = np.exp(2j * np.pi * float(alpha))
        H = (1 - xi) * M + sign * (1 - np.conj(xi)) * M.T
        if S.n % 2 == 0:
            H = 1j * H
        return H
    with mpmath.workdps(dps):
        xi = mpmath.expjpi(2 * mpmath.mpf(alpha.numerator) / alpha.denominator)
        A = mpmath.matrix(S.mu, S.mu)
        for i in range(S.mu):
            for j in range(S.mu):
                v = (1 - xi) * S.entries[i][j] + sign * (1 - mpmath.conj(xi)) * S.entries[j][i]
                A[i, j] = v * mpmath.mpc(0, 1) if S.n % 2 == 0 else v
        return A


def lt_nullity(S: SeifertMatrix, p: CirclePoint) -> int:
    """Exact nullity of the pencil at p."""
    base = seifert_n0(S)
    rec = _root_record_at(S, p.alpha)
    if rec is None:
        return base
    # alpha is an exact root-of-unity angle: rank drop over the cyclotomic field
    return S.mu - _rank_at_root_of_unity(S, p.alpha)


def _root_record_at(S: SeifertMatrix, alpha: Fraction) -> RootAngle | None:
    for rec in circle_roots(S):
        if rec.is_exact:
            if rec.exact == alpha:
                return rec
        elif rec.contains(alpha):
            # a rational alpha can never equal an irrational root: refine it out
            eps = (rec.hi - rec.lo) / 4
            while rec.contains(alpha):
                rec.refine(eps)
                eps /= 4
    return None


def _rank_at_root_of_unity(S: SeifertMatrix, alpha: Fraction) -> int:
    """Exact rank of xi*S + eps*S^T at xi = exp(2*pi*i*alpha), alpha = k/m,
    via substitution of the companion matrix of the m-th cyclotomic polynomial."""
    m = alpha.denominator
    phi = Poly(cyclotomic_poly(m, t), t)
    d = phi.degree()
    coeffs = phi.all_coeffs()  # monic
    comp = [[0] * d for _ in range(d)]
    for i in range(1, d):
        comp[i][i - 1] = 1
    for i in range(d):
        comp[i][d - 1] = -int(coeffs[len(coeffs) - 1 - i])
    mu, eps = S.mu, S.epsilon
    big = [[0] * (mu * d) for _ in range(mu * d)]
    for i in range(mu):
        for j in range(mu):
            s_ij = S.entries[i][j]
            s_ji = S.entries[j][i]
            for a in range(d):
                for b in range(d):
                    big[i * d + a][j * d + b] = s_ij * comp[a][b] + (
                        eps * s_ji if a == b else 0
                    )
    dm = DomainMatrix([[sympy.ZZ(x) for x in row] for row in big],
                      (mu * d, mu * d), sympy.ZZ).convert_to(QQ)
    r = dm.rank()
    if r % d:
        raise ArithmeticError("companion rank not divisible by field degree")
    return r // d


def _pencil_inertia(S: SeifertMatrix, alpha: Fraction, nullity: int) -> Inertia:
    if S.mu == 0:
        return Inertia(0, 0, 0)
    H = _pencil_numeric(S, alpha, dps=None)
    scale = max(1.0, float(np.abs(H).sum(axis=1).max()))
    w = np.linalg.eigvalsh((H + H.conj().T) / 2)
    res = split_by_known_nullity(w, nullity, scale)
    if res is not None:
        return res
    for dps in (40, 80, 160, 320):
        A = _pencil_numeric(S, alpha, dps=dps)
        with mpmath.workdps(dps):
            wv = mpmath.eighe(A, eigvals_only=True)
            ws = [float(x) for x in wv]
        res = split_by_known_nullity(ws, nullity, scale, rel_gap=10.0 ** (10 - dps))
        if res is not None:
            return res
    raise ArithmeticError("raise precision: eigenvalue sign split ambiguous")


def lt_signature(S: SeifertMatrix, p: CirclePoint) -> int:
    """Levine-Tristram signature at p (n even: of the hermitianized pencil)."""
    return _pencil_inertia(S, p.alpha, lt_nullity(S, p)).signature


@dataclass(frozen=True)
class ProfileInterval:
    lo: Fraction
    hi: Fraction
    sample: Fraction
    sigma: int
    nullity: int


@dataclass(frozen=True)
class JumpValue:
    angle: RootAngle
    sigma: int | None
    nullity: int | None

    @property
    def evaluated(self) -> bool:
        return self.sigma is not None


@dataclass(frozen=True)
class SignatureProfile:
    """Piecewise-constant signature/nullity over alpha in (0,1)."""

    jumps: tuple[RootAngle, ...]
    intervals: tuple[ProfileInterval, ...]
    n0: int
    at_jumps: tuple[JumpValue, ...]

    def sigma_at(self, alpha: Fraction) -> int:
        for iv in self.intervals:
            if iv.lo < alpha < iv.hi:
                return iv.sigma
        raise ValueError(f"alpha={alpha} is not interior to any interval")


@functools.lru_cache(maxsize=None)
def signature_profile(S: SeifertMatrix, evaluate_jumps: bool = True) -> SignatureProfile:
    """Full signature/nullity profile: jump angles from the Alexander roots in
    (0,1), constant values sampled at exact midpoints of the gaps; values at
    rational (root-of-unity) jumps are evaluated exactly when requested."""
    base = seifert_n0(S)
    jumps = [r for r in circle_roots(S) if not (r.is_exact and r.exact == 1)]
    samples = rational_points_between(jumps)
    bounds = [Fraction(0)] + [b for r in jumps for b in (r.lo, r.hi)] + [Fraction(1)]
    intervals = []
    for k, a in enumerate(samples):
        sig = _pencil_inertia(S, a, base).signature if S.mu else 0
        intervals.append(ProfileInterval(lo=bounds[2 * k], hi=bounds[2 * k + 1],
                                         sample=a, sigma=sig, nullity=base))
    at_jumps = []
    for r in jumps:
        if evaluate_jumps and r.is_exact:
            nul = S.mu - _rank_at_root_of_unity(S, r.exact)
            sig = _pencil_inertia(S, r.exact, nul).signature
            at_jumps.append(JumpValue(angle=r, sigma=sig, nullity=nul))
        else:
            at_jumps.append(JumpValue(angle=r, sigma=None, nullity=None))
    return SignatureProfile(jumps=tuple(jumps), intervals=tuple(intervals),
                            n0=base, at_jumps=tuple(at_jumps))
