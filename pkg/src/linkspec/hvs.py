"""Hermitian variation structures and spectrum extraction.

A hermitian variation structure (HVS) is a quadruple (U; b, h, V) with
epsilon = (-1)^n satisfying

    V b = h - I,    V^T = -eps * V * h^T   (real matrices),

and h preserving b (h^T b h = b).  A nondegenerate Seifert matrix S induces
a simple HVS via V = (S^{-1})^T.

The mod-2 spectrum (values in (0, 2]) is recovered from the signature
profile: for every non-eigenvalue angle alpha the interval count satisfies
|Sp cap (alpha, alpha+1)| = (mu - sigma(e^{2 pi i alpha})) / 2, and the
jumps plus algebraic multiplicities pin down the per-angle multiplicities.
Bookkeeping at the eigenvalue-1 seam: with f0 = f(0+), f1 = f(1-) and mu1
the algebraic multiplicity of eigenvalue 1,

    m(1) = (mu1 + f0 + f1 - mu) / 2,    m(2) = mu1 - m(1),

since the spectral value 1 lies in (alpha, alpha+1) for every alpha in
(0,1) (so it is counted by both one-sided limits) while the value 2 lies in
none of them.

The classification route is also implemented for semisimple monodromy: the
decomposition multiplicities p_lambda^1(u) are sign counts of the
hermitianized form on eigenspaces, with the following calibrated maps
(frozen against Brieskorn spectra; the lambda = 1, eps = +1 branch is a
pure convention, unobservable in the spectrum):

    lambda != 1:  eps = -1 -> u = +sign(i E* b E),  eps = +1 -> u = -sign(E* b E)
    lambda  = 1:  nondegenerate symmetric b-block (eps = +1) -> u = +sign(b-block)
                  otherwise via the variation block Vp = T^{-1} V (T*)^{-1}:
                  eps = -1 -> u = -sign(Vp-block),  eps = +1 -> u = -sign(i Vp-block)
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Union

import numpy as np
import sympy
from sympy import QQ, ImmutableMatrix, Poly
from sympy.polys.matrices import DomainMatrix

from .linalg import rational_to_fraction, t
from .roots import RootAngle, unit_circle_roots
from .seifert import SeifertMatrix, alexander
from .signatures import circle_roots, signature_profile


# ---------------------------------------------------------------------------
# HVS construction and axioms


@dataclass(frozen=True)
class HVS:
    """Hermitian variation structure (U; b, h, V) with epsilon = (-1)^n."""

    epsilon: int
    b: ImmutableMatrix
    h: ImmutableMatrix
    v: ImmutableMatrix

    def __post_init__(self):
        if self.epsilon not in (-1, 1):
            raise ValueError("epsilon must be +1 or -1")
        mu = self.b.rows
        for M in (self.b, self.h, self.v):
            if M.rows != mu or M.cols != mu:
                raise ValueError("b, h, v must be square of equal size")

    @property
    def dim_u(self) -> int:
        return self.b.rows

    def validate(self) -> None:
        """Check the HVS axioms exactly; raises ValueError on failure."""
        eps, b, h, v = self.epsilon, self.b, self.h, self.v
        eye = sympy.eye(self.dim_u)
        if b.T != eps * b:
            raise ValueError("b must be epsilon-symmetric")
        if v * b != h - eye:
            raise ValueError("HVS axiom V b = h - I fails")
        if v.T != -eps * v * h.T:
            raise ValueError("HVS axiom V^T = -eps V h^T fails")
        if h.T * b * h != b:
            raise ValueError("HVS axiom h^T b h = b fails")


def hvs_from_seifert(S: SeifertMatrix) -> HVS:
    """Simple HVS of a nondegenerate Seifert matrix: V = (S^{-1})^T, whence
    h = -eps (S^T)^{-1} S and b = -S^T - eps S."""
    dm = DomainMatrix([[QQ(x) for x in row] for row in S.entries],
                      (S.mu, S.mu), QQ)
    if dm.det() == 0:
        raise ValueError("singular Seifert matrix has no simple HVS")
    eps = S.epsilon
    s_inv = dm.inv()
    v = s_inv.transpose()
    h = (v * dm) * QQ(-eps)  # (V^T)^{-1} = S
    b = dm.transpose() * QQ(-1) + dm * QQ(-eps)
    hvs = HVS(epsilon=eps,
              b=ImmutableMatrix(b.to_Matrix()),
              h=ImmutableMatrix(h.to_Matrix()),
              v=ImmutableMatrix(v.to_Matrix()))
    hvs.validate()
    return hvs


# ---------------------------------------------------------------------------
# Jordan data


@dataclass(frozen=True)
class JordanBlock:
    """`count` Jordan blocks of size `size` at one eigenvalue.  `angle` is
    set (exact Fraction or certified enclosure via RootAngle) when the
    eigenvalue lies on the unit circle; `value` is a numeric approximation."""

    size: int
    count: int
    value: complex
    angle: "SpectralValue | None" = None

    @property
    def on_circle(self) -> bool:
        return self.angle is not None


@dataclass(frozen=True)
class JordanData:
    blocks: tuple[JordanBlock, ...]

    @property
    def dim(self) -> int:
        return sum(bl.size * bl.count for bl in self.blocks)

    @property
    def semisimple(self) -> bool:
        return all(bl.size == 1 for bl in self.blocks)

    @property
    def all_on_circle(self) -> bool:
        return all(bl.on_circle for bl in self.blocks)


def _matrix_to_dm(M: ImmutableMatrix) -> DomainMatrix:
    rows = []
    for i in range(M.rows):
        row = []
        for x in M.row(i):
            r = sympy.Rational(x)
            row.append(QQ(r.p, r.q))
        rows.append(row)
    return DomainMatrix(rows, (M.rows, M.cols), QQ)


def jordan_data(hvs: HVS) -> JordanData:
    """Jordan block sizes of h per eigenvalue, from exact rank sequences of
    g(h)^j over QQ for each irreducible factor g of the characteristic
    polynomial (uniform across the Galois orbit of roots of g)."""
    mu = hvs.dim_u
    if mu == 0:
        return JordanData(blocks=())
    dm = _matrix_to_dm(hvs.h)
    charpoly = Poly(dm.charpoly(), t, domain=QQ)
    blocks: list[JordanBlock] = []
    for g, mult in charpoly.factor_list()[1]:
        g = Poly(g, t, domain=QQ)
        d = g.degree()
        # nullity sequence of g(h)^j determines the size distribution
        gh = _poly_at_matrix(g, dm)
        power = gh
        nullities = [0]
        while nullities[-1] < d * mult:
            nullities.append(mu - power.rank())
            power = power * gh
        ge = [(nullities[j] - nullities[j - 1]) // d for j in range(1, len(nullities))]
        sizes = {k: ge[k - 1] - (ge[k] if k < len(ge) else 0) for k in range(1, len(ge) + 1)}
        sizes = {k: c for k, c in sizes.items() if c > 0}
        for value, angle in _roots_of_factor(g):
            for k, c in sizes.items():
                blocks.append(JordanBlock(size=k, count=c, value=value, angle=angle))
    jd = JordanData(blocks=tuple(sorted(
        blocks, key=lambda b: (b.angle is None, b.angle.sort_key() if b.angle else 0,
                               b.value.real, b.value.imag, b.size))))
    if jd.dim != mu:
        raise ArithmeticError("Jordan block sizes do not fill the space")
    return jd


def _poly_at_matrix(g: Poly, dm: DomainMatrix) -> DomainMatrix:
    n = dm.shape[0]
    acc = DomainMatrix.eye(n, QQ) * QQ(0)
    for c in g.all_coeffs():
        acc = acc * dm + DomainMatrix.eye(n, QQ) * QQ(c.p, c.q)
    return acc


def _roots_of_factor(g: Poly) -> list[tuple[complex, "SpectralValue | None"]]:
    """All roots of an irreducible rational polynomial, with exact/enclosed
    angles for the ones on the unit circle."""
    on_circle = unit_circle_roots(g)
    out: list[tuple[complex, SpectralValue | None]] = []
    for rec in on_circle:
        a = float(rec.midpoint if not rec.is_exact else rec.exact)
        out.append((cmath.exp(2j * cmath.pi * a), SpectralValue.from_root_angle(rec)))
    n_off = g.degree() - sum(r.multiplicity for r in on_circle)
    if n_off:
        approx = sorted((complex(r) for r in g.nroots(n=30)),
                        key=lambda z: abs(abs(z) - 1.0), reverse=True)
        for z in approx[:n_off]:
            out.append((complex(z), None))
    return out


# ---------------------------------------------------------------------------
# Spectral values and spectra


@dataclass(frozen=True)
class SpectralValue:
    """A real spectral value: exact rational, or a certified rational
    enclosure [lo, hi] of an irrational value."""

    lo: Fraction
    hi: Fraction
    exact: Fraction | None = None

    @classmethod
    def from_exact(cls, a) -> "SpectralValue":
        a = Fraction(a)
        return cls(lo=a, hi=a, exact=a)

    @classmethod
    def from_root_angle(cls, rec: RootAngle) -> "SpectralValue":
        if rec.is_exact:
            return cls.from_exact(rec.exact)
        return cls(lo=rec.lo, hi=rec.hi)

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    def shift(self, delta: int) -> "SpectralValue":
        return SpectralValue(lo=self.lo + delta, hi=self.hi + delta,
                             exact=None if self.exact is None else self.exact + delta)

    def compare(self, x: Fraction) -> int:
        """-1 / 0 / +1 for value < x / = x / > x; error if undecidable."""
        if self.is_exact:
            return (self.exact > x) - (self.exact < x)
        if self.hi < x:
            return -1
        if self.lo > x:
            return 1
        raise ArithmeticError("raise precision: enclosure overlaps comparison point")

    def sort_key(self):
        return (self.lo, self.hi)

    def __float__(self) -> float:
        return float(self.exact) if self.is_exact else float((self.lo + self.hi) / 2)

    def __str__(self) -> str:
        if self.is_exact:
            return f"{self.exact.numerator}/{self.exact.denominator}"
        return f"{float(self):.12g}"


ValueLike = Union[SpectralValue, Fraction, int]


def _as_value(v: ValueLike) -> SpectralValue:
    return v if isinstance(v, SpectralValue) else SpectralValue.from_exact(v)


@dataclass(frozen=True)
class Spectrum:
    """Multiset of spectral values in (0, 2]."""

    entries: tuple[tuple[SpectralValue, int], ...]

    def __post_init__(self):
        for val, mult in self.entries:
            if mult <= 0:
                raise ValueError("multiplicities must be positive")
            if not (val.lo > 0 and val.hi <= 2):
                raise ValueError(f"spectral value {val} outside (0, 2]")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[ValueLike, int]]) -> "Spectrum":
        merged: dict[SpectralValue, int] = {}
        for v, m in pairs:
            if m == 0:
                continue
            v = _as_value(v)
            merged[v] = merged.get(v, 0) + m
        return cls(entries=tuple(sorted(merged.items(), key=lambda e: e[0].sort_key())))

    @classmethod
    def from_values(cls, values: Iterable[ValueLike]) -> "Spectrum":
        return cls.from_pairs((v, 1) for v in values)

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.entries)

    def multiplicity_at(self, x: Fraction) -> int:
        x = Fraction(x)
        return sum(m for v, m in self.entries if v.is_exact and v.exact == x)

    def as_exact_multiset(self) -> dict[Fraction, int]:
        if not all(v.is_exact for v, _ in self.entries):
            raise ValueError("spectrum contains non-exact values")
        return {v.exact: m for v, m in self.entries}

    def to_json_entries(self) -> list[dict]:
        return [{"value": str(v), "multiplicity": m} for v, m in self.entries]


@dataclass(frozen=True)
class ISpEntry:
    alpha: SpectralValue
    beta: float
    multiplicity: int

    def __post_init__(self):
        if self.beta == 0:
            raise ValueError("ISp entries must be off the real axis")
        above = self.beta > 0
        if above != (self.alpha.compare(Fraction(1)) <= 0):
            raise ValueError("ISp strip convention violated: need "
                             "(alpha <= 1, beta > 0) or (alpha > 1, beta < 0)")


@dataclass(frozen=True)
class ISp:
    entries: tuple[ISpEntry, ...]

    @property
    def total_multiplicity(self) -> int:
        return sum(e.multiplicity for e in self.entries)


# ---------------------------------------------------------------------------
# Decomposition route (semisimple case)


@dataclass(frozen=True)
class PBlock:
    """p_lambda^k(u) summand: `count` copies of W_lambda^k(u), lambda =
    exp(2 pi i theta) on the unit circle, theta in (0, 1]."""

    theta: SpectralValue
    size: int
    u: int
    count: int

    def __post_init__(self):
        if self.u not in (-1, 1):
            raise ValueError("u must be +1 or -1")
        if self.size < 1 or self.count < 1:
            raise ValueError("size and count must be positive")
        if not (self.theta.lo > 0 and self.theta.hi <= 1):
            raise ValueError("theta must lie in (0, 1]")


@dataclass(frozen=True)
class QBlock:
    """q_lambda^k summand: `count` copies of V_lambda^{2k}, lambda =
    modulus * exp(2 pi i theta) with 0 < modulus < 1."""

    theta: Fraction
    modulus: float
    size: int
    count: int

    def __post_init__(self):
        if not 0 < self.modulus < 1:
            raise ValueError("q-blocks require 0 < |lambda| < 1")
        if not 0 < self.theta <= 1:
            raise ValueError("theta must lie in (0, 1]")
        if self.size < 1 or self.count < 1:
            raise ValueError("size and count must be positive")


def spectrum_from_decomposition(p_data: Iterable[PBlock],
                                q_data: Iterable[QBlock] = ()) -> tuple[Spectrum, ISp]:
    """Spectrum and ISp of a decomposed HVS by the s(alpha) / s(z) formulas.

    Each W block contributes at the two angles alpha = theta and theta + 1:
    s = (k - u*(-1)^floor(alpha))/2 for k odd (floor(1) = 1, floor(2) = 2 at
    the seam), and s = k/2 for k even.  Each V block pair contributes
    k*count at z = theta + i*beta and z = theta + 1 - i*beta with
    beta = -ln(modulus)/(2 pi) > 0.
    """
    pairs: list[tuple[SpectralValue, int]] = []
    for bl in p_data:
        seam = bl.theta.is_exact and bl.theta.exact == 1
        for shift in (0, 1):
            alpha = bl.theta.shift(shift)
            floor_a = shift + (1 if seam else 0)
            if bl.size % 2 == 0:
                s = bl.size // 2
            else:
                s = (bl.size - bl.u * (-1) ** floor_a) // 2
            pairs.append((alpha, s * bl.count))
    isp_entries: dict[tuple[SpectralValue, float], int] = {}
    for bl in q_data:
        beta = -math.log(bl.modulus) / (2 * math.pi)
        for alpha, bsign in ((SpectralValue.from_exact(bl.theta), beta),
                             (SpectralValue.from_exact(bl.theta + 1), -beta)):
            key = (alpha, bsign)
            isp_entries[key] = isp_entries.get(key, 0) + bl.size * bl.count
    isp = ISp(entries=tuple(ISpEntry(alpha=a, beta=b, multiplicity=m)
                            for (a, b), m in sorted(isp_entries.items(),
                                                    key=lambda e: (e[0][0].sort_key(), e[0][1]))))
    return Spectrum.from_pairs(pairs), isp


_SIGN_TOL = 1e-8


def _sign_counts(w: np.ndarray, scale: float, where: str) -> tuple[int, int]:
    if w.size and np.min(np.abs(w)) <= _SIGN_TOL * scale:
        raise ArithmeticError(f"raise precision: ambiguous sign split ({where})")
    return int(np.sum(w > 0)), int(np.sum(w < 0))


def _hermitize(M: np.ndarray) -> np.ndarray:
    return (M + M.conj().T) / 2


def _eigenspace(hF: np.ndarray, lam: complex, mult: int) -> np.ndarray:
    """Orthonormal basis (columns) of the lam-eigenspace, dimension `mult`
    known exactly in advance."""
    _, sv, vh = np.linalg.svd(hF - lam * np.eye(hF.shape[0]))
    good = sv[-mult] <= _SIGN_TOL * max(1.0, sv[0])
    gap = mult == hF.shape[0] or sv[-mult - 1] > 1e3 * sv[-mult] + _SIGN_TOL * max(1.0, sv[0])
    if not (good and gap):
        raise ArithmeticError("raise precision: eigenspace not numerically separated")
    return vh[-mult:].conj().T


@dataclass(frozen=True)
class SignBlock:
    """p_lambda^1(u) = count for lambda = exp(2 pi i theta)."""

    theta: SpectralValue
    u: int
    count: int


def semisimple_signs(hvs: HVS) -> tuple[SignBlock, ...]:
    """Signs u of the k = 1 blocks W_lambda^1(u) of a semisimple HVS with
    all eigenvalues on the unit circle (see module docstring for the
    calibrated sign maps)."""
    jd = jordan_data(hvs)
    if not jd.semisimple:
        raise ValueError("sign classification beyond k=1 unsupported")
    if not jd.all_on_circle:
        raise ValueError("semisimple_signs requires all eigenvalues on the unit circle")
    eps = hvs.epsilon
    hF = np.array(hvs.h, dtype=float)
    bF = np.array(hvs.b, dtype=float)
    vF = np.array(hvs.v, dtype=float)
    out: list[SignBlock] = []
    for bl in jd.blocks:
        mult = bl.count
        theta = bl.angle
        is_one = theta.is_exact and theta.exact == 1
        E = _eigenspace(hF, bl.value, mult)
        if not is_one:
            M = E.conj().T @ bF @ E
            H = _hermitize(1j * M) if eps == -1 else _hermitize(M)
            w = np.linalg.eigvalsh(H)
            np_, nm = _sign_counts(w, max(1.0, np.abs(bF).max()), f"b-block at {theta}")
            if eps == 1:
                np_, nm = nm, np_
        else:
            np_, nm = _signs_at_one(hvs, hF, bF, vF, E, mult)
        if np_ + nm != mult:
            raise ArithmeticError("raise precision: sign counts do not fill the eigenspace")
        if np_:
            out.append(SignBlock(theta=theta, u=1, count=np_))
        if nm:
            out.append(SignBlock(theta=theta, u=-1, count=nm))
    return tuple(out)


def _signs_at_one(hvs: HVS, hF, bF, vF, E, mult) -> tuple[int, int]:
    eps = hvs.epsilon
    scale = max(1.0, np.abs(bF).max())
    if eps == 1:
        M = _hermitize(E.conj().T @ bF @ E)
        w = np.linalg.eigvalsh(M)
        if w.size and np.min(np.abs(w)) > _SIGN_TOL * scale:
            return int(np.sum(w > 0)), int(np.sum(w < 0))
    # degenerate b-block: read the sign off the variation block in a full
    # eigenbasis T of h, Vp = T^{-1} V (T*)^{-1}
    w_all, T = np.linalg.eig(hF)
    if np.linalg.cond(T) > 1e8:
        raise ArithmeticError("raise precision: ill-conditioned eigenbasis")
    idx = np.where(np.abs(w_all - 1.0) < 1e-6)[0]
    if idx.size != mult:
        raise ArithmeticError("raise precision: eigenvalue-1 cluster mismatch")
    Ti = np.linalg.inv(T)
    Vp = Ti @ vF @ Ti.conj().T
    block = Vp[np.ix_(idx, idx)]
    H = _hermitize(block) if eps == -1 else _hermitize(1j * block)
    w = np.linalg.eigvalsh(H)
    np_, nm = _sign_counts(w, max(1.0, np.abs(vF).max()), "variation block at 1")
    return nm, np_  # u = -sign in both parities


# ---------------------------------------------------------------------------
# Spectrum via the signature profile (Prop.-style interval counts)


def extract_spectrum(S: SeifertMatrix) -> Spectrum:
    """Mod-2 spectrum of a nondegenerate Seifert matrix with all monodromy
    eigenvalues on the unit circle, from the Levine-Tristram signature
    profile (see module docstring for the bookkeeping)."""
    if S.mu == 0:
        return Spectrum.from_pairs(())
    delta = alexander(S)
    if delta.degree() < S.mu:
        # deg det(tS + eps S^T) = mu iff det S != 0
        raise ValueError("singular Seifert matrix: spectrum undefined")
    roots = circle_roots(S)
    if sum(r.multiplicity for r in roots) != S.mu:
        raise ValueError("monodromy has eigenvalues off the unit circle")
    prof = signature_profile(S, evaluate_jumps=False)
    mu = S.mu
    f = [(mu - iv.sigma) // 2 for iv in prof.intervals]
    if any((mu - iv.sigma) % 2 for iv in prof.intervals):
        raise ArithmeticError("convention calibration violated or input non-geometric")
    mu1 = sum(r.multiplicity for r in roots if r.is_exact and r.exact == 1)
    pairs: list[tuple[SpectralValue, int]] = []
    m1_twice = mu1 + f[0] + f[-1] - mu
    if m1_twice < 0 or m1_twice % 2 or m1_twice // 2 > mu1:
        raise ArithmeticError("convention calibration violated or input non-geometric")
    m1 = m1_twice // 2
    if m1:
        pairs.append((SpectralValue.from_exact(1), m1))
    if mu1 - m1:
        pairs.append((SpectralValue.from_exact(2), mu1 - m1))
    for j, rec in enumerate(prof.jumps):
        jump = f[j + 1] - f[j]
        if (rec.multiplicity - jump) % 2 or abs(jump) > rec.multiplicity:
            raise ArithmeticError("convention calibration violated or input non-geometric")
        m_lo = (rec.multiplicity - jump) // 2
        m_hi = (rec.multiplicity + jump) // 2
        val = SpectralValue.from_root_angle(rec)
        if m_lo:
            pairs.append((val, m_lo))
        if m_hi:
            pairs.append((val.shift(1), m_hi))
    sp = Spectrum.from_pairs(pairs)
    if sp.total_multiplicity != mu:
        raise ArithmeticError("convention calibration violated or input non-geometric")
    return sp


def mod2_reduce(values, n: int | None = None) -> Spectrum:
    """Fold a multiset of rationals in (0, n+1) into (0, 2] by subtracting
    even integers; multiplicities add.  Accepts a Spectrum, (value, mult)
    pairs, or plain values."""
    if isinstance(values, Spectrum):
        items = [(v.exact, m) for v, m in values.entries]
        if any(v is None for v, _ in items):
            raise ValueError("mod2_reduce requires exact values")
    else:
        values = list(values)
        if values and isinstance(values[0], tuple):
            items = [(Fraction(v), int(m)) for v, m in values]
        else:
            items = [(Fraction(v), 1) for v in values]
    out: list[tuple[Fraction, int]] = []
    for v, m in items:
        if v <= 0 or (n is not None and v >= n + 1):
            raise ValueError(f"value {v} outside (0, {'' if n is None else n + 1})")
        r = v % 2
        out.append((r if r else Fraction(2), m))
    return Spectrum.from_pairs(out)


@dataclass(frozen=True)
class IntervalCount:
    inside: int
    outside: int
    boundary: int

    def __iter__(self):
        return iter((self.inside, self.outside))


def interval_count(sp: Spectrum, alpha) -> IntervalCount:
    """Multiplicity of sp inside the open interval (alpha, alpha+1), outside
    its closure, and on its boundary, for alpha in [0, 1]."""
    alpha = Fraction(alpha)
    if not 0 <= alpha <= 1:
        raise ValueError("alpha must lie in [0, 1]")
    upper = alpha + 1
    inside = outside = boundary = 0
    for v, m in sp.entries:
        lo_cmp = v.compare(alpha)
        if lo_cmp < 0:
            outside += m
            continue
        if lo_cmp == 0:
            boundary += m
            continue
        hi_cmp = v.compare(upper)
        if hi_cmp < 0:
            inside += m
        elif hi_cmp == 0:
            boundary += m
        else:
            outside += m
    return IntervalCount(inside=inside, outside=outside, boundary=boundary)
