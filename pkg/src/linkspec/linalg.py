"""Exact rational linear algebra and controlled-precision hermitian inertia.

Structural data (ranks, kernels, invariant factors) is computed exactly over
the rationals via sympy's DomainMatrix.  Floating point enters only when
counting eigenvalue signs of hermitian matrices, and there it is guarded by
a scale-invariant tolerance with an mpmath precision-escalation fallback.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np
import sympy
from sympy import QQ, ZZ, Poly, Rational, symbols
from sympy.matrices.normalforms import invariant_factors as _sympy_invariant_factors
from sympy.polys.matrices import DomainMatrix

t = symbols("t")

#: relative tolerance for eigenvalue sign decisions, times a spectral-norm bound
DEFAULT_TOL_FACTOR = 1e-9


def to_rational_matrix(rows) -> sympy.Matrix:
    """Build an exact rational sympy Matrix from nested ints/Fractions/Rationals."""
    return sympy.Matrix([[Rational(x) for x in row] for row in rows])


def _to_dm(M: sympy.Matrix) -> DomainMatrix:
    return DomainMatrix.from_Matrix(M).convert_to(QQ)


def rank_rational(M: sympy.Matrix) -> int:
    """Exact rank of a rational matrix."""
    if M.rows == 0 or M.cols == 0:
        return 0
    return _to_dm(M).rank()


def nullspace_rational(M: sympy.Matrix) -> list[sympy.Matrix]:
    """Exact rational basis of ker M (as column vectors)."""
    if M.rows == 0 or M.cols == 0:
        return [sympy.eye(M.cols)[:, j] for j in range(M.cols)]
    ns = _to_dm(M).nullspace().to_Matrix()
    return [ns[j, :].T for j in range(ns.rows)]


def common_kernel(A: sympy.Matrix, B: sympy.Matrix) -> list[sympy.Matrix]:
    """Exact basis of ker A ∩ ker B for square matrices of equal size."""
    if A.shape != B.shape or A.rows != A.cols:
        raise ValueError(f"size mismatch: {A.shape} vs {B.shape}")
    stacked = A.col_join(B)
    return nullspace_rational(stacked)


def invariant_factors(P: sympy.Matrix) -> list[Poly]:
    """Smith normal form invariant factors of a square matrix over QQ[t].

    Nonzero factors are monic and each divides the next; zero factors
    (corank over the rational function field) are reported as explicit
    zeros at the tail.
    """
    if P.rows != P.cols:
        raise ValueError("square polynomial matrix required")
    if P.rows == 0:
        return []
    factors = _sympy_invariant_factors(P, domain=QQ[t])
    polys = [Poly(f, t, domain=QQ) for f in factors]
    nonzero = [p.monic() for p in polys if not p.is_zero]
    zeros = [Poly(0, t, domain=QQ)] * (len(polys) - len(nonzero))
    return nonzero + zeros


@dataclass(frozen=True)
class Inertia:
    n_plus: int
    n_minus: int
    n_zero: int

    def __post_init__(self):
        if min(self.n_plus, self.n_minus, self.n_zero) < 0:
            raise ValueError("inertia counts must be non-negative")

    @property
    def signature(self) -> int:
        return self.n_plus - self.n_minus

    @property
    def nullity(self) -> int:
        return self.n_zero

    @property
    def size(self) -> int:
        return self.n_plus + self.n_minus + self.n_zero


def _norm_bound(H: np.ndarray) -> float:
    # max row sum bounds the spectral norm of a hermitian matrix
    if H.size == 0:
        return 1.0
    return max(1e-300, float(np.abs(H).sum(axis=1).max()))


def hermitian_inertia(H, tol: float | None = None) -> Inertia:
    """Eigenvalue sign counts of a complex hermitian matrix.

    `tol` is an absolute threshold; the default is DEFAULT_TOL_FACTOR times
    a spectral-norm upper bound, which makes sign decisions scale-invariant.
    """
    H = np.asarray(H, dtype=complex)
    if H.size == 0:
        return Inertia(0, 0, 0)
    if tol is None:
        tol = DEFAULT_TOL_FACTOR * _norm_bound(H)
    if tol <= 0:
        raise ValueError("tol must be positive")
    if np.abs(H - H.conj().T).max() > tol:
        raise ValueError("matrix is not hermitian within tol")
    w = np.linalg.eigvalsh((H + H.conj().T) / 2)
    n_plus = int((w > tol).sum())
    n_minus = int((w < -tol).sum())
    return Inertia(n_plus, n_minus, len(w) - n_plus - n_minus)


def split_by_known_nullity(w, nullity: int, scale: float,
                           rel_gap: float = 1e-7) -> Inertia | None:
    """Sign counts of eigenvalues `w` when the kernel dimension is known exactly.

    The `nullity` smallest eigenvalues (in absolute value) stand in for exact
    zeros of the underlying exact matrix; the rest are counted by sign,
    provided a clear relative gap separates them from the zero cluster.
    Returns None when the split is ambiguous at the given resolution (callers
    then rebuild the matrix at higher precision and retry).
    """
    w = np.asarray(w, dtype=float)
    if not 0 <= nullity <= len(w):
        raise ValueError("nullity out of range")
    order = np.argsort(np.abs(w))
    small = np.abs(w[order[:nullity]])
    large = w[order[nullity:]]
    small_max = small.max() if nullity else 0.0
    large_min = np.abs(large).min() if len(large) else np.inf
    # the zero cluster must sit well below the nonzero eigenvalues
    if large_min < 10 * max(small_max, rel_gap * scale):
        return None
    n_plus = int((large > 0).sum())
    n_minus = int((large < 0).sum())
    return Inertia(n_plus, n_minus, nullity)


def fraction_to_rational(x: Fraction) -> Rational:
    return Rational(x.numerator, x.denominator)


def rational_to_fraction(x) -> Fraction:
    x = Rational(x)
    return Fraction(int(x.p), int(x.q))
