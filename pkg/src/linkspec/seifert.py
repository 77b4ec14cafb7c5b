"""Seifert matrix data model and its first-order invariants.

A Seifert matrix is an integer mu x mu matrix S together with the dimension
parameter n; the link it describes is a (2n-1)-manifold in S^(2n+1) and
epsilon = (-1)^n.  The empty matrix is the canonical unknot.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import sympy
from sympy import Poly, QQ, ZZ, Rational
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from . import linalg
from .linalg import common_kernel, invariant_factors, t


@dataclass(frozen=True)
class SeifertMatrix:
    """Integer Seifert matrix with link dimension parameter n (epsilon = (-1)^n)."""

    n: int
    entries: tuple[tuple[int, ...], ...]
    name: str | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("dimension parameter n must be >= 1")
        object.__setattr__(self, "entries",
                           tuple(tuple(int(x) for x in row) for row in self.entries))
        mu = len(self.entries)
        if any(len(row) != mu for row in self.entries):
            raise ValueError("Seifert matrix must be square")

    @property
    def mu(self) -> int:
        return len(self.entries)

    @property
    def epsilon(self) -> int:
        return -1 if self.n % 2 else 1

    def matrix(self) -> sympy.Matrix:
        return sympy.Matrix(self.mu, self.mu, lambda i, j: Rational(self.entries[i][j]))

    def transpose_matrix(self) -> sympy.Matrix:
        return self.matrix().T

    def pad(self, k: int) -> "SeifertMatrix":
        """Block sum with a k x k zero block."""
        mu = self.mu
        rows = [list(r) + [0] * k for r in self.entries] + [[0] * (mu + k)] * k
        return SeifertMatrix(self.n, tuple(tuple(r) for r in rows), self.name)

    def to_dict(self) -> dict:
        d = {"n": self.n, "matrix": [list(r) for r in self.entries]}
        if self.name is not None:
            d["name"] = self.name
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "SeifertMatrix":
        if not isinstance(d, dict):
            raise ValueError("Seifert matrix JSON must be an object")
        if "n" not in d or "matrix" not in d:
            raise ValueError("fields 'n' and 'matrix' are required")
        n = d["n"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValueError("field 'n': integer >= 1 required")
        rows = d["matrix"]
        if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
            raise ValueError("field 'matrix': array of arrays required")
        for i, r in enumerate(rows):
            if len(r) != len(rows):
                raise ValueError(f"field 'matrix': row {i} breaks squareness")
            for j, x in enumerate(r):
                if not isinstance(x, int) or isinstance(x, bool):
                    raise ValueError(f"field 'matrix': entry ({i},{j}) is not an integer")
        name = d.get("name")
        if name is not None and not isinstance(name, str):
            raise ValueError("field 'name': string expected")
        return cls(n=n, entries=tuple(tuple(r) for r in rows), name=name)


@dataclass(frozen=True)
class KeefDecomposition:
    """Congruence splitting S ~ S_ndeg + zero block of size n0.

    `warning` is set when the common kernel is exhausted but the remaining
    matrix is still singular (the input is not realizable as a reduced
    Seifert matrix)."""

    s_ndeg: sympy.Matrix
    n0: int
    transform: sympy.Matrix
    warning: bool


@functools.lru_cache(maxsize=None)
def n0(S: SeifertMatrix) -> int:
    """dim(ker S ∩ ker S^T) over the rationals."""
    if S.mu == 0:
        return 0
    rows = [list(r) for r in S.entries] + [list(c) for c in zip(*S.entries)]
    sdm = {i: {j: QQ(v) for j, v in enumerate(row) if v}
           for i, row in enumerate(rows)}
    stacked = DomainMatrix({i: r for i, r in sdm.items() if r},
                           (2 * S.mu, S.mu), QQ).to_sparse()
    return S.mu - stacked.rank()


def keef_reduce(S: SeifertMatrix) -> KeefDecomposition:
    """Split off the common kernel of S and S^T by rational congruence,
    iterating until the common kernel is trivial."""
    A = S.matrix()
    transform = sympy.eye(S.mu)
    total = 0
    while A.rows > 0:
        kern = common_kernel(A, A.T)
        if not kern:
            break
        k = len(kern)
        comp = _complement_basis(kern, A.rows)
        P = sympy.Matrix.hstack(*(comp + kern))
        A = (P.T * A * P)[: A.rows - k, : A.rows - k]
        lift = sympy.eye(S.mu)
        lift[: P.rows, : P.rows] = P
        transform = transform * lift
        total += k
    warning = A.rows > 0 and A.det() == 0
    return KeefDecomposition(s_ndeg=A, n0=total, transform=transform, warning=warning)


def _complement_basis(kern: list[sympy.Matrix], dim: int) -> list[sympy.Matrix]:
    # greedily extend the kernel basis to a basis of QQ^dim by unit vectors
    cols = list(kern)
    basis: list[sympy.Matrix] = []
    M = sympy.Matrix.hstack(*cols) if cols else sympy.zeros(dim, 0)
    for j in range(dim):
        e = sympy.zeros(dim, 1)
        e[j] = 1
        cand = sympy.Matrix.hstack(M, *(basis + [e]))
        if linalg.rank_rational(cand) == cand.cols:
            basis.append(e)
        if len(basis) + len(cols) == dim:
            break
    return basis


def pencil(S: SeifertMatrix) -> sympy.Matrix:
    """The polynomial matrix t*S + epsilon*S^T."""
    return t * S.matrix() + S.epsilon * S.transpose_matrix()


@functools.lru_cache(maxsize=None)
def alexander(S: SeifertMatrix) -> Poly:
    """Alexander polynomial: product of the nonzero invariant factors of the
    pencil t*S + epsilon*S^T, normalized to integer coefficients with content 1,
    positive leading coefficient and nonzero constant term."""
    if S.mu == 0:
        return Poly(1, t, domain=ZZ)
    rows = {i: {j: ZZ(v) for j, v in enumerate(row) if v}
            for i, row in enumerate(S.entries)}
    dm = DomainMatrix({i: r for i, r in rows.items() if r},
                      (S.mu, S.mu), ZZ).to_sparse()
    try:
        # det(tS + eps S^T) = det(S) * charpoly(A), A = -eps * S^-1 S^T.
        # Fraction-free: solve_den gives num/den = S^-1 S^T over ZZ, and
        # charpoly(num/den)(t) ∝ charpoly(num)(den*t), so rescale coefficient
        # of t^k by den^k; the overall unit is fixed by normalization.
        num, den = dm.solve_den(dm.transpose())
        if S.epsilon == 1:
            num = -num
        c = num.charpoly()
        d = int(den)
        deg = len(c) - 1
        prod = Poly([int(c[i]) * d ** (deg - i) for i in range(len(c))],
                    t, domain=QQ)
    except DMNonInvertibleMatrixError:
        facs = invariant_factors(pencil(S))
        prod = Poly(1, t, domain=QQ)
        for f in facs:
            if not f.is_zero:
                prod *= f
    return _normalize_alexander(prod)


def _normalize_alexander(p: Poly) -> Poly:
    coeffs = p.all_coeffs()
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        raise ValueError("zero polynomial cannot be normalized")
    q = Poly(coeffs, t, domain=QQ)
    c, q = q.clear_denoms()
    q = Poly(q, t, domain=ZZ).primitive()[1]
    if q.LC() < 0:
        q = -q
    return q


def intersection_form(S: SeifertMatrix) -> sympy.Matrix:
    """b = -epsilon*S - S^T; satisfies b^T = (-1)^n b."""
    return -S.epsilon * S.matrix() - S.transpose_matrix()


def monodromy(S: SeifertMatrix) -> sympy.Matrix:
    """h = -epsilon * (S^T)^-1 * S, exact rational; requires det S != 0."""
    if S.mu == 0:
        return sympy.zeros(0, 0)
    M = S.matrix()
    dm = DomainMatrix.from_Matrix(M).convert_to(QQ)
    if dm.det() == 0:
        raise ValueError("monodromy undefined; reduce first")
    h = (dm.transpose().inv() * dm) * QQ(-S.epsilon)
    return h.to_Matrix()
