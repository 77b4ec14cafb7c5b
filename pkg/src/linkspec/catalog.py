"""Seifert matrices and oracle spectra for classical singularities.

Brieskorn matrices x_0^{a_0} + ... + x_n^{a_n} are built by iterated
Thom-Sebastiani tensor products of one-variable blocks.  The sign convention
ts(A, B) = (-1)^{v1*v2} * (A tensor B), with v the variable counts, is
calibrated by two constraints and then frozen: brieskorn(2,3) must reproduce
the trefoil profile (sigma(-1) = -2), and the extracted spectrum must match
the weighted-homogeneous oracle on (2,2,3).

The oracle spectrum { sum_i k_i/a_i : 1 <= k_i <= a_i - 1 } is computed by
brute enumeration, with no Seifert matrices involved, so the two routes stay
independent.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod

from .seifert import SeifertMatrix


@dataclass(frozen=True)
class BrieskornExponents:
    a: tuple[int, ...]

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        object.__setattr__(self, "a", a)
        if len(a) < 1:
            raise ValueError("need at least one exponent")
        if any(x < 2 for x in a):
            raise ValueError("all exponents must be >= 2")

    @property
    def n(self) -> int:
        return len(self.a) - 1

    @property
    def mu(self) -> int:
        return prod(x - 1 for x in self.a)


@dataclass(frozen=True)
class TSBlock:
    """A Seifert-form block together with its variable count."""

    entries: tuple[tuple[int, ...], ...]
    nvars: int

    @property
    def size(self) -> int:
        return len(self.entries)


def one_var_seifert(a: int) -> TSBlock:
    """Seifert block of x^a in one variable: (a-1) x (a-1) upper bidiagonal
    with -1 on the diagonal and +1 on the superdiagonal."""
    if a < 2:
        raise ValueError("exponent must be >= 2")
    m = a - 1
    entries = tuple(tuple(-1 if i == j else (1 if j == i + 1 else 0)
                          for j in range(m)) for i in range(m))
    return TSBlock(entries=entries, nvars=1)


def thom_sebastiani(b1: TSBlock, b2: TSBlock) -> TSBlock:
    """Seifert block of f(x) + g(y): signed tensor product (see module
    docstring for the frozen sign convention)."""
    sign = (-1) ** (b1.nvars * b2.nvars)
    n1, n2 = b1.size, b2.size
    entries = tuple(
        tuple(sign * b1.entries[i1][j1] * b2.entries[i2][j2]
              for j1 in range(n1) for j2 in range(n2))
        for i1 in range(n1) for i2 in range(n2)
    )
    return TSBlock(entries=entries, nvars=b1.nvars + b2.nvars)


def brieskorn(*a, name: str | None = None) -> SeifertMatrix:
    """Seifert matrix of the Brieskorn singularity x_0^{a_0}+...+x_n^{a_n}
    (n = len(a) - 1 >= 1, mu = prod(a_i - 1))."""
    if len(a) == 1 and not isinstance(a[0], int):
        a = tuple(a[0])
    exps = BrieskornExponents(a=tuple(a))
    if exps.n < 1:
        raise ValueError("need at least two exponents (n >= 1)")
    block = one_var_seifert(exps.a[0])
    for x in exps.a[1:]:
        block = thom_sebastiani(block, one_var_seifert(x))
    label = name if name is not None else "brieskorn:" + ",".join(map(str, exps.a))
    return SeifertMatrix(n=exps.n, entries=block.entries, name=label)


def brieskorn_spectrum_oracle(*a) -> list[Fraction]:
    """Oracle spectrum { sum k_i/a_i : 1 <= k_i <= a_i-1 } in (0, n+1),
    by brute enumeration (independent of any Seifert matrix)."""
    if len(a) == 1 and not isinstance(a[0], int):
        a = tuple(a[0])
    exps = BrieskornExponents(a=tuple(a))
    return sorted(
        sum((Fraction(k, ai) for k, ai in zip(ks, exps.a)), Fraction(0))
        for ks in itertools.product(*(range(1, ai) for ai in exps.a))
    )


def a_singularity(k: int, n: int = 1) -> SeifertMatrix:
    """A_k singularity x^{k+1} + sum of n squares: brieskorn(2,...,2,k+1)."""
    if k < 1 or n < 1:
        raise ValueError("A_k requires k >= 1 and n >= 1")
    return brieskorn(*([2] * n + [k + 1]), name=f"A{k}" + (f"@n={n}" if n > 1 else ""))


def d4_singularity() -> SeifertMatrix:
    """D4 singularity x^3 + xy^2 ~ x^3 + y^3 (equivalent): brieskorn(3,3)."""
    return brieskorn(3, 3, name="D4")


@dataclass(frozen=True)
class AdjacencyExample:
    """A curated deformation instance central -> locals with an expected
    semicontinuity verdict."""

    name: str
    central: SeifertMatrix
    locals: tuple[SeifertMatrix, ...]
    expected: str = "holds"

    def __post_init__(self):
        if any(L.n != self.central.n for L in self.locals):
            raise ValueError("all matrices in an instance must share n")


def adjacency_examples() -> list[AdjacencyExample]:
    """Curated adjacency corpus: A_k -> A_j (j < k <= 6) at n = 1, 2, 3,
    identity instances, and D4 -> A3 at n = 1; every instance is a true
    adjacency, so the expected verdict is "holds"."""
    out: list[AdjacencyExample] = []
    for n in (1, 2, 3):
        for k in range(2, 7):
            for j in range(1, k):
                out.append(AdjacencyExample(
                    name=f"A{k}->A{j}@n={n}",
                    central=a_singularity(k, n),
                    locals=(a_singularity(j, n),)))
        out.append(AdjacencyExample(
            name=f"A2->A2@n={n}",
            central=a_singularity(2, n),
            locals=(a_singularity(2, n),)))
    out.append(AdjacencyExample(name="D4->A3@n=1",
                                central=d4_singularity(),
                                locals=(a_singularity(3, 1),)))
    return out


def by_name(name: str) -> SeifertMatrix:
    """Catalog lookup: "A3", "A3@n=2", "D4", or "brieskorn:2,2,3"."""
    s = name.strip()
    if s.lower().startswith("brieskorn:"):
        exps = tuple(int(x) for x in s.split(":", 1)[1].split(","))
        return brieskorn(*exps)
    if s.upper() == "D4":
        return d4_singularity()
    base, _, dim = s.partition("@n=")
    if base.upper().startswith("A") and base[1:].isdigit():
        return a_singularity(int(base[1:]), int(dim) if dim else 1)
    raise KeyError(f"unknown catalog name: {name!r}")
