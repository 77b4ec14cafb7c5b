"""Locating roots of rational polynomials on the unit circle.

Roots are reported as angles alpha in (0,1], root = exp(2*pi*i*alpha).
Cyclotomic factors are detected by trial division, which makes the common
(root-of-unity) case exact; remaining unit-circle roots are isolated through
the substitution x = t + 1/t and certified real-root isolation on the
resulting polynomial, yielding rational enclosures that can be refined on
demand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
import sympy
from sympy import QQ, Poly, cyclotomic_poly, totient

from .linalg import rational_to_fraction, t


@dataclass
class RootAngle:
    """One unit-circle root angle with multiplicity.

    `exact` is set for root-of-unity angles.  Otherwise [lo, hi] is a
    certified rational enclosure of the angle, refinable via refine().
    """

    lo: Fraction
    hi: Fraction
    multiplicity: int
    exact: Fraction | None = None
    _xpoly: Poly | None = field(default=None, repr=False)
    _xlo: Fraction | None = field(default=None, repr=False)
    _xhi: Fraction | None = field(default=None, repr=False)
    _mirror: bool = field(default=False, repr=False)

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def refine(self, eps: Fraction) -> None:
        """Shrink the enclosure width below eps (no-op for exact angles)."""
        if self.is_exact:
            return
        while self.hi - self.lo > eps:
            a, b = self._xpoly.refine_root(
                sympy.Rational(self._xlo.numerator, self._xlo.denominator),
                sympy.Rational(self._xhi.numerator, self._xhi.denominator),
                steps=8,
            )
            self._xlo, self._xhi = rational_to_fraction(a), rational_to_fraction(b)
            self.lo, self.hi = _angle_bounds(self._xlo, self._xhi, self._mirror)

    def contains(self, alpha: Fraction) -> bool:
        return self.lo <= alpha <= self.hi

    def sort_key(self):
        return self.midpoint


def _angle_bounds(xlo: Fraction, xhi: Fraction, mirror: bool) -> tuple[Fraction, Fraction]:
    """Conservative rational bounds for alpha = acos(x/2)/(2*pi) on [xlo, xhi]."""
    with mpmath.workdps(70):
        alo = mpmath.acos(mpmath.mpf(xhi.numerator) / xhi.denominator / 2) / (2 * mpmath.pi)
        ahi = mpmath.acos(mpmath.mpf(xlo.numerator) / xlo.denominator / 2) / (2 * mpmath.pi)
        # outward rounding with padding far above mpmath's error at this dps
        scale = 1 << 180
        lo = Fraction(int(mpmath.floor(alo * scale)) - 1, scale)
        hi = Fraction(int(mpmath.ceil(ahi * scale)) + 1, scale)
    lo = max(lo, Fraction(0))
    hi = min(hi, Fraction(1, 2))
    if mirror:
        return 1 - hi, 1 - lo
    return lo, hi


def _reversed_poly(p: Poly) -> Poly:
    return Poly(list(reversed(p.all_coeffs())), t, domain=p.domain)


def _compact_form(p: Poly) -> Poly:
    """Write a palindromic p(t) of even degree as t^(d/2) * G(t + 1/t)."""
    x = t
    f = p
    g = Poly(0, x, domain=QQ)
    while not f.is_zero:
        d = f.degree()
        if d % 2:
            raise ValueError("palindromic polynomial of even degree expected")
        c = f.LC()
        g = g + Poly(c * x ** (d // 2), x, domain=QQ)
        f = f - Poly(c * (x**2 + 1) ** (d // 2), x, domain=QQ)
        if not f.is_zero:
            coeffs = f.all_coeffs()
            e = len(coeffs) - 1 - max(i for i, c_ in enumerate(coeffs) if c_ != 0)
            if e <= 0:
                raise ValueError("not palindromic")
            f = Poly(coeffs[: len(coeffs) - e], x, domain=QQ)
    return g


_CYCLOTOMIC_CACHE: dict[int, tuple[Poly, int]] = {}
_TOTIENT_CACHE: dict[int, int] = {}


def _cyclotomic(m: int) -> tuple[Poly, int]:
    """Phi_m as a QQ Poly together with its value at t=2 (for a fast
    divisibility pre-filter on integer polynomials)."""
    cached = _CYCLOTOMIC_CACHE.get(m)
    if cached is None:
        phi = cyclotomic_poly(m, t, polys=True).set_domain(QQ)
        cached = (phi, int(phi.eval(2)))
        _CYCLOTOMIC_CACHE[m] = cached
    return cached


def _totient(m: int) -> int:
    v = _TOTIENT_CACHE.get(m)
    if v is None:
        v = int(totient(m))
        _TOTIENT_CACHE[m] = v
    return v


def _strip_cyclotomic(p: Poly) -> tuple[dict[int, int], Poly]:
    """Divide out all cyclotomic factors Phi_m, phi(m) <= deg; return counts."""
    counts: dict[int, int] = {}
    # Cheap necessary condition: Phi_m | p implies Phi_m(2) | p(2),
    # valid whenever p has integer coefficients and p(2) != 0.
    val = p.eval(2)
    p_at_2 = int(val) if val != 0 and val.is_integer else None
    m = 0
    while True:
        m += 1
        d = p.degree()
        if d <= 0:
            break
        if m > max(6, 2 * d * d):
            break
        if _totient(m) > d:
            continue
        phi, phi_at_2 = _cyclotomic(m)
        if p_at_2 is not None and p_at_2 % phi_at_2 != 0:
            continue
        while p.degree() >= phi.degree():
            q, r = divmod(p, phi)
            if not r.is_zero:
                break
            p = q
            if p_at_2 is not None:
                p_at_2 //= phi_at_2
            counts[m] = counts.get(m, 0) + 1
    return counts, p


def _exact_angles(m: int, count: int) -> list[RootAngle]:
    ks = [1] if m == 1 else [k for k in range(1, m) if math.gcd(k, m) == 1]
    out = []
    for k in ks:
        a = Fraction(k, m) if m > 1 else Fraction(1)
        out.append(RootAngle(lo=a, hi=a, multiplicity=count, exact=a))
    return out


def unit_circle_roots(p) -> list[RootAngle]:
    """All roots of p on the unit circle, as angles in (0,1] with multiplicity.

    Root-of-unity angles are exact rationals; any others carry certified
    rational enclosures.  The result is sorted by angle.
    """
    p = Poly(p, t, domain=QQ)
    if p.is_zero:
        raise ValueError("nonzero polynomial required")
    records: list[RootAngle] = []
    # t = 0 roots are off the circle
    if p.all_coeffs()[-1] == 0:
        tt = Poly(t, t, domain=QQ)
        while p.all_coeffs()[-1] == 0:
            p, _ = divmod(p, tt)
    counts, rest = _strip_cyclotomic(p)
    for m, c in counts.items():
        records.extend(_exact_angles(m, c))
    if rest.degree() > 0:
        for f, mult in rest.factor_list()[1]:
            f = Poly(f, t, domain=QQ).monic()
            if f.degree() % 2:
                continue
            rev = _reversed_poly(f).monic()
            if rev != f:
                continue
            g = _compact_form(f)
            for (a, b), _k in g.intervals():
                xlo, xhi = rational_to_fraction(a), rational_to_fraction(b)
                xlo, xhi, inside = _localize_in_two(g, xlo, xhi)
                if not inside:
                    continue
                for mirror in (False, True):
                    lo, hi = _angle_bounds(xlo, xhi, mirror)
                    records.append(
                        RootAngle(lo=lo, hi=hi, multiplicity=mult, exact=None,
                                  _xpoly=g, _xlo=xlo, _xhi=xhi, _mirror=mirror)
                    )
    records.sort(key=RootAngle.sort_key)
    return records


def _localize_in_two(g: Poly, xlo: Fraction, xhi: Fraction) -> tuple[Fraction, Fraction, bool]:
    """Refine an isolating x-interval until it is strictly inside or outside (-2,2)."""
    while True:
        if -2 < xlo and xhi < 2:
            return xlo, xhi, True
        if xhi <= -2 or xlo >= 2:
            return xlo, xhi, False
        a, b = g.refine_root(
            sympy.Rational(xlo.numerator, xlo.denominator),
            sympy.Rational(xhi.numerator, xhi.denominator),
            steps=4,
        )
        xlo, xhi = rational_to_fraction(a), rational_to_fraction(b)


def separate_angles(records: list[RootAngle], avoid: list[Fraction] = ()) -> None:
    """Refine enclosures until all records are pairwise disjoint and avoid
    the given exact points.  Mutates records in place."""
    eps = Fraction(1, 1 << 20)
    for _ in range(60):
        for r in records:
            r.refine(eps)
        ok = all(records[i].hi < records[i + 1].lo for i in range(len(records) - 1))
        ok = ok and all(not r.contains(a) for r in records if not r.is_exact for a in avoid)
        if ok:
            return
        eps /= 1 << 10
    raise ArithmeticError("raise precision: could not separate root enclosures")


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with smallest denominator strictly inside (lo, hi)."""
    if not lo < hi:
        raise ValueError("empty interval")
    n = math.floor(lo)
    if n + 1 < hi:
        return Fraction(n + 1)
    if lo == n:  # interval (n, hi) with hi - n <= 1: take n + 1/k
        return n + Fraction(1, math.floor(Fraction(1) / (hi - n)) + 1)
    return n + 1 / simplest_between(1 / (hi - n), 1 / (lo - n))


def rational_points_between(records: list[RootAngle], lo: Fraction = Fraction(0),
                            hi: Fraction = Fraction(1)) -> list[Fraction]:
    """One exact rational (simplest available) in each gap of [lo, hi] minus
    the record angles."""
    separate_angles(records)
    bounds = [(lo, lo)] + [(r.lo, r.hi) for r in records] + [(hi, hi)]
    return [simplest_between(bounds[i][1], bounds[i + 1][0])
            for i in range(len(bounds) - 1)]
