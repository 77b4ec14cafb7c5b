from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Poly

from linkspec.linalg import t
from linkspec.roots import (rational_points_between, separate_angles,
                            simplest_between, unit_circle_roots)


def angle_multiset(p):
    out = {}
    for rec in unit_circle_roots(p):
        key = rec.exact if rec.is_exact else (rec.lo, rec.hi)
        out[key] = out.get(key, 0) + rec.multiplicity
    return out


def test_cyclotomic_roots_exact():
    recs = unit_circle_roots(Poly(t**2 - t + 1, t))
    assert [(r.exact, r.multiplicity) for r in recs] == \
        [(Fraction(1, 6), 1), (Fraction(5, 6), 1)]


def test_root_at_one():
    recs = unit_circle_roots(Poly((t - 1) ** 2, t))
    assert [(r.exact, r.multiplicity) for r in recs] == [(Fraction(1), 2)]


def test_no_circle_roots():
    assert unit_circle_roots(Poly(t**2 - 3 * t + 1, t)) == []


def test_irrational_circle_roots_enclosed():
    # 2t^2 - 3t + 2 has conjugate roots on the unit circle, not roots of unity
    recs = unit_circle_roots(Poly(2 * t**2 - 3 * t + 2, t))
    assert len(recs) == 2 and all(not r.is_exact for r in recs)
    lo, hi = recs[0], recs[1]
    assert lo.hi < Fraction(1, 2) < hi.lo
    # the two angles mirror each other around 1/2
    assert lo.lo + hi.hi == 1 and lo.hi + hi.lo == 1


def test_multiplicity_of_repeated_cyclotomic():
    p = Poly((t**2 - t + 1) ** 3 * (t + 1), t)
    ms = angle_multiset(p)
    assert ms == {Fraction(1, 6): 3, Fraction(5, 6): 3, Fraction(1, 2): 1}


def test_refine_tightens_enclosure():
    recs = unit_circle_roots(Poly(2 * t**2 - 3 * t + 2, t))
    rec = recs[0]
    rec.refine(Fraction(1, 10**12))
    assert rec.hi - rec.lo <= Fraction(1, 10**12)


def test_separate_angles_avoid():
    recs = unit_circle_roots(Poly(2 * t**2 - 3 * t + 2, t))
    separate_angles(recs, avoid=[Fraction(1, 2)])
    assert all(not rec.contains(Fraction(1, 2)) for rec in recs)


def test_simplest_between():
    assert simplest_between(Fraction(0), Fraction(1, 6)) == Fraction(1, 7)
    assert simplest_between(Fraction(1, 3), Fraction(2, 3)) == Fraction(1, 2)
    assert simplest_between(Fraction(5, 6), Fraction(1)) == Fraction(6, 7)
    with pytest.raises(ValueError):
        simplest_between(Fraction(1, 2), Fraction(1, 2))


def test_rational_points_between_lie_in_gaps():
    recs = unit_circle_roots(Poly(t**2 - t + 1, t))
    pts = rational_points_between(recs)
    assert len(pts) == 3
    assert pts[0] < Fraction(1, 6) < pts[1] < Fraction(5, 6) < pts[2]


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(min_value=-4, max_value=4), min_size=2, max_size=6),
       st.lists(st.integers(min_value=-4, max_value=4), min_size=2, max_size=6))
def test_root_union_of_products(ca, cb):
    """Circle roots of p*q are the multiset union of the roots of p and q."""
    p, q = Poly(ca, t), Poly(cb, t)
    if p.is_zero or q.is_zero:
        return
    combined = angle_multiset(p * q)
    merged = angle_multiset(p)
    for key, m in angle_multiset(q).items():
        merged[key] = merged.get(key, 0) + m
    exact_combined = {k: v for k, v in combined.items() if isinstance(k, Fraction)}
    exact_merged = {k: v for k, v in merged.items() if isinstance(k, Fraction)}
    assert exact_combined == exact_merged
    assert sum(combined.values()) == sum(merged.values())
