import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_nondegenerate
from linkspec.seifert import SeifertMatrix, n0
from linkspec.signatures import (CirclePoint, circle_roots, hermitian_pencil,
                                 lt_nullity, lt_signature, signature_profile)


def test_circle_point_domain():
    with pytest.raises(ValueError):
        CirclePoint(Fraction(0))
    with pytest.raises(ValueError):
        CirclePoint(Fraction(1))


def test_trefoil_values(trefoil):
    assert lt_signature(trefoil, CirclePoint(Fraction(1, 2))) == -2
    assert lt_nullity(trefoil, CirclePoint(Fraction(1, 2))) == 0
    assert lt_nullity(trefoil, CirclePoint(Fraction(1, 6))) == 1
    assert lt_signature(trefoil, CirclePoint(Fraction(1, 6))) == -1


def test_trefoil_profile(trefoil):
    prof = signature_profile(trefoil)
    assert [r.exact for r in prof.jumps] == [Fraction(1, 6), Fraction(5, 6)]
    assert [iv.sigma for iv in prof.intervals] == [0, -2, 0]
    assert all(iv.nullity == 0 for iv in prof.intervals)
    assert [(jv.sigma, jv.nullity) for jv in prof.at_jumps] == [(-1, 1), (-1, 1)]
    assert prof.sigma_at(Fraction(1, 2)) == -2


def test_figure_eight_profile(figure_eight):
    prof = signature_profile(figure_eight)
    assert prof.jumps == ()
    assert [iv.sigma for iv in prof.intervals] == [0]


def test_irrational_jumps():
    S = SeifertMatrix(n=1, entries=((-1, 1), (0, -2)))
    prof = signature_profile(S)
    assert len(prof.jumps) == 2 and all(not r.is_exact for r in prof.jumps)
    assert [iv.sigma for iv in prof.intervals] == [0, -2, 0]
    assert not any(jv.evaluated for jv in prof.at_jumps)


def test_even_n_hermitian_pencil():
    S = SeifertMatrix(n=2, entries=((1, 0), (1, 1)))
    H = hermitian_pencil(S, CirclePoint(Fraction(1, 3)))
    assert abs(H - H.conj().T).max() < 1e-12


def test_nullity_at_non_root_is_n0(trefoil):
    padded = trefoil.pad(2)
    assert lt_nullity(padded, CirclePoint(Fraction(1, 2))) == 2
    assert lt_signature(padded, CirclePoint(Fraction(1, 2))) == -2


def test_profile_of_empty_matrix():
    S = SeifertMatrix(n=1, entries=())
    prof = signature_profile(S)
    assert prof.jumps == () and [iv.sigma for iv in prof.intervals] == [0]


@settings(max_examples=15, deadline=None)
@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_nullity_constant_between_roots(seed):
    """Away from Alexander roots, nullity equals n0 and sigma is constant."""
    S = random_nondegenerate(random.Random(seed), max_size=5)
    prof = signature_profile(S, evaluate_jumps=False)
    for iv in prof.intervals:
        assert iv.nullity == n0(S)
        width = iv.hi - iv.lo
        for shift in (Fraction(1, 5), Fraction(4, 5)):
            a = iv.lo + width * shift
            if any(r.contains(a) for r in prof.jumps if not r.is_exact):
                continue
            assert lt_nullity(S, CirclePoint(a)) == n0(S)
            assert lt_signature(S, CirclePoint(a)) == iv.sigma


@settings(max_examples=10, deadline=None)
@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_conjugation_symmetry(seed):
    """n odd: sigma(1-a) = sigma(a); n even: sigma(1-a) = -sigma(a)."""
    rng = random.Random(seed)
    for n in (1, 2):
        S = random_nondegenerate(rng, max_size=4, n=n)
        for a in (Fraction(1, 3), Fraction(2, 7)):
            rec = next((r for r in circle_roots(S)
                        if (r.is_exact and r.exact in (a, 1 - a))
                        or (not r.is_exact and (r.contains(a) or r.contains(1 - a)))), None)
            if rec is not None:
                continue
            s1 = lt_signature(S, CirclePoint(a))
            s2 = lt_signature(S, CirclePoint(1 - a))
            assert s2 == (s1 if n % 2 else -s1)
