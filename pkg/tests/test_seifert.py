import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Poly

from conftest import random_nondegenerate
from linkspec.linalg import t
from linkspec.seifert import (SeifertMatrix, alexander, intersection_form,
                              keef_reduce, monodromy, n0, pencil)


def test_validation():
    with pytest.raises(ValueError):
        SeifertMatrix(n=0, entries=((1,),))
    with pytest.raises(ValueError):
        SeifertMatrix(n=1, entries=((1, 2),))  # non-square
    with pytest.raises(ValueError):
        SeifertMatrix.from_dict({"n": 1, "matrix": [[0.5]]})
    with pytest.raises(ValueError):
        SeifertMatrix.from_dict({"n": True, "matrix": [[1]]})


def test_roundtrip_dict(trefoil):
    assert SeifertMatrix.from_dict(trefoil.to_dict()) == trefoil


def test_epsilon():
    assert SeifertMatrix(n=1, entries=((1,),)).epsilon == -1
    assert SeifertMatrix(n=2, entries=((1,),)).epsilon == 1


def test_alexander_trefoil(trefoil):
    assert alexander(trefoil) == Poly(t**2 - t + 1, t)


def test_alexander_empty():
    S = SeifertMatrix(n=1, entries=())
    assert alexander(S) == Poly(1, t)


def test_alexander_figure_eight(figure_eight):
    assert alexander(figure_eight) == Poly(t**2 - 3 * t + 1, t)


def test_alexander_normalization_strips_t_powers():
    # det S = 0 here; the t^k factor from the singular pencil is stripped
    S = SeifertMatrix(n=1, entries=((0, 1), (0, 1)))
    delta = alexander(S)
    assert delta.eval(0) != 0
    assert delta.LC() > 0


def test_n0_counts_common_kernel():
    S = SeifertMatrix(n=1, entries=((-1, 1, 0), (0, -1, 0), (0, 0, 0)))
    assert n0(S) == 1


def test_keef_reduce_nondegenerate(trefoil):
    dec = keef_reduce(trefoil)
    assert dec.n0 == 0 and not dec.warning
    assert dec.s_ndeg == trefoil.matrix()


def test_keef_reduce_padded(trefoil):
    padded = trefoil.pad(2)
    dec = keef_reduce(padded)
    assert dec.n0 == 2 and not dec.warning
    assert dec.s_ndeg.det() == trefoil.matrix().det()
    # transform is a rational congruence: P^T S P has the reduced block
    P = dec.transform
    conj = P.T * padded.matrix() * P
    assert conj[:2, :2] == dec.s_ndeg
    assert conj[2:, :] == sympy.zeros(2, 4) and conj[:, 2:] == sympy.zeros(4, 2)


def test_keef_warning_on_degenerate_but_no_common_kernel():
    # det = 0 but ker S and ker S^T intersect trivially
    S = SeifertMatrix(n=1, entries=((0, 1), (0, 1)))
    dec = keef_reduce(S)
    assert dec.n0 == 0 and dec.warning


def test_pencil_shape(trefoil):
    P = pencil(trefoil)
    assert Poly(P.det(), t) == Poly(t**2 - t + 1, t) * 1


def test_intersection_form_and_monodromy(trefoil):
    b = intersection_form(trefoil)
    assert b == sympy.Matrix([[0, 1], [-1, 0]])
    h = monodromy(trefoil)
    assert h == sympy.Matrix([[1, -1], [1, 0]])
    assert h.T * b * h == b


def test_monodromy_rejects_singular():
    S = SeifertMatrix(n=1, entries=((0,),))
    with pytest.raises(ValueError):
        monodromy(S)


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=0, max_value=2**32 - 1), st.integers(min_value=1, max_value=3))
def test_padding_stability(seed, k):
    """Padding with zero rows/columns never changes the Alexander polynomial."""
    S = random_nondegenerate(random.Random(seed), max_size=4)
    assert alexander(S.pad(k)) == alexander(S)
    assert n0(S.pad(k)) == n0(S) + k


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_alexander_degree_and_symmetry(seed):
    S = random_nondegenerate(random.Random(seed), max_size=5)
    delta = alexander(S)
    assert delta.degree() == S.mu
    # det(tS + eps S^T) is (anti)symmetric under t -> 1/t up to units
    rev = Poly(list(reversed(delta.all_coeffs())), t)
    assert rev == delta or rev == -delta
