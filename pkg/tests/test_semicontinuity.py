from fractions import Fraction

import pytest
from sympy import Poly

from linkspec.catalog import a_singularity, brieskorn, brieskorn_spectrum_oracle
from linkspec.hvs import Spectrum, extract_spectrum, interval_count, mod2_reduce
from linkspec.linalg import t
from linkspec.roots import unit_circle_roots
from linkspec.semicontinuity import (AlphaRecord, CobordismBettiData,
                                     DeformationInstance, admissible_alphas,
                                     check_infinity, check_local,
                                     check_local_to_global,
                                     local_global_bound, mk_bound,
                                     mk_bound_strict)
from linkspec.signatures import CirclePoint, circle_roots, lt_nullity, lt_signature


def test_mk_bound_a3_a2():
    rec = mk_bound(-3, -2, 0, 0, CobordismBettiData(6, 3, 2))
    assert (rec.lhs, rec.rhs, rec.holds) == (1, 1, True)


def test_mk_bound_trivial_and_failing():
    assert mk_bound(-2, -2, 0, 0, CobordismBettiData(5, 2, 2)).holds
    assert not mk_bound(4, 0, 0, 0, CobordismBettiData(4, 1, 1)).holds


def test_mk_bound_strict():
    rec = mk_bound_strict(-3, -2, 0, 1, b1_rel=3)
    assert rec.lhs == 2 and rec.holds
    with pytest.raises(ValueError):
        mk_bound_strict(0, 0, 0, 0, b1_rel=0, n=2)


def test_betti_validation():
    with pytest.raises(ValueError):
        CobordismBettiData(-1, 0, 0)


def test_local_global_bound_a3_a2():
    rec = local_global_bound(a_singularity(3), [a_singularity(2)],
                             CirclePoint(Fraction(1, 2)), smoothing_betti=6)
    assert (rec.lhs, rec.rhs, rec.holds) == (1, 1, True)


def test_local_global_bound_empty_locals():
    S = a_singularity(2)
    rec = local_global_bound(S, [], CirclePoint(Fraction(1, 2)), smoothing_betti=4)
    assert rec.lhs == abs(lt_signature(S, CirclePoint(Fraction(1, 2))))
    assert rec.rhs == 4 - S.mu + lt_nullity(S, CirclePoint(Fraction(1, 2)))


def test_local_global_bound_self():
    S = a_singularity(2)
    rec = local_global_bound(S, [S], CirclePoint(Fraction(1, 2)),
                             smoothing_betti=2 * S.mu)
    assert (rec.lhs, rec.rhs) == (0, 0)


def test_local_global_bound_dimension_mismatch():
    with pytest.raises(ValueError):
        local_global_bound(a_singularity(2, 1), [a_singularity(2, 2)],
                           CirclePoint(Fraction(1, 2)), smoothing_betti=4)


def test_admissible_alphas_examples():
    assert admissible_alphas([Fraction(1, 6), Fraction(5, 6)]) == \
        [Fraction(1, 12), Fraction(1, 2), Fraction(11, 12)]
    assert admissible_alphas([]) == [Fraction(1, 2)]
    assert admissible_alphas([Fraction(1, 3), Fraction(2, 3)]) == \
        [Fraction(1, 6), Fraction(1, 2), Fraction(5, 6)]


def test_admissible_alphas_avoid_enclosures():
    recs = unit_circle_roots(Poly(2 * t**2 - 3 * t + 2, t))
    alphas = admissible_alphas(recs)
    assert len(alphas) == 3
    for a in alphas:
        assert all(not r.contains(a) for r in recs)


def test_check_local_a3_a2():
    rep = check_local(DeformationInstance(central=a_singularity(3),
                                          locals=(a_singularity(2),)))
    assert rep.verdict == "holds"
    at_half = next(r for r in rep.records if r.alpha == Fraction(1, 2))
    assert (at_half.lhs_inside, at_half.rhs_inside) == (3, 2)
    assert (at_half.lhs_outside, at_half.rhs_outside) == (0, 0)


def test_check_local_identity_zero_slack():
    S = a_singularity(2)
    rep = check_local(DeformationInstance(central=S, locals=(S,)))
    assert rep.verdict == "holds"
    assert all(r.slack_inside == 0 and r.slack_outside == 0 for r in rep.records)


def test_check_local_reversed_fails():
    rep = check_local(DeformationInstance(central=a_singularity(2),
                                          locals=(a_singularity(3),)))
    assert rep.verdict == "fails"


def test_check_local_implied_by_bound():
    """Derivation chain: the inside inequality at admissible alpha follows
    from the signature bound with smoothing_betti = 2*mu(central)."""
    central, local = a_singularity(4), a_singularity(2)
    sp0, sp1 = extract_spectrum(central), extract_spectrum(local)
    for alpha in admissible_alphas(list(circle_roots(central)) + list(circle_roots(local))):
        p = CirclePoint(alpha)
        bound = local_global_bound(central, [local], p,
                                   smoothing_betti=2 * central.mu)
        assert bound.holds
        # -sigma + mu >= sum(-sigma_j + mu_j) == 2*(inside count) on each side
        lhs = -lt_signature(central, p) + central.mu
        rhs = -lt_signature(local, p) + local.mu
        assert lhs >= rhs
        assert lhs == 2 * interval_count(sp0, alpha).inside
        assert rhs == 2 * interval_count(sp1, alpha).inside


def test_check_infinity():
    sp_t = Spectrum.from_values([Fraction(3, 4), Fraction(1), Fraction(5, 4)])
    sp_0 = Spectrum.from_values([Fraction(5, 6), Fraction(7, 6)])
    rep = check_infinity(sp_t, sp_0, [Fraction(3, 4), Fraction(1, 4)])
    assert rep.verdict == "holds"
    assert check_infinity(sp_t, sp_t, []).verdict == "holds"
    sp_small = Spectrum.from_values([Fraction(1, 2)])
    sp_big = Spectrum.from_values([Fraction(1, 2), Fraction(3, 2)])
    assert check_infinity(sp_small, sp_big, [Fraction(1, 2)]).verdict == "fails"


def test_check_local_to_global():
    sp_inf = mod2_reduce(brieskorn_spectrum_oracle(2, 2, 3))
    rep = check_local_to_global(sp_inf, [Spectrum.from_values([Fraction(3, 2)])],
                                [Fraction(1, 3), Fraction(2, 3)])
    assert rep.verdict == "holds"
    at_half = next(r for r in rep.records if r.alpha == Fraction(1, 2))
    assert at_half.lhs_inside == 1 and at_half.rhs_inside == 0
    assert check_local_to_global(sp_inf, [], []).verdict == "holds"
    assert check_local_to_global(sp_inf, [sp_inf, sp_inf], []).verdict == "fails"


def test_report_json_shape():
    rep = check_local(DeformationInstance(central=a_singularity(2),
                                          locals=(a_singularity(1),)))
    data = rep.to_json()
    assert data["mode"] == "local" and data["verdict"] == rep.verdict
    assert all(set(r) >= {"alpha", "lhs_inside", "rhs_inside", "slack_inside",
                          "admissible"} for r in data["records"])


def test_instance_dimension_check():
    with pytest.raises(ValueError):
        DeformationInstance(central=a_singularity(2, 1),
                            locals=(a_singularity(2, 2),))
