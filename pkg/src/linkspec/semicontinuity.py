"""Mechanical verification of the semicontinuity inequalities.

Three modes, all reducing to interval counts of mod-2 spectra at admissible
angles alpha (xi = e^{2 pi i alpha} not an eigenvalue of the relevant
monodromy):

  * local:  central singularity vs the singular points of a nearby fiber;
  * infinity: family of spectrally tame polynomials, spectrum at infinity;
  * local_to_global: spectrum at infinity vs sum of local spectra.

Each asserts, for every admissible alpha,

    |Sp_central cap (alpha, alpha+1)|  >=  sum_j |Sp_j cap (alpha, alpha+1)|,
    |Sp_central minus [alpha, alpha+1]| >= sum_j |Sp_j minus [alpha, alpha+1]|.

Also implemented: the generalized Murasugi-Kawauchi bound

    |sigma0(xi) - sigma1(xi)| <= b_n(Sigma0 u Y u Sigma1) - b_n(Sigma0)
                                 - b_n(Sigma1) + null0(xi) + null1(xi),

its local-to-global form (the `boleadoras' cobordism), and, as a strict
n = 1-only optional check, the classical refinement

    |sigma0 - sigma1| + |null0 - null1| <= b_1(Y, M0),

which is open in higher dimensions and never contributes to verdicts for
n >= 2.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .hvs import Spectrum, extract_spectrum, interval_count
from .roots import RootAngle, separate_angles
from .seifert import SeifertMatrix
from .signatures import CirclePoint, circle_roots, lt_nullity, lt_signature


# ---------------------------------------------------------------------------
# Murasugi-Kawauchi bounds


@dataclass(frozen=True)
class CobordismBettiData:
    """Middle Betti numbers of the glued cobordism and the two Seifert
    surfaces."""

    b_n_total: int
    b_n_sigma0: int
    b_n_sigma1: int

    def __post_init__(self):
        if min(self.b_n_total, self.b_n_sigma0, self.b_n_sigma1) < 0:
            raise ValueError("Betti numbers must be non-negative")


@dataclass(frozen=True)
class BoundRecord:
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs

    @property
    def slack(self) -> int:
        return self.rhs - self.lhs


def mk_bound(sigma0: int, sigma1: int, null0: int, null1: int,
             betti: CobordismBettiData) -> BoundRecord:
    """Generalized Murasugi-Kawauchi inequality for a link cobordism."""
    lhs = abs(sigma0 - sigma1)
    rhs = (betti.b_n_total - betti.b_n_sigma0 - betti.b_n_sigma1
           + null0 + null1)
    return BoundRecord(lhs=lhs, rhs=rhs)


def mk_bound_strict(sigma0: int, sigma1: int, null0: int, null1: int,
                    b1_rel: int, n: int = 1) -> BoundRecord:
    """Classical refinement |sigma0 - sigma1| + |null0 - null1| <= b_1(Y, M0).
    Only meaningful for n = 1; for n >= 2 the inequality is open and this
    raises rather than contribute to any verdict."""
    if n != 1:
        raise ValueError("the strict inequality is only known for n = 1")
    return BoundRecord(lhs=abs(sigma0 - sigma1) + abs(null0 - null1), rhs=b1_rel)


def local_global_bound(central: SeifertMatrix, locals: Sequence[SeifertMatrix],
                       p: CirclePoint, smoothing_betti: int) -> BoundRecord:
    """Local-to-global signature bound: |sigma_M - sum_j sigma_j| bounded by
    smoothing_betti - mu(central) - sum mu_j + nullities."""
    if any(L.n != central.n for L in locals):
        raise ValueError("all matrices must share the dimension parameter n")
    sig = lt_signature(central, p)
    nul = lt_nullity(central, p)
    lhs = abs(sig - sum(lt_signature(L, p) for L in locals))
    rhs = (smoothing_betti - central.mu - sum(L.mu for L in locals)
           + nul + sum(lt_nullity(L, p) for L in locals))
    return BoundRecord(lhs=lhs, rhs=rhs)


# ---------------------------------------------------------------------------
# Admissible angles


AngleLike = Union[Fraction, RootAngle]


def admissible_alphas(forbidden: Iterable[AngleLike]) -> list[Fraction]:
    """Exact midpoints of the open intervals of (0,1) minus the forbidden
    angles (the first and last midpoints serve as the near-0 and near-1
    representatives).  Enclosure angles are first refined to be pairwise
    disjoint; returned alphas avoid every forbidden angle exactly."""
    exact: list[tuple[Fraction, Fraction]] = []
    enclosed: list[RootAngle] = []
    for a in forbidden:
        if isinstance(a, RootAngle):
            if a.is_exact:
                if 0 < a.exact < 1:
                    exact.append((a.exact, a.exact))
            else:
                enclosed.append(a)
        else:
            a = Fraction(a)
            if 0 < a < 1:
                exact.append((a, a))
    if enclosed:
        separate_angles(enclosed, avoid=[x for x, _ in exact])
        exact.extend((r.lo, r.hi) for r in enclosed)
    spans = sorted(set(exact))
    bounds = [(Fraction(0), Fraction(0))] + spans + [(Fraction(1), Fraction(1))]
    out = []
    for i in range(len(bounds) - 1):
        lo, hi = bounds[i][1], bounds[i + 1][0]
        if lo < hi:
            out.append((lo + hi) / 2)
    return out


# ---------------------------------------------------------------------------
# Reports


@dataclass(frozen=True)
class AlphaRecord:
    alpha: Fraction
    lhs_inside: int
    rhs_inside: int
    lhs_outside: int
    rhs_outside: int
    admissible: bool = True

    @property
    def slack_inside(self) -> int:
        return self.lhs_inside - self.rhs_inside

    @property
    def slack_outside(self) -> int:
        return self.lhs_outside - self.rhs_outside

    @property
    def holds(self) -> bool:
        return self.slack_inside >= 0 and self.slack_outside >= 0

    def to_json(self) -> dict:
        return {
            "alpha": f"{self.alpha.numerator}/{self.alpha.denominator}",
            "lhs_inside": self.lhs_inside, "rhs_inside": self.rhs_inside,
            "lhs_outside": self.lhs_outside, "rhs_outside": self.rhs_outside,
            "slack_inside": self.slack_inside, "slack_outside": self.slack_outside,
            "admissible": self.admissible,
        }


@dataclass(frozen=True)
class SemicontinuityReport:
    mode: str
    records: tuple[AlphaRecord, ...]

    @property
    def verdict(self) -> str:
        admissible = [r for r in self.records if r.admissible]
        if not admissible:
            return "vacuous"
        return "holds" if all(r.holds for r in admissible) else "fails"

    def to_json(self) -> dict:
        return {"mode": self.mode,
                "records": [r.to_json() for r in self.records],
                "verdict": self.verdict}

    def to_json_str(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2) + "\n"


@dataclass(frozen=True)
class DeformationInstance:
    """A central singularity (or link at infinity) deformed into local
    singular points."""

    central: SeifertMatrix
    locals: tuple[SeifertMatrix, ...]
    declared_tame: bool = True

    def __post_init__(self):
        object.__setattr__(self, "locals", tuple(self.locals))
        if any(L.n != self.central.n for L in self.locals):
            raise ValueError("all matrices in an instance must share n")


def _count_report(mode: str, sp_central: Spectrum, sp_locals: Sequence[Spectrum],
                  forbidden: Iterable[AngleLike]) -> SemicontinuityReport:
    records = []
    for alpha in admissible_alphas(forbidden):
        c = interval_count(sp_central, alpha)
        loc = [interval_count(sp, alpha) for sp in sp_locals]
        records.append(AlphaRecord(
            alpha=alpha,
            lhs_inside=c.inside, rhs_inside=sum(x.inside for x in loc),
            lhs_outside=c.outside, rhs_outside=sum(x.outside for x in loc)))
    return SemicontinuityReport(mode=mode, records=tuple(records))


def check_local(inst: DeformationInstance) -> SemicontinuityReport:
    """Semicontinuity of the mod-2 spectrum under local deformation, checked
    at midpoints between the eigenvalue angles of the central monodromy."""
    sp0 = extract_spectrum(inst.central)
    sps = [extract_spectrum(L) for L in inst.locals]
    forbidden = list(circle_roots(inst.central))
    return _count_report("local", sp0, sps, forbidden)


def check_infinity(sp_t: Spectrum, sp_0: Spectrum,
                   forbidden: Iterable[AngleLike]) -> SemicontinuityReport:
    """Semicontinuity at infinity for a family of spectrally tame
    polynomials: generic-t spectrum dominates the special fiber's."""
    return _count_report("infinity", sp_t, [sp_0], forbidden)


def check_local_to_global(sp_inf: Spectrum, locals: Sequence[Spectrum],
                          forbidden: Iterable[AngleLike]) -> SemicontinuityReport:
    """Spectrum at infinity vs the sum of the local spectra of one fiber."""
    return _count_report("local_to_global", sp_inf, list(locals), forbidden)
