"""Log canonical thresholds: from resolutions, from the monomial closed form,
per point, globally, and the five-smallest-thresholds classification."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .curves import PlaneCurve, ProjPoint, SingularLocus, localize, singular_points
from .errors import (CurvelabError, ExtensionLimitError, NonReducedModelError,
                     NotReducedError, UnresolvedError)
from .mpoly import MPoly
from .numberfield import QQ
from .rationals import Rat
from .resolution import (CurveGerm, EquisingularityType, ResolutionTree,
                         resolve)

GERM_VARS = ("x", "y")


@dataclass(frozen=True)
class LctReport:
    value: object            # exact rational
    witness_divisor: int | None
    point: ProjPoint | None

    def to_json(self) -> dict:
        from .rationals import rat_str

        out = {"lct": rat_str(self.value)}
        if self.witness_divisor is not None:
            out["witness_divisor"] = self.witness_divisor
        if self.point is not None:
            out["point"] = self.point.to_json()
        return out


def lct_from_resolution(tree: ResolutionTree, point: ProjPoint | None = None) -> LctReport:
    """sup of lambda with lambda*m_E - a_E <= 1 on every exceptional divisor and
    lambda <= 1 on the reduced curve itself: min(1, min (1+a)/m)."""
    if not tree.resolved:
        raise UnresolvedError("resolution is partial (extension limit)")
    best = None
    witness = None
    for d in tree.divisors:
        val = Rat(1 + d.a, d.m)
        if best is None or val < best:
            best = val
            witness = d.id
    one = Rat(1)
    if best is None or best > one:
        return LctReport(one, None, point)
    return LctReport(best, witness, point)


def lct_at_point(curve: PlaneCurve, p: ProjPoint,
                 ext_bound: int | None = None) -> LctReport:
    """localize -> resolve -> threshold; exactly 1 at smooth points."""
    if not curve.reduced:
        raise NotReducedError("lct is defined here for reduced curves only")
    germ = localize(curve, p)
    if germ.multiplicity() <= 1:
        return LctReport(Rat(1), None, p)
    tree = resolve(germ, ext_bound=ext_bound)
    return lct_from_resolution(tree, point=p)


@dataclass
class GlobalLct:
    value: object
    witness: ProjPoint | None
    complete: bool

    def to_json(self) -> dict:
        from .rationals import rat_str

        out = {"lct": rat_str(self.value), "complete": self.complete}
        if self.witness is not None:
            out["witness_point"] = self.witness.to_json()
        return out


def lct_global(curve: PlaneCurve, ext_bound: int | None = None,
               locus: SingularLocus | None = None) -> GlobalLct:
    """Minimum of the per-point thresholds over the singular locus, capped at 1.
    When the locus search was truncated the value is only an upper bound and
    the report says so."""
    if locus is None:
        locus = singular_points(curve, ext_bound=ext_bound)
    best = Rat(1)
    witness = None
    complete = locus.complete
    for rec in locus.points:
        try:
            rep = lct_at_point(curve, rec.point, ext_bound=ext_bound)
        except ExtensionLimitError:
            complete = False
            continue
        if rep.value < best:
            best = rep.value
            witness = rec.point
    return GlobalLct(best, witness, complete)


def kuwata_lct(n1: int, n2: int, k: int, m1: int, m2: int):
    """Closed-form threshold of the monomial-plus-binomial germ
    x^n1 y^n2 (x^(k m1) + y^(k m2)): min of 1/n1, 1/n2 and
    (1/m1 + 1/m2) / (k + n1/m1 + n2/m2), with 1/0 read as +infinity."""
    if min(n1, n2, k, m1, m2) < 0:
        raise NonReducedModelError("parameters must be non-negative")
    if m1 == 0 or m2 == 0:
        raise NonReducedModelError("m1 and m2 must be positive")
    if n1 > 1 or n2 > 1:
        raise NonReducedModelError("a repeated coordinate axis is not reduced")
    if n1 + n2 == 0 and k == 0:
        raise NonReducedModelError("the germ is a unit")
    third = (Rat(1, m1) + Rat(1, m2)) / (Rat(k) + Rat(n1, m1) + Rat(n2, m2))
    best = third
    if n1:
        best = min(best, Rat(1, n1))
    if n2:
        best = min(best, Rat(1, n2))
    return best


def kuwata_germ(n1: int, n2: int, k: int, m1: int, m2: int) -> CurveGerm:
    """The actual germ of the closed form, for resolution cross-checks."""
    kuwata_lct(n1, n2, k, m1, m2)  # validate
    terms = {}
    a, b = k * m1, k * m2
    if k == 0:
        terms[(n1, n2)] = Rat(2)
    else:
        terms[(n1 + a, n2)] = Rat(1)
        key = (n1, n2 + b)
        terms[key] = terms.get(key, Rat(0)) + Rat(1)
    return CurveGerm(MPoly.from_rationals(GERM_VARS, terms))


# -- the five smallest thresholds ----------------------------------------------

TK_TAGS = ("T", "K", "tilde_T", "tilde_K")


def tk_germ(tag: str, r: int) -> CurveGerm:
    """Normal-form germs: T_r: x^r = x y^r; K_r: x^r = y^(r+1);
    tilde T_r: y x^(r-1) = x y^r; tilde K_r: y x^(r-1) = y^(r+1)."""
    if tag == "T":
        terms = {(r, 0): 1, (1, r): -1}
    elif tag == "K":
        terms = {(r, 0): 1, (0, r + 1): -1}
    elif tag == "tilde_T":
        terms = {(r - 1, 1): 1, (1, r): -1}
    elif tag == "tilde_K":
        terms = {(r - 1, 1): 1, (0, r + 1): -1}
    else:
        raise CurvelabError(f"unknown normal-form tag {tag!r}")
    return CurveGerm(MPoly.from_rationals(GERM_VARS, terms))


@lru_cache(maxsize=None)
def _tk_type(tag: str, r: int) -> EquisingularityType:
    return EquisingularityType(resolve(tk_germ(tag, r)))


@lru_cache(maxsize=None)
def _ploski_quartic_type() -> EquisingularityType:
    germ = CurveGerm(MPoly.from_rationals(GERM_VARS, {(0, 2): 1, (8, 0): -1}))
    return EquisingularityType(resolve(germ))  # A7: two smooth branches, contact 4


def tk_predicted_lct(tag: str, d: int):
    if tag == "T":
        return Rat(2 * d - 3, (d - 1) ** 2)
    if tag == "K":
        return Rat(2 * d - 1, d * (d - 1))
    if tag == "tilde_T":
        return Rat(2 * d - 5, d * d - 3 * d + 1)
    if tag == "tilde_K":
        return Rat(2 * d - 3, d * (d - 2))
    raise CurvelabError(f"unknown normal-form tag {tag!r}")


@dataclass(frozen=True)
class ThresholdClass:
    tag: str                      # cone_at_point | T | K | tilde_T | tilde_K |
                                  # ploski_quartic | above_fifth_threshold
    r: int | None
    predicted_lct: object | None

    def to_json(self) -> dict:
        from .rationals import rat_str

        out = {"tag": self.tag}
        if self.r is not None:
            out["r"] = self.r
        if self.predicted_lct is not None:
            out["predicted_lct"] = rat_str(self.predicted_lct)
        return out


def threshold_class(curve: PlaneCurve, p: ProjPoint,
                    ext_bound: int | None = None) -> ThresholdClass:
    """Which of the five worst singularities (if any) the curve has at p.
    For each tagged case the table value is recomputed from the resolution
    and must agree exactly."""
    d = curve.degree
    germ = localize(curve, p)
    m = germ.multiplicity()
    if m < 2:
        raise CurvelabError("threshold classification needs a singular point")
    tree = resolve(germ, ext_bound=ext_bound)
    actual = lct_from_resolution(tree).value

    def confirmed(tag, r, predicted):
        if predicted != actual:
            raise CurvelabError(
                f"classified {tag} but resolution lct {actual} != table {predicted}")
        return ThresholdClass(tag, r, predicted)

    if m == d:
        return confirmed("cone_at_point", None, Rat(2, d))
    if m == d - 1:
        ty = EquisingularityType(tree)
        for tag in TK_TAGS:
            if ty == _tk_type(tag, d - 1):
                return confirmed(tag, d - 1, tk_predicted_lct(tag, d))
    if d == 4 and m == 2 and EquisingularityType(tree) == _ploski_quartic_type():
        return confirmed("ploski_quartic", None, Rat(5, 8))
    return ThresholdClass("above_fifth_threshold", None, None)
