"""Milnor numbers and named-type recognition for curve singularities."""

from __future__ import annotations

from dataclasses import dataclass

from .curves import PlaneCurve, ProjPoint, localize, singular_points
from .errors import (CurvelabError, ExtensionLimitError,
                     NonIsolatedCriticalPointError, NotReducedError)
from .lct import TK_TAGS, tk_germ
from .mpoly import MPoly, mpgcd
from .numberfield import NumberField
from .rationals import Rat
from .resolution import (CurveGerm, EquisingularityType, ResolutionTree,
                         resolve)
from . import kpoly


def milnor(curve: PlaneCurve, p: ProjPoint, ext_bound: int | None = None) -> int:
    """Milnor number from the resolution: sum of m_q (m_q - 1) over infinitely
    near points minus branches plus one; 0 at smooth points."""
    if not curve.reduced:
        raise NotReducedError("Milnor numbers are computed for reduced curves")
    germ = localize(curve, p)
    tree = resolve(germ, ext_bound=ext_bound)
    if not tree.resolved:
        raise ExtensionLimitError("partial resolution")
    return tree.milnor_number()


def _intersection_multiplicity_origin(f: MPoly, g: MPoly) -> int:
    """Local intersection number of two bivariate polynomials at the origin,
    by degree reduction in x and splitting off factors of y."""
    if f.is_zero() or g.is_zero():
        raise NonIsolatedCriticalPointError("a partial derivative vanishes identically")
    h = mpgcd(f, g)
    if not h.is_constant() and h.constant_term().is_zero():
        raise NonIsolatedCriticalPointError("the critical locus contains a curve "
                                            "through the point")
    field = f.field
    y_poly = MPoly.from_rationals(f.vars, {(0, 1): 1}).to_field(field)

    def x_slice(p: MPoly) -> list:
        out = [field.zero()] * (p.degree_in("x") + 1)
        for e, c in p.terms.items():
            if e[1] == 0:
                out[e[0]] = out[e[0]] + c
        return kpoly.strip(out)

    total = 0
    guard = 0
    while True:
        guard += 1
        if guard > 10000:
            raise CurvelabError("intersection multiplicity did not terminate")
        if not f.constant_term().is_zero() or not g.constant_term().is_zero():
            return total
        a = x_slice(f)
        b = x_slice(g)
        if not a and not b:
            raise NonIsolatedCriticalPointError("the critical locus contains y = 0")
        if not a:
            from .mpoly import divexact

            f = divexact(f, y_poly)
            ordg = min(i for i, c in enumerate(b) if not c.is_zero())
            total += ordg
            continue
        if not b:
            from .mpoly import divexact

            g = divexact(g, y_poly)
            orda = min(i for i, c in enumerate(a) if not c.is_zero())
            total += orda
            continue
        da, db = kpoly.degree(a), kpoly.degree(b)
        if da > db:
            f, g = g, f
            a, b, da, db = b, a, db, da
        # g <- lc(a) g - lc(b) x^(db-da) f  drops deg of g(x, 0)
        la = MPoly.constant(f.vars, a[-1])
        lb = MPoly.constant(f.vars, b[-1])
        shift = MPoly.from_rationals(f.vars, {(db - da, 0): 1}).to_field(field)
        g = g * la - f * lb * shift


def milnor_oracle(curve: PlaneCurve, p: ProjPoint) -> int:
    """Independent Milnor number: intersection multiplicity of the two
    partials of the local equation at the origin."""
    if not p.is_rational():
        raise CurvelabError("the oracle is restricted to rational points")
    germ = localize(curve, p)
    f = germ.equation
    return _intersection_multiplicity_origin(f.derivative("x"), f.derivative("y"))


@dataclass(frozen=True)
class SingularityClass:
    tag: str          # smooth | A | cone | T | K | tilde_T | tilde_K |
                      # ploski_even | ploski_odd | other
    param: int | None  # n for A(n), r for T/K families, d for cone
    multiplicity: int
    mu: int
    branches: int

    def to_json(self) -> dict:
        out = {"tag": self.tag, "m": self.multiplicity, "mu": self.mu,
               "branches": self.branches}
        if self.param is not None:
            key = {"A": "n", "cone": "d"}.get(self.tag, "r")
            out[key] = self.param
        return out


def _all_branches_smooth(tree: ResolutionTree) -> bool:
    root = tree.divisors[0].id if tree.divisors else None
    for b in tree.branches:
        if not b.centers:
            return True
        if tree.branch_multiplicities(b)[b.centers[0]] != 1:
            return False
    return True


def _ploski_tag(tree: ResolutionTree, d: int) -> str | None:
    """Germ-level reading of the Ploski configurations: smooth branches with
    the pairwise contact pattern of conics (4) plus, in the odd case, one
    common tangent line (contact 2)."""
    total = tree.branch_count()
    m = tree.germ.multiplicity()
    if not _all_branches_smooth(tree):
        return None
    units: list[tuple[int, int]] = []  # (branch index, copies)
    for i, b in enumerate(tree.branches):
        units.append((i, b.count))
    if d % 2 == 0:
        if d < 4 or m != d // 2 or total != d // 2 or total < 2:
            return None
        for i, (bi, ci) in enumerate(units):
            if ci > 1 and tree.conjugate_contact(tree.branches[bi]) != 4:
                return None
            for bj, _cj in units[i + 1:]:
                if tree.contact(tree.branches[bi], tree.branches[bj]) != 4:
                    return None
        return "ploski_even"
    if d < 5 or m != (d + 1) // 2 or total != (d + 1) // 2:
        return None
    # find the unique line branch: contact 2 with every conic branch
    line_candidates = []
    for i, (bi, ci) in enumerate(units):
        others = [bj for j, (bj, _c) in enumerate(units) if j != i]
        if ci == 1 and all(tree.contact(tree.branches[bi], tree.branches[bj]) == 2
                           for bj in others):
            line_candidates.append(i)
    if len(line_candidates) != 1:
        return None
    li = line_candidates[0]
    conics = [bi for j, (bi, ci) in enumerate(units) if j != li]
    for i, bi in enumerate(conics):
        if tree.branches[bi].count > 1 and tree.conjugate_contact(tree.branches[bi]) != 4:
            return None
        for bj in conics[i + 1:]:
            if tree.contact(tree.branches[bi], tree.branches[bj]) != 4:
                return None
    return "ploski_odd"


def classify(curve: PlaneCurve, p: ProjPoint,
             ext_bound: int | None = None) -> SingularityClass:
    """Equisingularity comparison against the named normal forms, in priority
    order: cone, then the T/K families at r = m_P, then A(mu) for double
    points, then the Ploski patterns, else Other."""
    germ = localize(curve, p)
    m = germ.multiplicity()
    if m <= 1:
        return SingularityClass("smooth", None, m, 0, 1)
    d = curve.degree
    tree = resolve(germ, ext_bound=ext_bound)
    if not tree.resolved:
        raise ExtensionLimitError("partial resolution")
    mu = tree.milnor_number()
    branches = tree.branch_count()
    if m == d:
        return SingularityClass("cone", d, m, mu, branches)
    ty = EquisingularityType(tree)
    for tag in TK_TAGS:
        model = EquisingularityType(resolve(tk_germ(tag, m)))
        if ty == model:
            return SingularityClass(tag, m, m, mu, branches)
    if m == 2:
        return SingularityClass("A", mu, m, mu, branches)
    ptag = _ploski_tag(tree, d)
    if ptag is not None:
        return SingularityClass(ptag, None, m, mu, branches)
    return SingularityClass("other", None, m, mu, branches)


@dataclass
class PloskiReport:
    degree: int
    bound: int                 # (d-1)^2 - floor(d/2)
    max_mu: int | None
    max_point: ProjPoint | None
    equality: bool
    recognized_ploski: bool
    parity: str | None

    def to_json(self) -> dict:
        out = {"degree": self.degree, "bound": self.bound,
               "max_mu": self.max_mu, "equality": self.equality,
               "recognized_ploski": self.recognized_ploski}
        if self.parity:
            out["parity"] = self.parity
        if self.max_point is not None:
            out["max_point"] = self.max_point.to_json()
        return out


def ploski_extremality_check(curve: PlaneCurve,
                             ext_bound: int | None = None) -> PloskiReport:
    """Check max mu over points with m_P < d against (d-1)^2 - floor(d/2) and
    whether the curve is recognized as a Ploski curve at the maximizing point."""
    d = curve.degree
    locus = singular_points(curve, ext_bound=ext_bound)
    if not locus.complete:
        raise ExtensionLimitError("singular locus search was truncated")
    bound = (d - 1) ** 2 - d // 2
    best = None
    best_point = None
    for rec in locus.points:
        if rec.multiplicity >= d:
            continue
        mu = milnor(curve, rec.point, ext_bound=ext_bound)
        if best is None or mu > best:
            best = mu
            best_point = rec.point
    recognized = False
    parity = None
    if best is not None and best == bound:
        cls = classify(curve, best_point, ext_bound=ext_bound)
        if cls.tag in ("ploski_even", "ploski_odd"):
            recognized = True
            parity = "even" if cls.tag == "ploski_even" else "odd"
        elif d == 4 and cls.tag == "A" and cls.param == 7:
            recognized = True
            parity = "even"
    return PloskiReport(d, bound, best, best_point, best == bound, recognized, parity)
