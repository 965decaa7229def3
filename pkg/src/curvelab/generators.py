"""Deterministic constructors for the named curves and surfaces, plus seeded
random reduced curves.  Every generator's output is re-checked by the
independent analysis path (classifier / resolution), never by its own algebra.
"""

from __future__ import annotations

import random
from itertools import combinations

from .classify import classify
from .curves import PLANE_VARS, PlaneCurve, ProjPoint, localize
from .errors import (CurvelabError, DuplicateSlopeError, NonReducedResultError,
                     ParameterClashError, UnknownNameError)
from .mpoly import MPoly, squarefree_part
from .numberfield import QQ
from .parsing import parse_polynomial
from .rationals import Rat
from .resolution import resolve

P0 = ProjPoint.from_rationals([0, 0, 1])

SURFACE_VARS = ("x", "y", "z", "w")


def _poly(text: str, vars=PLANE_VARS) -> MPoly:
    return parse_polynomial(text, vars)


def cone_curve(d: int, slopes) -> PlaneCurve:
    """Union of d distinct lines through [0:0:1]: slope s gives y = s x,
    the symbol "inf" (or None) gives x = 0."""
    slopes = list(slopes)
    if len(slopes) != d:
        raise CurvelabError(f"need exactly {d} slopes")
    seen = set()
    form = MPoly.from_rationals(PLANE_VARS, {(0, 0, 0): 1})
    for s in slopes:
        if s in ("inf", None):
            key = "inf"
            line = _poly("x")
        else:
            key = Rat(s)
            line = _poly("y") - _poly("x").scale_rat(Rat(s))
        if key in seen:
            raise DuplicateSlopeError(f"slope {key} repeated")
        seen.add(key)
        form = form * line
    return PlaneCurve(form)


def ploski_curve(d: int, params=None) -> PlaneCurve:
    """A Ploski curve of degree d: for even d the union of d/2 smooth conics
    y z - x^2 - c_i y^2 with pairwise contact 4 at [0:0:1]; for odd d the same
    with (d-1)/2 conics plus their common tangent line y = 0.

    The pairwise contact and tangency claims are verified through the
    resolution engine, not the construction."""
    if d % 2 == 0:
        if d < 4:
            raise CurvelabError("even Ploski curves need degree >= 4")
        nconics = d // 2
    else:
        if d < 5:
            raise CurvelabError("odd Ploski curves need degree >= 5")
        nconics = (d - 1) // 2
    if params is None:
        params = [Rat(i + 1) for i in range(nconics)]
    params = [Rat(c) for c in params]
    if len(params) != nconics:
        raise ParameterClashError(f"need {nconics} parameters")
    if len(set(params)) != nconics or any(c == 0 for c in params):
        raise ParameterClashError("parameters must be distinct and nonzero")
    conic_base = _poly("y*z - x^2")
    ysq = _poly("y^2")
    form = MPoly.from_rationals(PLANE_VARS, {(0, 0, 0): 1})
    conics = []
    for c in params:
        conic = conic_base - ysq.scale_rat(c)
        conics.append(conic)
        form = form * conic
    if d % 2:
        form = form * _poly("y")
    curve = PlaneCurve(form)
    _verify_ploski(curve, conics, odd=bool(d % 2))
    return curve


def _verify_ploski(curve: PlaneCurve, conics, odd: bool):
    # each conic smooth, and the branch contacts at P0 are 4 (conic pairs)
    # and 2 (line vs conic), measured on the resolved germ
    for conic in conics:
        cc = PlaneCurve(conic)
        from .curves import singular_points

        if singular_points(cc).points:
            raise ParameterClashError("a conic factor is singular")
    tree = resolve(localize(curve, P0))
    branches = tree.branches
    expected = len(conics) + (1 if odd else 0)
    if tree.branch_count() != expected:
        raise ParameterClashError("branch count at the common point is wrong")
    contacts = sorted(tree.contact(b1, b2)
                      for b1, b2 in combinations(branches, 2))
    npairs = len(conics) * (len(conics) - 1) // 2
    want = sorted([4] * npairs + ([2] * len(conics) if odd else []))
    if contacts != want:
        raise ParameterClashError(f"contact pattern {contacts} != {want}")


TK_COEFFS = {"T": (1, 0, 1, 0), "K": (1, 0, 0, 1),
             "tilde_T": (0, 1, 1, 0), "tilde_K": (0, 1, 0, 1)}


def tk_curve(d: int, tag: str, coeffs=None) -> PlaneCurve:
    """The explicit degree-d family
    alpha x^(d-1) z + beta y x^(d-2) z = gamma x y^(d-1) + delta y^d
    + sum a_i x^i y^(d-i), realizing a T/K/tilde T/tilde K singularity of
    index d-1 at [0:0:1]."""
    if d < 4:
        raise CurvelabError("the family needs degree >= 4")
    if tag not in TK_COEFFS:
        raise CurvelabError(f"unknown tag {tag!r}")
    alpha, beta, gamma, delta = TK_COEFFS[tag]
    terms: dict = {}

    def put(e, c):
        if c:
            terms[e] = terms.get(e, Rat(0)) + Rat(c)

    put((d - 1, 0, 1), alpha)
    put((d - 2, 1, 1), beta)
    put((1, d - 1, 0), -gamma)
    put((0, d, 0), -delta)
    if coeffs:
        a = dict(coeffs)
        for i, ai in a.items():
            if not 2 <= i <= d:
                raise CurvelabError("extra coefficients are indexed 2..d")
            put((i, d - i, 0), -Rat(ai))
    form = MPoly.from_rationals(PLANE_VARS, terms)
    _, reduced = squarefree_part(form)
    if not reduced:
        raise NonReducedResultError("coefficient choice degenerates the family")
    curve = PlaneCurve(form)
    got = classify(curve, P0)
    if got.tag != tag or got.param != d - 1:
        raise NonReducedResultError(
            f"family member classifies as {got.tag}({got.param}), not {tag}({d - 1})")
    return curve


WALL_QUINTIC_TEXT = "x^5+(y^2-x*z)^2*(x/4+y+z)-x^2*(y^2-x*z)*(x+2*y)"
QUARTIC_SURFACE_118_TEXT = "w^3*x+w^2*y*z+x*y*z*(y+z)"


def named_examples(name: str):
    """Exact transcriptions of the two printed equations."""
    if name == "wall_quintic":
        return PlaneCurve(_poly(WALL_QUINTIC_TEXT))
    if name == "quartic_surface_118":
        from .surfaces import SurfaceForm

        return SurfaceForm(_poly(QUARTIC_SURFACE_118_TEXT, SURFACE_VARS))
    raise UnknownNameError(f"unknown example {name!r}")


def star_point_surface(d: int) -> "SurfaceForm":
    """A smooth degree-d surface with a star point at [0:0:0:1]: the tangent
    section there is a cone of d distinct lines."""
    from .surfaces import SurfaceForm

    if d < 3:
        raise CurvelabError("degree >= 3 required")
    lines = MPoly.from_rationals(SURFACE_VARS, {(0, 0, 0, 0): 1})
    y = _poly("y", SURFACE_VARS)
    z = _poly("z", SURFACE_VARS)
    for i in range(d - 1):
        lines = lines * (y - z.scale_rat(Rat(i)))
    lines = lines * z
    form = _poly("x", SURFACE_VARS) * _poly("w", SURFACE_VARS) ** (d - 1) \
        + _poly("x", SURFACE_VARS) ** d + lines
    return SurfaceForm(form)


def random_reduced_curve(d: int, seed: int, force: str | None = None) -> PlaneCurve:
    """Seeded random curve with small integer coefficients, redrawn until
    squarefree.  force="node" or "cusp" plants that singularity at [0:0:1];
    force="split" multiplies two lower-degree factors."""
    if d < 3:
        raise CurvelabError("degree >= 3 required")
    rng = random.Random((seed, d, force or ""))
    for _ in range(200):
        form = _random_form(rng, d, force)
        if form.is_zero():
            continue
        _, reduced = squarefree_part(form)
        if reduced:
            return PlaneCurve(form)
    raise CurvelabError("could not draw a squarefree form")


def _random_form(rng: random.Random, d: int, force: str | None) -> MPoly:
    def dense(deg, ban=()):
        terms = {}
        for i in range(deg + 1):
            for j in range(deg + 1 - i):
                e = (i, j, deg - i - j)
                if e in ban:
                    continue
                c = rng.randint(-3, 3)
                if c:
                    terms[e] = Rat(c)
        return MPoly.from_rationals(PLANE_VARS, terms)

    if force is None:
        return dense(d)
    if force == "split":
        d1 = rng.randint(1, d - 1)
        return dense(d1) * dense(d - d1)
    # plant a double point at [0:0:1]: kill the z^d, x z^(d-1), y z^(d-1) terms
    ban = [(0, 0, d), (1, 0, d - 1), (0, 1, d - 1)]
    if force == "cusp":
        # quadratic stratum reduced to x^2: cusp-like tangent cone
        ban += [(1, 1, d - 2), (0, 2, d - 2)]
        form = dense(d, ban=tuple(ban))
        form = form + MPoly.from_rationals(PLANE_VARS, {(2, 0, d - 2): 1,
                                                        (0, 3, d - 3): rng.choice([1, -1])})
        return form
    if force == "node":
        ban += [(2, 0, d - 2), (1, 1, d - 2), (0, 2, d - 2)]
        form = dense(d, ban=tuple(ban))
        form = form + MPoly.from_rationals(PLANE_VARS, {(2, 0, d - 2): 1,
                                                        (0, 2, d - 2): -1})
        return form
    raise CurvelabError(f"unknown force mode {force!r}")
