"""Exact common-zero solving for small zero-dimensional systems.

Elimination by pairwise resultants, root lifting by specialized gcds, and a
final verification of every candidate against every equation, so extraneous
resultant factors never leak.  Coordinates are found over Q or one simple
extension of bounded degree; roots that would need a tower are reported via
the truncated flag rather than computed.
"""

from __future__ import annotations

from . import kpoly
from .errors import CurvelabError
from .factor import factor_list_k
from .mpoly import MPoly, resultant
from .numberfield import FieldElement, NumberField


class SolveResult:
    """points: list of (field, coords tuple, conjugacy weight)."""

    def __init__(self, points, truncated: bool):
        self.points = points
        self.truncated = truncated


def roots_with_extensions(field: NumberField, coeffs: list, ext_bound: int):
    """Roots of a univariate polynomial over `field`, extending Q by one simple
    extension per irreducible factor when needed.

    Returns ([(field, root, weight)], truncated); weight counts the conjugate
    roots each representative stands for.
    """
    out = []
    truncated = False
    for fac, _mult in factor_list_k(field, coeffs):
        d = kpoly.degree(fac)
        if d == 1:
            out.append((field, -(fac[0] / fac[1]), 1))
        elif field.is_q and d <= ext_bound:
            ext = NumberField([c.coords[0] for c in fac], check_irreducible=False)
            emb = [ext.from_rational(c.coords[0]) for c in fac]
            roots = kpoly.roots_in_field(ext, emb)
            weight = d // len(roots)
            for r in roots:
                out.append((ext, r, weight))
        else:
            truncated = True
    return out, truncated


def _specialize(p: MPoly, field: NumberField, values: list, var: str) -> list:
    """Coefficient list of p(values, var) as a univariate in var over field."""
    vi = p.vars.index(var)
    n = p.degree_in(var)
    out = [field.zero()] * (n + 1)
    powcache: dict = {}

    def power(j, k):
        key = (j, k)
        if key not in powcache:
            powcache[key] = values[j] ** k
        return powcache[key]

    for e, c in p.terms.items():
        if c.is_rational():
            term = field.from_rational(c.coords[0])
        elif field == c.field:
            term = c
        else:
            raise CurvelabError("cannot specialize coefficients into a different extension")
        for j, k in enumerate(e):
            if j == vi or k == 0:
                continue
            term = term * power(j, k)
        out[e[vi]] = out[e[vi]] + term
    return kpoly.strip(out)


def solve_zero_dimensional(polys: list[MPoly], ext_bound: int) -> SolveResult:
    """Common zeros of a finite system in <= 3 variables over Q.

    Raises if the solution set is visibly positive-dimensional.
    """
    polys = [p for p in polys if not p.is_zero()]
    if any(p.is_constant() for p in polys):
        return SolveResult([], False)
    if not polys:
        raise CurvelabError("solution set is all of affine space")
    vars = polys[0].vars
    field = polys[0].field
    n = len(vars)

    if n == 1:
        g = polys[0].to_kpoly(vars[0])
        for p in polys[1:]:
            g = kpoly.gcd_monic(g, p.to_kpoly(vars[0]))
        if kpoly.degree(g) == 0:
            return SolveResult([], False)
        roots, truncated = roots_with_extensions(field, g, ext_bound)
        return SolveResult([(K, (r,), w) for K, r, w in roots], truncated)

    v = vars[-1]
    with_v = [p for p in polys if p.degree_in(v) > 0]
    without_v = [p.set_var_to_one(v).with_vars(vars[:-1])
                 for p in polys if p.degree_in(v) == 0]
    # degree_in(v) == 0 terms have exponent 0 in v, so set_var_to_one is projection
    if not with_v:
        base = solve_zero_dimensional(without_v, ext_bound)
        if base.points:
            raise CurvelabError("solution set is positive-dimensional (free variable)")
        return SolveResult([], base.truncated)

    reduced = list(without_v)
    for i in range(len(with_v)):
        for j in range(i + 1, len(with_v)):
            r = resultant(with_v[i], with_v[j], v)
            if not r.is_zero():
                reduced.append(r.set_var_to_one(v).with_vars(vars[:-1]))
    if len(with_v) == 1 and not reduced:
        raise CurvelabError("cannot eliminate: single equation in the last variable")
    if not reduced:
        raise CurvelabError("solution set is positive-dimensional (all resultants vanish)")

    base = solve_zero_dimensional(reduced, ext_bound)
    out = []
    truncated = base.truncated
    for K, coords, weight in base.points:
        specialized = []
        all_zero = True
        for p in with_v:
            s = _specialize(p, K, list(coords), v)
            if s:
                all_zero = False
                specialized.append(s)
        if all_zero:
            raise CurvelabError("solution set is positive-dimensional (vertical line)")
        g = specialized[0]
        for s in specialized[1:]:
            g = kpoly.gcd_monic(g, s)
            if kpoly.degree(g) == 0:
                break
        if kpoly.degree(g) < 1:
            continue
        roots, trunc2 = roots_with_extensions(K, g, ext_bound)
        truncated = truncated or trunc2
        for K2, root, w2 in roots:
            if K2 == K:
                cand = coords + (root,)
            else:
                cand = tuple(K2.from_rational(c.as_rational()) for c in coords) + (root,)
            values = {vars[i]: cand[i] for i in range(n)}
            if all(p.to_field(K2).evaluate(values).is_zero() if p.field.is_q
                   else p.evaluate(values).is_zero() for p in polys):
                out.append((K2, cand, weight * w2))
    return SolveResult(out, truncated)
