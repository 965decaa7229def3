"""Univariate factorization over Q and over one simple extension Q(a).

Over Q the factor recovery is delegated to sympy (a complete lifting-based
implementation); correctness here is guarded by re-multiplication tests, not
algorithm identity.  Over Q(a) we reduce to Q by Trager's norm method:
factor N(x) = Res_t(minpoly(t), f(x - s*t)) over Q and pull factors back with
gcds in Q(a)[x].  No towers: factoring over an extension never constructs a
further extension.
"""

from __future__ import annotations

from . import kpoly
from .errors import CurvelabError, ExtensionLimitError
from .mpoly import MPoly, resultant
from .numberfield import QQ, FieldElement, NumberField
from .rationals import Rat

_sympy_t = None


def _sympy():
    global _sympy_t
    import sympy

    if _sympy_t is None:
        _sympy_t = sympy.Symbol("t")
    return sympy, _sympy_t


def factor_rationals(coeffs: list) -> list[tuple[list, int]]:
    """Factor a nonzero univariate polynomial over Q given as a low-first list
    of rationals.  Returns [(monic irreducible factor, multiplicity)]."""
    sympy, t = _sympy()
    if not coeffs:
        raise CurvelabError("factoring the zero polynomial")
    expr = sum(sympy.Rational(int(c.numerator), int(c.denominator)) * t**i
               for i, c in enumerate(coeffs))
    poly = sympy.Poly(expr, t, domain="QQ")
    if poly.degree() == 0:
        return []
    _, factors = poly.factor_list()
    out = []
    for fac, mult in factors:
        cs = [Rat(int(q.numerator), int(q.denominator))
              for q in reversed(fac.all_coeffs())]
        lead = cs[-1]
        if lead != 1:
            cs = [c / lead for c in cs]
        out.append((cs, int(mult)))
    out.sort(key=lambda fm: (len(fm[0]), [(c.numerator, c.denominator) for c in fm[0]]))
    return out


def is_irreducible_rationals(coeffs: list) -> bool:
    if len(coeffs) < 2:
        return False
    factors = factor_rationals(coeffs)
    return len(factors) == 1 and factors[0][1] == 1


def _to_k(field: NumberField, rat_coeffs: list) -> list:
    return [field.from_rational(c) for c in rat_coeffs]


def _lift_to_bivariate(field: NumberField, coeffs: list) -> MPoly:
    """Represent an extension-coefficient polynomial in x as an element of
    Q[x, t], t standing for the field generator."""
    terms = {}
    for i, c in enumerate(coeffs):
        for j, q in enumerate(c.coords):
            if q != 0:
                terms[(i, j)] = q
    return MPoly.from_rationals(("x", "t"), terms)


def _trager_squarefree(field: NumberField, f: list) -> list[tuple[list, int]]:
    """Factor a squarefree monic f over Q(a) by the norm method."""
    d = kpoly.degree(f)
    if d <= 1:
        return [(f, 1)] if d == 1 else []
    minpoly_biv = MPoly.from_rationals(
        ("x", "t"), {(0, j): c for j, c in enumerate(field.minpoly) if c != 0})
    gen = field.generator()
    for s in range(0, 40):
        shifted = kpoly.compose_linear(field, f, gen.scale(Rat(-s)))
        norm = resultant(minpoly_biv, _lift_to_bivariate(field, shifted), "t")
        norm_coeffs = [norm.coeff((i, 0)).coords[0] for i in range(norm.degree_in("x") + 1)]
        while norm_coeffs and norm_coeffs[-1] == 0:
            norm_coeffs.pop()
        if not norm_coeffs:
            continue
        qq_norm = [QQ.from_rational(c) for c in norm_coeffs]
        der = kpoly.derivative(QQ, qq_norm)
        if kpoly.degree(kpoly.gcd_monic(qq_norm, der)) > 0:
            continue  # norm not squarefree; try the next shift
        out = []
        for fac, _ in factor_rationals(norm_coeffs):
            fac_k = _to_k(field, fac)
            g = kpoly.gcd_monic(shifted, fac_k)
            if kpoly.degree(g) < 1:
                continue
            g = kpoly.compose_linear(field, g, gen.scale(Rat(s)))
            out.append((kpoly.monic(g), 1))
        total = sum(kpoly.degree(g) for g, _ in out)
        if total != d:
            raise CurvelabError("norm factorization lost a factor")
        out.sort(key=lambda fm: (len(fm[0]), tuple(c.sort_key() for c in fm[0])))
        return out
    raise CurvelabError("could not find a squarefree norm shift")


def factor_list_k(field: NumberField, coeffs: list) -> list[tuple[list, int]]:
    """Factor a nonzero univariate polynomial over a number field.

    Returns [(monic irreducible factor, multiplicity)], deterministic order.
    """
    coeffs = kpoly.strip(list(coeffs))
    if not coeffs:
        raise CurvelabError("factoring the zero polynomial")
    if kpoly.degree(coeffs) == 0:
        return []
    if field.is_q:
        rat = [c.coords[0] for c in coeffs]
        return [(_to_k(field, f), m) for f, m in factor_rationals(rat)]
    out = []
    for sqf, mult in kpoly.squarefree_decomposition(field, coeffs):
        for fac, _ in _trager_squarefree(field, kpoly.monic(sqf)):
            out.append((fac, mult))
    out.sort(key=lambda fm: (len(fm[0]), tuple(c.sort_key() for c in fm[0])))
    return out


def factor_univariate(p: MPoly) -> list[tuple[MPoly, int]]:
    """Factor a univariate MPoly over its coefficient field into monic
    irreducible factors with multiplicities."""
    main = None
    for v in p.vars:
        if p.degree_in(v) > 0:
            if main is not None:
                raise CurvelabError("polynomial is not univariate")
            main = v
    if main is None:
        raise CurvelabError("polynomial is constant")
    coeffs = p.to_kpoly(main)
    return [(MPoly.from_kpoly(p.vars, main, fac, p.field).canonical(), mult)
            for fac, mult in factor_list_k(p.field, coeffs)]
