"""Sparse multivariate polynomials with exact coefficients in a number field.

The universal carrier for plane-curve forms, surface forms and local germ
equations.  Terms map exponent vectors to nonzero FieldElement coefficients;
values are immutable after construction.  The gcd / squarefree / resultant
machinery is the classical content-primitive recursion with pseudo-division,
which is exact over any coefficient field here.
"""

from __future__ import annotations

import math
from typing import Iterable

from . import kpoly
from .errors import CurvelabError, DimensionMismatchError
from .numberfield import QQ, FieldElement, NumberField
from .rationals import Rat, rat_str


def _gl_key(exps: tuple[int, ...]):
    """Graded-lex sort key (ascending)."""
    return (sum(exps), exps)


class MPoly:
    __slots__ = ("vars", "field", "terms", "_hash")

    def __init__(self, vars: tuple[str, ...], field: NumberField, terms: dict):
        self.vars = tuple(vars)
        self.field = field
        self.terms = {e: c for e, c in terms.items() if not c.is_zero()}
        self._hash = None

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, vars, field=QQ) -> "MPoly":
        return cls(vars, field, {})

    @classmethod
    def constant(cls, vars, value: FieldElement) -> "MPoly":
        n = len(vars)
        return cls(vars, value.field, {(0,) * n: value})

    @classmethod
    def from_rationals(cls, vars, coeffs: dict, field=QQ) -> "MPoly":
        """Build from {exponent tuple: rational}."""
        return cls(vars, field, {tuple(e): field.from_rational(Rat(c)) for e, c in coeffs.items()})

    @classmethod
    def variable(cls, vars, name: str, field=QQ) -> "MPoly":
        idx = vars.index(name)
        e = tuple(1 if i == idx else 0 for i in range(len(vars)))
        return cls(vars, field, {e: field.one()})

    # -- predicates and basic data --------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def multiplicity(self) -> int:
        """Minimal total degree of a term (order of vanishing at the origin)."""
        if not self.terms:
            return -1
        return min(sum(e) for e in self.terms)

    def degree_in(self, var: str) -> int:
        if not self.terms:
            return -1
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def coeff(self, exps: tuple[int, ...]) -> FieldElement:
        return self.terms.get(tuple(exps), self.field.zero())

    def support(self) -> list[tuple[int, ...]]:
        return sorted(self.terms, key=_gl_key)

    def constant_term(self) -> FieldElement:
        return self.coeff((0,) * len(self.vars))

    def lowest_form(self) -> "MPoly":
        m = self.multiplicity()
        return MPoly(self.vars, self.field,
                     {e: c for e, c in self.terms.items() if sum(e) == m})

    def homogeneous_part(self, k: int) -> "MPoly":
        return MPoly(self.vars, self.field,
                     {e: c for e, c in self.terms.items() if sum(e) == k})

    # -- arithmetic -------------------------------------------------------------

    def _check(self, other: "MPoly"):
        if self.vars != other.vars:
            raise DimensionMismatchError(f"variable mismatch {self.vars} vs {other.vars}")
        if self.field != other.field:
            raise CurvelabError("coefficient fields differ")

    def __add__(self, other: "MPoly") -> "MPoly":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = out[e] + c
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return MPoly(self.vars, self.field, out)

    def __neg__(self) -> "MPoly":
        return MPoly(self.vars, self.field, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MPoly") -> "MPoly":
        return self + (-other)

    def __mul__(self, other: "MPoly") -> "MPoly":
        self._check(other)
        out: dict = {}
        n = len(self.vars)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(e1[i] + e2[i] for i in range(n))
                p = c1 * c2
                if e in out:
                    s = out[e] + p
                    if s.is_zero():
                        del out[e]
                    else:
                        out[e] = s
                elif not p.is_zero():
                    out[e] = p
        return MPoly(self.vars, self.field, out)

    def scale(self, c: FieldElement) -> "MPoly":
        if c.is_zero():
            return MPoly.zero(self.vars, self.field)
        return MPoly(self.vars, self.field, {e: v * c for e, v in self.terms.items()})

    def scale_rat(self, q) -> "MPoly":
        return self.scale(self.field.from_rational(Rat(q)))

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise CurvelabError("negative polynomial power")
        out = MPoly.constant(self.vars, self.field.one())
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, MPoly):
            return NotImplemented
        return (self.vars == other.vars and self.field == other.field
                and self.terms == other.terms)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vars, self.field, frozenset(self.terms.items())))
        return self._hash

    # -- calculus and substitution ----------------------------------------------

    def derivative(self, var: str) -> "MPoly":
        i = self.vars.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            e2 = e[:i] + (e[i] - 1,) + e[i + 1:]
            v = c.scale(Rat(e[i]))
            if e2 in out:
                v = out[e2] + v
            out[e2] = v
        return MPoly(self.vars, self.field, out)

    def evaluate(self, values: dict) -> FieldElement:
        """Evaluate at a point given as {var: FieldElement}."""
        acc = self.field.zero()
        powcache: dict = {}
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k == 0:
                    continue
                key = (i, k)
                if key not in powcache:
                    powcache[key] = values[self.vars[i]] ** k
                term = term * powcache[key]
            acc = acc + term
        return acc

    def substitute(self, mapping: dict) -> "MPoly":
        """Substitute {var: MPoly} (same vars/field) for some variables."""
        one = MPoly.constant(self.vars, self.field.one())
        polys = []
        for v in self.vars:
            polys.append(mapping.get(v, MPoly.variable(self.vars, v, self.field)))
        powcache: dict = {}

        def power(i, k):
            key = (i, k)
            if key not in powcache:
                powcache[key] = polys[i] ** k
            return powcache[key]

        acc = MPoly.zero(self.vars, self.field)
        for e, c in self.terms.items():
            term = MPoly.constant(self.vars, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            acc = acc + term
        return acc

    def set_var_to_one(self, var: str) -> "MPoly":
        """Dehomogenize: substitute var = 1 and drop it from the variable list."""
        i = self.vars.index(var)
        new_vars = self.vars[:i] + self.vars[i + 1:]
        out: dict = {}
        for e, c in self.terms.items():
            e2 = e[:i] + e[i + 1:]
            if e2 in out:
                s = out[e2] + c
                if s.is_zero():
                    del out[e2]
                else:
                    out[e2] = s
            else:
                out[e2] = c
        return MPoly(new_vars, self.field, out)

    def to_field(self, field: NumberField) -> "MPoly":
        if field == self.field:
            return self
        if not self.field.is_q:
            raise CurvelabError("cannot move coefficients between proper extensions")
        return MPoly(self.vars, field,
                     {e: field.from_rational(c.coords[0]) for e, c in self.terms.items()})

    def with_vars(self, vars: tuple[str, ...]) -> "MPoly":
        if len(vars) != len(self.vars):
            raise DimensionMismatchError("variable count mismatch")
        return MPoly(tuple(vars), self.field, dict(self.terms))

    # -- univariate views ---------------------------------------------------------

    def as_univariate(self, var: str) -> dict[int, "MPoly"]:
        """View in var: {var-degree: coefficient MPoly (var-free)}."""
        i = self.vars.index(var)
        out: dict[int, dict] = {}
        for e, c in self.terms.items():
            k = e[i]
            e2 = e[:i] + (0,) + e[i + 1:]
            out.setdefault(k, {})[e2] = c
        return {k: MPoly(self.vars, self.field, t) for k, t in out.items()}

    def leading_coeff_in(self, var: str) -> "MPoly":
        u = self.as_univariate(var)
        return u[max(u)]

    def to_kpoly(self, var: str) -> list:
        """Coefficient list for an (effectively) univariate polynomial."""
        i = self.vars.index(var)
        for e in self.terms:
            if any(e[j] for j in range(len(e)) if j != i):
                raise CurvelabError("polynomial is not univariate in " + var)
        n = self.degree_in(var)
        out = [self.field.zero()] * (n + 1)
        for e, c in self.terms.items():
            out[e[i]] = c
        return kpoly.strip(out)

    @classmethod
    def from_kpoly(cls, vars, var: str, coeffs: list, field: NumberField) -> "MPoly":
        i = tuple(vars).index(var)
        terms = {}
        for k, c in enumerate(coeffs):
            if not c.is_zero():
                e = tuple(k if j == i else 0 for j in range(len(vars)))
                terms[e] = c
        return cls(tuple(vars), field, terms)

    # -- ordering, printing, serialization ----------------------------------------

    def leading_term(self) -> tuple[tuple[int, ...], FieldElement]:
        e = max(self.terms, key=_gl_key)
        return e, self.terms[e]

    def sort_key(self):
        return tuple((e, c.sort_key()) for e, c in sorted(self.terms.items(), key=lambda t: _gl_key(t[0])))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=_gl_key, reverse=True):
            c = self.terms[e]
            mono = "*".join(f"{v}^{k}" if k > 1 else v
                            for v, k in zip(self.vars, e) if k)
            if c.is_rational():
                q = c.coords[0]
                if not mono:
                    txt = rat_str(q)
                elif q == 1:
                    txt = mono
                elif q == -1:
                    txt = "-" + mono
                else:
                    txt = f"{rat_str(q)}*{mono}"
            else:
                txt = f"({c})*{mono}" if mono else f"({c})"
            parts.append(txt)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self) -> str:
        return f"MPoly({self})"

    def to_json(self) -> dict:
        terms = {}
        for e in sorted(self.terms, key=_gl_key, reverse=True):
            c = self.terms[e]
            key = ",".join(str(k) for k in e)
            if c.is_rational():
                terms[key] = rat_str(c.coords[0])
            else:
                terms[key] = [rat_str(q) for q in c.coords]
        out = {"vars": list(self.vars), "terms": terms}
        if not self.field.is_q:
            out["minpoly"] = [rat_str(q) for q in self.field.minpoly]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "MPoly":
        from .rationals import rat_from_str

        field = QQ
        if "minpoly" in data:
            field = NumberField([rat_from_str(s) for s in data["minpoly"]])
        vars = tuple(data["vars"])
        terms = {}
        for key, val in data["terms"].items():
            e = tuple(int(k) for k in key.split(","))
            if len(e) != len(vars):
                raise CurvelabError("exponent vector length mismatch in JSON")
            if isinstance(val, list):
                terms[e] = field.element([rat_from_str(s) for s in val])
            else:
                terms[e] = field.from_rational(rat_from_str(val))
        return cls(vars, field, terms)

    # -- canonical scaling ----------------------------------------------------------

    def canonical(self) -> "MPoly":
        """Scale to the canonical representative of the scalar class: over Q,
        integer coefficients with content 1 and positive leading coefficient;
        over an extension, monic leading coefficient."""
        if self.is_zero():
            return self
        if self.field.is_q:
            l = 1
            for c in self.terms.values():
                d = int(c.coords[0].denominator)
                l = l * d // math.gcd(l, d)
            scale = Rat(l)
            g = 0
            for c in self.terms.values():
                g = math.gcd(g, abs(int(c.coords[0] * scale)))
            if g:
                scale = scale / Rat(g)
            _, lead = self.leading_term()
            if lead.coords[0] * scale < 0:
                scale = -scale
            return self.scale(self.field.from_rational(scale))
        _, lead = self.leading_term()
        return self.scale(lead.inverse())


# ---------------------------------------------------------------------------
# exact division, gcd, squarefree part, resultants


def divexact(f: MPoly, g: MPoly) -> MPoly:
    """Exact multivariate division; raises if g does not divide f."""
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if f.is_zero():
        return f
    f._check(g)
    n = len(f.vars)
    ge, gc = g.leading_term()
    gc_inv = gc.inverse()
    rem = dict(f.terms)
    out: dict = {}
    while rem:
        e = max(rem, key=_gl_key)
        c = rem[e]
        q = tuple(e[i] - ge[i] for i in range(n))
        if any(k < 0 for k in q):
            raise CurvelabError("inexact polynomial division")
        qc = c * gc_inv
        out[q] = qc
        # rem -= qc * x^q * g
        for e2, c2 in g.terms.items():
            e3 = tuple(q[i] + e2[i] for i in range(n))
            v = qc * c2
            if e3 in rem:
                s = rem[e3] - v
                if s.is_zero():
                    del rem[e3]
                else:
                    rem[e3] = s
            else:
                rem[e3] = -v
    return MPoly(f.vars, f.field, out)


def _prem(a: MPoly, b: MPoly, var: str) -> MPoly:
    """Pseudo-remainder of a by b in var: lc(b)^(da-db+1) * a mod b."""
    db = b.degree_in(var)
    lb = b.leading_coeff_in(var)
    xv = MPoly.variable(a.vars, var, a.field)
    r = a
    e = a.degree_in(var) - db + 1
    while not r.is_zero() and r.degree_in(var) >= db:
        lr = r.leading_coeff_in(var)
        dr = r.degree_in(var)
        r = r * lb - lr * (xv ** (dr - db)) * b
        e -= 1
    if e > 0:
        r = r * (lb ** e)
    return r


def _content(p: MPoly, var: str) -> MPoly:
    coeffs = list(p.as_univariate(var).values())
    g = coeffs[0]
    for c in coeffs[1:]:
        g = mpgcd(g, c)
        if g.is_constant():
            break
    return g.canonical()


def _primitive(p: MPoly, var: str) -> MPoly:
    c = _content(p, var)
    if c.is_constant():
        one = c.constant_term()
        if one.is_rational() and one.coords[0] == 1:
            return p
    return divexact(p, c)


def mpgcd(f: MPoly, g: MPoly) -> MPoly:
    """Multivariate gcd over the coefficient field, canonically scaled."""
    if f.is_zero():
        return g.canonical()
    if g.is_zero():
        return f.canonical()
    if f.is_constant() or g.is_constant():
        return MPoly.constant(f.vars, f.field.one())
    fvars = [v for v in f.vars if f.degree_in(v) > 0]
    gvars = [v for v in g.vars if g.degree_in(v) > 0]
    shared = [v for v in fvars if v in gvars]
    if not shared:
        return MPoly.constant(f.vars, f.field.one())
    if len(fvars) == 1 and len(gvars) == 1 and fvars == gvars:
        v = fvars[0]
        h = kpoly.gcd_monic(f.to_kpoly(v), g.to_kpoly(v))
        return MPoly.from_kpoly(f.vars, v, h, f.field).canonical()
    v = shared[0]
    cf = _content(f, v)
    cg = _content(g, v)
    c = mpgcd(cf, cg)
    a = divexact(f, cf)
    b = divexact(g, cg)
    if a.degree_in(v) < b.degree_in(v):
        a, b = b, a
    while not b.is_zero() and b.degree_in(v) > 0:
        r = _prem(a, b, v)
        a, b = b, (r if r.is_zero() else _primitive(r, v))
    if not b.is_zero():
        return c.canonical()
    return (c * _primitive(a, v)).canonical()


def squarefree_part(p: MPoly) -> tuple[MPoly, bool]:
    """(squarefree part up to scalar, had-no-repeated-factor flag)."""
    if p.is_zero():
        raise CurvelabError("squarefree part of the zero polynomial")
    if p.is_constant():
        return p.canonical(), True
    g = p
    for v in p.vars:
        if p.degree_in(v) > 0:
            g = mpgcd(g, p.derivative(v))
            if g.is_constant():
                break
    if g.is_constant():
        return p.canonical(), True
    return divexact(p, g).canonical(), False


def resultant(f: MPoly, g: MPoly, var: str) -> MPoly:
    """Resultant of f and g with respect to var, by Brown's subresultant PRS."""
    f._check(g)
    if f.is_zero() or g.is_zero():
        return MPoly.zero(f.vars, f.field)
    n = f.degree_in(var)
    m = g.degree_in(var)
    sign = 1
    if n < m:
        f, g = g, f
        if (n * m) % 2:
            sign = -sign
        n, m = m, n
    if m == 0:
        return (g ** n).scale_rat(sign)
    d = n - m
    b_sign = (-1) ** (d + 1)
    h = _prem(f, g, var).scale_rat(b_sign)
    lc = g.leading_coeff_in(var)
    c = lc ** d
    s_last = c
    c = -c
    while not h.is_zero():
        k = h.degree_in(var)
        f, g, m, d = g, h, k, m - k
        b = (-lc) * (c ** d)
        h = _prem(f, g, var)
        h = h if h.is_zero() else divexact(h, b)
        lc = g.leading_coeff_in(var)
        if d > 1:
            c = divexact((-lc) ** d, c ** (d - 1))
        else:
            c = -lc
        s_last = -c
    if g.degree_in(var) > 0:
        return MPoly.zero(f.vars, f.field)
    return s_last.scale_rat(sign)
