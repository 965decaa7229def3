"""Projective plane curves: reduced forms, points, singular locus, local germs."""

from __future__ import annotations

from dataclasses import dataclass

from . import config
from .errors import CurvelabError, NotReducedError, PointNotOnCurveError
from .linear import LinearChange
from .mpoly import MPoly, squarefree_part
from .numberfield import QQ, FieldElement, NumberField
from .parsing import parse_polynomial
from .rationals import Rat, rat_from_str, rat_str
from .resolution import CurveGerm
from .solvers import solve_zero_dimensional

PLANE_VARS = ("x", "y", "z")


class ProjPoint:
    """A point of P^n over Q or one simple extension, canonically normalized
    so the last nonzero coordinate is 1."""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords):
        coords = tuple(coords)
        if all(c.is_zero() for c in coords):
            raise CurvelabError("projective point needs a nonzero coordinate")
        last = max(i for i, c in enumerate(coords) if not c.is_zero())
        inv = coords[last].inverse()
        self.field = field
        self.coords = tuple(c * inv for c in coords)

    @classmethod
    def from_rationals(cls, values) -> "ProjPoint":
        return cls(QQ, [QQ.from_rational(Rat(v)) for v in values])

    @classmethod
    def parse(cls, text: str) -> "ProjPoint":
        return cls.from_rationals([rat_from_str(part) for part in text.split(":")])

    @property
    def dim(self) -> int:
        return len(self.coords)

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.coords)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.field == other.field and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.field, self.coords))

    def sort_key(self):
        return (self.field.degree, self.field.minpoly,
                tuple(c.sort_key() for c in self.coords))

    def __str__(self) -> str:
        return ":".join(str(c) for c in self.coords)

    def __repr__(self) -> str:
        return f"ProjPoint({self})"

    def to_json(self):
        if self.is_rational():
            return str(self)
        return {"coords": [[rat_str(q) for q in c.coords] for c in self.coords],
                "minpoly": [rat_str(q) for q in self.field.minpoly]}


class PlaneCurve:
    """A reduced plane curve: squarefree homogeneous form in (x, y, z).

    Non-reduced forms are rejected unless allow_non_reduced is set, in which
    case downstream lct / GIT operations will refuse the curve.
    """

    __slots__ = ("form", "degree", "reduced")

    def __init__(self, form: MPoly, allow_non_reduced: bool = False):
        if form.is_zero() or form.degree() < 1:
            raise CurvelabError("curve form must be nonconstant")
        if form.vars != PLANE_VARS:
            form = form.with_vars(PLANE_VARS)
        if not form.is_homogeneous():
            raise CurvelabError("curve form must be homogeneous")
        _, reduced = squarefree_part(form)
        if not reduced and not allow_non_reduced:
            raise NotReducedError("form has a repeated factor")
        self.form = form.canonical()
        self.degree = form.degree()
        self.reduced = reduced

    @classmethod
    def from_text(cls, text: str, **kw) -> "PlaneCurve":
        return cls(parse_polynomial(text, PLANE_VARS), **kw)

    def contains(self, p: ProjPoint) -> bool:
        form = self.form.to_field(p.field) if self.form.field != p.field else self.form
        values = dict(zip(self.form.vars, p.coords))
        return form.evaluate(values).is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, PlaneCurve):
            return NotImplemented
        return self.form == other.form

    def __hash__(self) -> int:
        return hash(self.form)

    def __str__(self) -> str:
        return str(self.form)

    def __repr__(self) -> str:
        return f"PlaneCurve({self.form})"

    def to_json(self) -> dict:
        return {"degree": self.degree, "form": self.form.to_json()}

    @classmethod
    def from_json(cls, data: dict, **kw) -> "PlaneCurve":
        return cls(MPoly.from_json(data["form"]), **kw)


@dataclass(frozen=True)
class SingularPoint:
    point: ProjPoint
    multiplicity: int
    conjugates: int  # Galois-conjugate points this representative stands for


@dataclass
class SingularLocus:
    points: list
    completeness: str  # "complete" | "truncated_by_extension_limit"

    @property
    def complete(self) -> bool:
        return self.completeness == "complete"


def singular_points(curve: PlaneCurve, ext_bound: int | None = None) -> SingularLocus:
    """All singular points with coordinates in Q or one simple extension of
    degree <= the bound, by per-chart elimination of the three partials."""
    if not curve.reduced:
        raise NotReducedError("singular locus is only computed for reduced curves")
    bound = config.ext_degree(ext_bound)
    F = curve.form
    partials = [F.derivative(v) for v in PLANE_VARS]
    found: list[tuple[ProjPoint, int]] = []
    truncated = False

    # chart z = 1 (points with z != 0)
    chart = [p.set_var_to_one("z") for p in partials]
    res = solve_zero_dimensional([p for p in chart if not p.is_zero()], bound)
    truncated = truncated or res.truncated
    for K, coords, weight in res.points:
        pt = ProjPoint(K, coords + (K.one(),))
        found.append((pt, weight))

    # chart y = 1 restricted to z = 0
    line = [p.set_var_to_one("y").set_var_to_one("z") for p in partials]
    line = [p for p in line if not p.is_zero()]
    if line:
        res = solve_zero_dimensional(line, bound)
        truncated = truncated or res.truncated
        for K, coords, weight in res.points:
            pt = ProjPoint(K, coords + (K.one(), K.zero()))
            found.append((pt, weight))

    # the single remaining point [1:0:0]
    origin = {v: QQ.zero() for v in ("y", "z")}
    if all(p.set_var_to_one("x").evaluate(origin).is_zero() for p in partials):
        found.append((ProjPoint.from_rationals([1, 0, 0]), 1))

    records = []
    for pt, weight in sorted(found, key=lambda t: t[0].sort_key()):
        m = multiplicity_at(curve, pt)
        records.append(SingularPoint(pt, m, weight))
    status = "truncated_by_extension_limit" if truncated else "complete"
    return SingularLocus(records, status)


def localize(curve: PlaneCurve, p: ProjPoint) -> CurveGerm:
    """Move p to [0:0:1] by a linear change over p's field and dehomogenize."""
    if not curve.contains(p):
        raise PointNotOnCurveError(f"{p} is not on the curve")
    K = p.field
    n = p.dim
    pivot = max(i for i, c in enumerate(p.coords) if not c.is_zero())
    cols = [i for i in range(n) if i != pivot]
    matrix = [[K.zero()] * n for _ in range(n)]
    for j, i in enumerate(cols):
        matrix[i][j] = K.one()
    for i in range(n):
        matrix[i][n - 1] = p.coords[i]
    change = LinearChange(K, matrix)
    moved = change.apply(curve.form.to_field(K) if curve.form.field != K else curve.form)
    germ_eq = moved.set_var_to_one(moved.vars[-1]).with_vars(("x", "y"))
    return CurveGerm(germ_eq, K, origin_history=change)


def multiplicity_at(curve: PlaneCurve, p: ProjPoint) -> int:
    """Multiplicity of the curve at p; 0 when p is not on the curve."""
    if not curve.contains(p):
        return 0
    return localize(curve, p).multiplicity()
