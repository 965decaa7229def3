"""Invertible linear coordinate changes with exact cached inverses."""

from __future__ import annotations

from .errors import CurvelabError, DimensionMismatchError
from .mpoly import MPoly
from .numberfield import FieldElement, NumberField
from .rationals import Rat, rat_str


def _mat_inverse(field: NumberField, m):
    """Gauss-Jordan inverse; raises on a singular matrix."""
    n = len(m)
    a = [list(row) for row in m]
    inv = [[field.one() if i == j else field.zero() for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if not a[r][col].is_zero():
                piv = r
                break
        if piv is None:
            raise CurvelabError("linear change is not invertible")
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        s = a[col][col].inverse()
        a[col] = [x * s for x in a[col]]
        inv[col] = [x * s for x in inv[col]]
        for r in range(n):
            if r == col or a[r][col].is_zero():
                continue
            f = a[r][col]
            a[r] = [x - f * y for x, y in zip(a[r], a[col])]
            inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return tuple(tuple(row) for row in inv)


class LinearChange:
    """A change of projective coordinates X = M * X'.

    apply(p) substitutes, returning p(M x'); the inverse matrix is computed
    once at construction so the determinant-nonzero invariant always holds.
    """

    __slots__ = ("field", "matrix", "inverse_matrix")

    def __init__(self, field: NumberField, matrix):
        self.field = field
        self.matrix = tuple(tuple(x for x in row) for row in matrix)
        n = len(self.matrix)
        for row in self.matrix:
            if len(row) != n:
                raise DimensionMismatchError("matrix is not square")
        self.inverse_matrix = _mat_inverse(field, self.matrix)

    @property
    def dim(self) -> int:
        return len(self.matrix)

    @classmethod
    def identity(cls, field: NumberField, n: int) -> "LinearChange":
        return cls(field, [[field.one() if i == j else field.zero() for j in range(n)]
                           for i in range(n)])

    @classmethod
    def from_rationals(cls, rows, field: NumberField | None = None) -> "LinearChange":
        from .numberfield import QQ

        field = field or QQ
        return cls(field, [[field.from_rational(Rat(x)) for x in row] for row in rows])

    def inverse(self) -> "LinearChange":
        out = LinearChange.__new__(LinearChange)
        out.field = self.field
        out.matrix = self.inverse_matrix
        out.inverse_matrix = self.matrix
        return out

    def compose(self, other: "LinearChange") -> "LinearChange":
        """self then other in substitution order: apply(p, self.compose(o)) ==
        apply(apply(p, self), o)."""
        n = self.dim
        if other.dim != n:
            raise DimensionMismatchError("composing changes of different sizes")
        prod = [[sum((self.matrix[i][k] * other.matrix[k][j] for k in range(n)),
                     self.field.zero()) for j in range(n)] for i in range(n)]
        return LinearChange(self.field, prod)

    def apply_to_vector(self, vec):
        n = self.dim
        return tuple(sum((self.matrix[i][j] * vec[j] for j in range(n)),
                         self.field.zero()) for i in range(n))

    def apply(self, p: MPoly) -> MPoly:
        n = self.dim
        if len(p.vars) != n:
            raise DimensionMismatchError("polynomial has wrong number of variables")
        q = p.to_field(self.field) if p.field != self.field else p
        images = {}
        for i, v in enumerate(q.vars):
            terms = {}
            for j in range(n):
                c = self.matrix[i][j]
                if c.is_zero():
                    continue
                e = tuple(1 if k == j else 0 for k in range(n))
                terms[e] = c
            images[v] = MPoly(q.vars, self.field, terms)
        return q.substitute(images)

    def to_json(self) -> dict:
        def cell(c: FieldElement):
            return rat_str(c.coords[0]) if c.is_rational() else [rat_str(q) for q in c.coords]

        out = {"matrix": [[cell(c) for c in row] for row in self.matrix]}
        if not self.field.is_q:
            out["minpoly"] = [rat_str(q) for q in self.field.minpoly]
        return out

    def __repr__(self) -> str:
        rows = "; ".join(",".join(str(c) for c in row) for row in self.matrix)
        return f"LinearChange[{rows}]"


def apply_linear_change(p: MPoly, t: LinearChange) -> MPoly:
    """Exact substitution p(M x'); degree and homogeneity are preserved."""
    return t.apply(p)
