"""Simple number fields Q(a) and exact arithmetic in them.

A field is Q[t]/(m(t)) for a monic irreducible m over Q.  Elements are
coordinate vectors in the power basis 1, a, ..., a^(deg-1).  The rational
field itself is the degree-1 case with minimal polynomial t, so every
coefficient in the package is a FieldElement and code never branches on
"rational vs extension" except for fast paths.

No towers: a field is always an extension of Q, never of another extension.
"""

from __future__ import annotations

from .errors import CurvelabError
from .rationals import RAT_ONE, RAT_ZERO, Rat, rat_str

# ---------------------------------------------------------------------------
# dense univariate arithmetic over Q (coefficient lists, low degree first)


def _qstrip(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _qadd(a, b):
    n = max(len(a), len(b))
    out = [RAT_ZERO] * n
    for i, x in enumerate(a):
        out[i] = out[i] + x
    for i, x in enumerate(b):
        out[i] = out[i] + x
    return _qstrip(out)


def _qmul(a, b):
    if not a or not b:
        return []
    out = [RAT_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return _qstrip(out)


def _qdivmod(a, b):
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    a = list(a)
    q = [RAT_ZERO] * max(0, len(a) - len(b) + 1)
    inv = 1 / b[-1]
    while len(a) >= len(b):
        c = a[-1] * inv
        k = len(a) - len(b)
        q[k] = c
        for i, y in enumerate(b):
            a[k + i] = a[k + i] - c * y
        _qstrip(a)
        if not a:
            break
    return _qstrip(q), a


def _qgcd_monic(a, b):
    a, b = list(a), list(b)
    while b:
        a, b = b, _qdivmod(a, b)[1]
    if a:
        inv = 1 / a[-1]
        a = [c * inv for c in a]
    return a


def _is_irreducible_over_q(coeffs) -> bool:
    """Irreducibility over Q of a nonconstant polynomial, via sympy."""
    import sympy

    t = sympy.Symbol("t")
    expr = sum(sympy.Rational(int(c.numerator), int(c.denominator)) * t**i
               for i, c in enumerate(coeffs))
    _, factors = sympy.Poly(expr, t, domain="QQ").factor_list()
    return len(factors) == 1 and factors[0][1] == 1


# ---------------------------------------------------------------------------


class NumberField:
    """Q[t]/(minpoly); degree 1 with minpoly t is Q itself."""

    __slots__ = ("minpoly", "degree", "_red", "_hash")

    _rationals = None

    def __init__(self, minpoly, check_irreducible: bool = True):
        mp = [Rat(c) for c in minpoly]
        if len(mp) < 2:
            raise CurvelabError("minimal polynomial must be nonconstant")
        if mp[-1] != 1:
            inv = 1 / mp[-1]
            mp = [c * inv for c in mp]
        self.minpoly = tuple(mp)
        self.degree = len(mp) - 1
        if check_irreducible and self.degree > 1 and not _is_irreducible_over_q(mp):
            raise CurvelabError("minimal polynomial is reducible over Q")
        # reduction table: a^(degree+k) as a coordinate vector, k = 0..degree-2
        d = self.degree
        red = []
        cur = [-c for c in mp[:-1]]  # a^d
        red.append(list(cur))
        for _ in range(d - 2):
            nxt = [RAT_ZERO] + cur  # times a
            if len(nxt) > d:
                top = nxt.pop()
                for i in range(d):
                    nxt[i] = nxt[i] + top * red[0][i]
            while len(nxt) < d:
                nxt.append(RAT_ZERO)
            red.append(nxt)
            cur = nxt
        self._red = red
        self._hash = hash(self.minpoly)

    @classmethod
    def rationals(cls) -> "NumberField":
        if cls._rationals is None:
            cls._rationals = cls((0, 1), check_irreducible=False)
        return cls._rationals

    @property
    def is_q(self) -> bool:
        return self.degree == 1

    def __eq__(self, other) -> bool:
        return isinstance(other, NumberField) and self.minpoly == other.minpoly

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        if self.is_q:
            return "Q"
        return f"Q(a: {self.minpoly_str()})"

    def minpoly_str(self) -> str:
        parts = []
        for i, c in enumerate(self.minpoly):
            if c == 0:
                continue
            mono = "1" if i == 0 else ("t" if i == 1 else f"t^{i}")
            parts.append(f"{rat_str(c)}*{mono}" if i else rat_str(c))
        return " + ".join(parts) if parts else "0"

    # -- element constructors ------------------------------------------------

    def element(self, coords) -> "FieldElement":
        co = [Rat(c) for c in coords]
        if len(co) > self.degree:
            raise CurvelabError("coordinate vector too long")
        co += [RAT_ZERO] * (self.degree - len(co))
        return FieldElement(self, tuple(co))

    def zero(self) -> "FieldElement":
        return self.element([])

    def one(self) -> "FieldElement":
        return self.element([RAT_ONE])

    def from_rational(self, q) -> "FieldElement":
        return self.element([Rat(q)])

    def generator(self) -> "FieldElement":
        if self.is_q:
            return self.zero()
        return self.element([RAT_ZERO, RAT_ONE])

    def _reduce(self, conv):
        """Reduce a convolution of length <= 2*degree-1 modulo the minpoly."""
        d = self.degree
        out = list(conv[:d]) + [RAT_ZERO] * max(0, d - len(conv))
        for k in range(d, len(conv)):
            c = conv[k]
            if c == 0:
                continue
            row = self._red[k - d]
            for i in range(d):
                out[i] = out[i] + c * row[i]
        return out


class FieldElement:
    """An element of a NumberField, exact and immutable."""

    __slots__ = ("field", "coords", "_hash")

    def __init__(self, field: NumberField, coords: tuple):
        self.field = field
        self.coords = coords
        self._hash = None

    # -- predicates -----------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def as_rational(self):
        if not self.is_rational():
            raise CurvelabError("element is not rational")
        return self.coords[0]

    # -- arithmetic -------------------------------------------------------------

    def _check(self, other: "FieldElement"):
        if self.field is not other.field and self.field != other.field:
            raise CurvelabError("elements of different fields")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, tuple(-a for a in self.coords))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        d = self.field.degree
        if d == 1:
            return FieldElement(self.field, (self.coords[0] * other.coords[0],))
        a, b = self.coords, other.coords
        conv = [RAT_ZERO] * (2 * d - 1)
        for i in range(d):
            x = a[i]
            if x == 0:
                continue
            for j in range(d):
                y = b[j]
                if y == 0:
                    continue
                conv[i + j] = conv[i + j] + x * y
        return FieldElement(self.field, tuple(self.field._reduce(conv)))

    def scale(self, q) -> "FieldElement":
        return FieldElement(self.field, tuple(c * q for c in self.coords))

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        d = self.field.degree
        if d == 1:
            return FieldElement(self.field, (1 / self.coords[0],))
        # extended Euclid in Q[t] against the minimal polynomial
        m = list(self.field.minpoly)
        r0, r1 = m, _qstrip(list(self.coords))
        s0, s1 = [], [RAT_ONE]
        while True:
            q, r = _qdivmod(r0, r1)
            if not r:
                break
            s = _qadd(s0, [-c for c in _qmul(q, s1)])
            r0, r1, s0, s1 = r1, r, s1, s
        # r1 is the gcd, a nonzero constant since minpoly is irreducible
        inv_c = 1 / r1[0]
        coords = [c * inv_c for c in s1]
        coords += [RAT_ZERO] * (d - len(coords))
        return FieldElement(self.field, tuple(coords[:d]))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * other.inverse()

    def __pow__(self, n: int) -> "FieldElement":
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparisons -------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.coords == other.coords

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field, self.coords))
        return self._hash

    def __repr__(self) -> str:
        return f"FieldElement({self})"

    def __str__(self) -> str:
        if self.is_rational():
            return rat_str(self.coords[0])
        parts = []
        for i, c in enumerate(self.coords):
            if c == 0:
                continue
            if i == 0:
                parts.append(rat_str(c))
            else:
                mono = "a" if i == 1 else f"a^{i}"
                parts.append(mono if c == 1 else f"{rat_str(c)}*{mono}")
        return " + ".join(parts) if parts else "0"

    def sort_key(self):
        return tuple((c.numerator, c.denominator) for c in self.coords)


QQ = NumberField.rationals()


def embed(elem: FieldElement, field: NumberField) -> FieldElement:
    """Embed a rational-valued element into another field."""
    if elem.field == field:
        return elem
    if elem.is_rational():
        return field.from_rational(elem.coords[0])
    raise CurvelabError("cannot embed a proper extension element into another field")
