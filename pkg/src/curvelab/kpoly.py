"""Dense univariate polynomials over a number field, as coefficient lists.

Coefficient lists are low-degree-first lists of FieldElement, with no trailing
zeros; [] is the zero polynomial.  This is the workhorse representation for
tangent-direction polynomials, eliminant roots and Trager's algorithm.
"""

from __future__ import annotations

from .numberfield import FieldElement, NumberField


def strip(c: list) -> list:
    while c and c[-1].is_zero():
        c.pop()
    return c


def degree(c: list) -> int:
    return len(c) - 1


def is_zero(c: list) -> bool:
    return not c


def add(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        if i < len(a) and i < len(b):
            out.append(a[i] + b[i])
        elif i < len(a):
            out.append(a[i])
        else:
            out.append(b[i])
    return strip(out)


def neg(a: list) -> list:
    return [-c for c in a]


def mul(field: NumberField, a: list, b: list) -> list:
    if not a or not b:
        return []
    zero = field.zero()
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            if y.is_zero():
                continue
            out[i + j] = out[i + j] + x * y
    return strip(out)


def scale(a: list, c: FieldElement) -> list:
    return strip([x * c for x in a])


def divmod_(a: list, b: list) -> tuple[list, list]:
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    a = list(a)
    q: list = []
    inv = b[-1].inverse()
    qlen = max(0, len(a) - len(b) + 1)
    field = b[-1].field
    q = [field.zero()] * qlen
    while len(a) >= len(b):
        c = a[-1] * inv
        k = len(a) - len(b)
        q[k] = c
        for i, y in enumerate(b):
            a[k + i] = a[k + i] - c * y
        strip(a)
        if not a:
            break
    return strip(q), a


def monic(a: list) -> list:
    if not a:
        return a
    if a[-1].is_rational() and a[-1].coords[0] == 1:
        return a
    inv = a[-1].inverse()
    return [c * inv for c in a]


def gcd_monic(a: list, b: list) -> list:
    a, b = list(a), list(b)
    while b:
        a, b = b, divmod_(a, b)[1]
    return monic(a)


def derivative(field: NumberField, a: list) -> list:
    out = []
    for i in range(1, len(a)):
        out.append(a[i].scale(i))
    return strip(out)


def evaluate(field: NumberField, a: list, x: FieldElement) -> FieldElement:
    acc = field.zero()
    for c in reversed(a):
        acc = acc * x + c
    return acc


def compose_linear(field: NumberField, a: list, shift: FieldElement,
                   scale_x: FieldElement | None = None) -> list:
    """a(scale_x * x + shift), by Horner."""
    acc: list = []
    sx = [shift, scale_x if scale_x is not None else field.one()]
    for c in reversed(a):
        acc = add(mul(field, acc, sx), [c])
    return strip(acc)


def squarefree_decomposition(field: NumberField, a: list) -> list[tuple[list, int]]:
    """Yun's algorithm over a characteristic-0 field: [(factor_i, i)] with
    a = lc * prod factor_i^i and each factor_i squarefree, pairwise coprime."""
    if degree(a) < 1:
        return []
    a = monic(a)
    d = derivative(field, a)
    g = gcd_monic(a, d)
    out = []
    c = divmod_(a, g)[0]
    w = divmod_(d, g)[0]
    i = 1
    while degree(c) >= 1:
        y = add(w, neg(derivative(field, c)))
        z = gcd_monic(c, y)
        if degree(z) >= 1:
            out.append((z, i))
        c = divmod_(c, z)[0]
        w = divmod_(y, z)[0]
        i += 1
    return out


def roots_in_field(field: NumberField, a: list) -> list[FieldElement]:
    """All roots of a (nonzero) that lie in the coefficient field, via
    factoring; multiplicities are not repeated."""
    from .factor import factor_list_k

    out = []
    for fac, _ in factor_list_k(field, a):
        if degree(fac) == 1:
            out.append(-(fac[0] / fac[1]))
    out.sort(key=lambda e: e.sort_key())
    return out
