"""Univariate factorization over Q and over one simple extension."""

import random

import pytest

from curvelab.errors import CurvelabError
from curvelab.factor import factor_list_k, factor_univariate
from curvelab.mpoly import MPoly
from curvelab.numberfield import QQ, NumberField
from curvelab.parsing import parse_polynomial
from curvelab.rationals import Rat
from curvelab import kpoly


def T(text):
    return parse_polynomial(text, ("t",))


def refold(p, factors):
    out = MPoly.constant(p.vars, p.field.one())
    for fac, mult in factors:
        out = out * fac ** mult
    return out


def test_simple_split():
    facs = factor_univariate(T("t^2-1"))
    assert [(str(f), m) for f, m in facs] == [("t - 1", 1), ("t + 1", 1)]


def test_irreducible_quadratic():
    facs = factor_univariate(T("t^2+1"))
    assert [(str(f), m) for f, m in facs] == [("t^2 + 1", 1)]


def _has_rational_root(coeffs):
    # rational root theorem brute force on integer-cleared coefficients
    import math

    den = 1
    for c in coeffs:
        den = den * int(c.denominator) // math.gcd(den, int(c.denominator))
    ic = [int(c * den) for c in coeffs]
    a0, an = abs(ic[0]), abs(ic[-1])
    if a0 == 0:
        return True
    for p in range(1, a0 + 1):
        if a0 % p:
            continue
        for q in range(1, an + 1):
            if an % q:
                continue
            for sgn in (1, -1):
                r = Rat(sgn * p, q)
                if sum(c * r ** i for i, c in enumerate(ic)) == 0:
                    return True
    return False


def test_t4_minus_2_irreducible_with_bruteforce_oracle():
    coeffs = [Rat(-2), Rat(0), Rat(0), Rat(0), Rat(1)]
    # independent oracle: no rational roots and no quadratic factorization
    assert not _has_rational_root(coeffs)
    found_quadratic_split = False
    for a in range(-6, 7):
        for b in range(-6, 7):
            # (t^2 + a t + b)(t^2 - a t + c): match coefficients of t^4 - 2
            # t^4 + (b + c - a^2) t^2 + a(c - b) t + bc
            for c in range(-6, 7):
                if b + c - a * a == 0 and a * (c - b) == 0 and b * c == -2:
                    found_quadratic_split = True
    assert not found_quadratic_split
    facs = factor_univariate(T("t^4-2"))
    assert [(str(f), m) for f, m in facs] == [("t^4 - 2", 1)]


def test_refold_random_over_q():
    rng = random.Random(11)
    for _ in range(20):
        coeffs = {(i,): rng.randint(-5, 5) for i in range(rng.randint(2, 7))}
        p = MPoly.from_rationals(("t",), coeffs)
        if p.is_zero() or p.is_constant():
            continue
        facs = factor_univariate(p)
        assert refold(p, facs) == p.canonical()


def test_factor_with_multiplicities():
    p = T("(t-1)^3*(t^2+t+1)^2")
    facs = factor_univariate(p)
    assert refold(p, facs) == p.canonical()
    mults = sorted(m for _, m in facs)
    assert mults == [2, 3]


def test_factor_over_sqrt2():
    K = NumberField([-2, 0, 1])
    a = K.generator()
    coeffs = [K.from_rational(Rat(-2)), K.zero(), K.one()]  # t^2 - 2
    facs = factor_list_k(K, coeffs)
    assert len(facs) == 2
    rebuilt = [K.one()]
    for fac, m in facs:
        assert m == 1 and kpoly.degree(fac) == 1
        rebuilt = kpoly.mul(K, rebuilt, fac)
    assert rebuilt == kpoly.monic(coeffs)
    roots = sorted(str(-(f[0] / f[1])) for f, _ in facs)
    assert roots == ["-1*a", "a"]


def test_factor_over_extension_stays_irreducible():
    # t^2 - 3 stays irreducible over Q(sqrt 2)
    K = NumberField([-2, 0, 1])
    coeffs = [K.from_rational(Rat(-3)), K.zero(), K.one()]
    facs = factor_list_k(K, coeffs)
    assert len(facs) == 1 and facs[0][1] == 1 and kpoly.degree(facs[0][0]) == 2


def test_factor_cyclotomic_over_qi():
    # t^4 + 1 = (t^2 - i)(t^2 + i) over Q(i)
    K = NumberField([1, 0, 1])
    coeffs = [K.one(), K.zero(), K.zero(), K.zero(), K.one()]
    facs = factor_list_k(K, coeffs)
    assert sorted(kpoly.degree(f) for f, _ in facs) == [2, 2]
    prod = [K.one()]
    for f, m in facs:
        for _ in range(m):
            prod = kpoly.mul(K, prod, f)
    assert prod == coeffs


def test_factor_multiplicity_over_extension():
    K = NumberField([1, 0, 1])
    a = K.generator()
    # (t - a)^2 (t + 1)
    lin1 = [-a, K.one()]
    fac = kpoly.mul(K, kpoly.mul(K, lin1, lin1), [K.one(), K.one()])
    facs = factor_list_k(K, fac)
    assert sorted((kpoly.degree(f), m) for f, m in facs) == [(1, 1), (1, 2)]


def test_constant_rejected():
    with pytest.raises(CurvelabError):
        factor_univariate(T("7"))
