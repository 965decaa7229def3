"""Exact rational scalars.

All coefficients in the package are arbitrary-precision rationals, stored in
lowest terms with a positive denominator.  gmpy2's mpq is used when available
(it is several times faster than fractions.Fraction); both types satisfy the
same invariants and hash identically, so they can be mixed freely in tests.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq

    def Rat(a=0, b=1):
        return _mpq(a, b)

    RAT_TYPES = (type(_mpq(0)), Fraction, int)
except ImportError:  # pragma: no cover - gmpy2 is normally present
    def Rat(a=0, b=1):
        return Fraction(a, b)

    RAT_TYPES = (Fraction, int)

RAT_ZERO = Rat(0)
RAT_ONE = Rat(1)


def rat_from_str(text: str):
    """Parse "p" or "p/q" into an exact rational."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return Rat(int(num), int(den))
    return Rat(int(text))


def rat_str(q) -> str:
    """Canonical "p" or "p/q" rendering."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def is_integer(q) -> bool:
    return q.denominator == 1
