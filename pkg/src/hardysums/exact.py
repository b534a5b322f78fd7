"""Exact rationals, the boundary of the upper half-plane, and small helpers.

Rationals are :class:`fractions.Fraction`: always reduced with a positive
denominator, so structural equality is value equality.  Nothing in this
package ever converts to ``float``.
"""

from fractions import Fraction
from math import gcd as _gcd


class DomainError(ValueError):
    """An argument violates a mathematical precondition."""


class ResourceError(RuntimeError):
    """A brute-force enumeration would exceed the configured iteration cap."""


Rational = Fraction


class _Infinity:
    """The cusp ``i*oo``, the single point at infinity of ``Q u {oo}``."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "oo"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


def is_infinite(x):
    return x is INF


def gcd(a, b):
    """Greatest common divisor, always nonnegative; ``gcd(0, 0) == 0``."""
    return _gcd(a, b)


def sign(n):
    """-1, 0 or +1 according to the sign of ``n`` (``sign(0) == 0``)."""
    return (n > 0) - (n < 0)


def floor_q(x):
    """Greatest integer not exceeding the rational ``x``."""
    x = Fraction(x)
    return x.numerator // x.denominator


def sawtooth(x):
    """The sawtooth ``((x))``: ``x - floor(x) - 1/2`` off the integers, 0 on them."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - floor_q(x) - Fraction(1, 2)


def as_boundary(x):
    """Coerce ``x`` to a boundary point: ``INF`` or a :class:`Fraction`."""
    if x is INF:
        return INF
    return Fraction(x)


def parse_rational(text):
    """Parse ``"a/c"``, an integer, or ``"oo"``/``"inf"`` into a boundary point.

    Raises :class:`DomainError` on malformed input or a zero denominator.
    """
    t = text.strip()
    if t.lower() in ("oo", "inf", "infinity"):
        return INF
    try:
        if "/" in t:
            num, den = t.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(t))
    except ZeroDivisionError:
        raise DomainError(f"zero denominator in {text!r}") from None
    except ValueError:
        raise DomainError(f"not an exact rational: {text!r}") from None


def render(x):
    """Exact text form: ``"n"`` for integers, ``"p/q"`` otherwise, ``"oo"`` for infinity."""
    if x is INF:
        return "oo"
    return str(Fraction(x))
