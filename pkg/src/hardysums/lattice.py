"""Lattice points in the triangles ``T(d, c)`` and tetrahedra ``D(u, v, w)``.

Region conventions, fixed everywhere in this module:

* ``T(d, c)``: ``x, y >= 0`` and ``x/d + y/c < 1`` (legs and right angle in,
  hypotenuse and acute vertices out).
* ``D(u, v, w)``: ``x, y, z >= 0`` and ``0 < x/u + y/v + z/w < 1``.

Closed forms are evaluated in exact rationals.  ``*_printed`` variants
reproduce the formulas exactly as published; they are off by a small
structured constant, reported through :class:`CountReport`.
"""

from dataclasses import dataclass
from fractions import Fraction
import os

from hardysums import kernels
from hardysums.dedekind import dedekind_fast, dedekind_general
from hardysums.exact import DomainError, ResourceError, gcd
from hardysums.hardy import s4_via_dedekind

DEFAULT_MAX_ITERATIONS = 10**8
ENV_MAX_ITERATIONS = "HARDYSUMS_MAX_ITERATIONS"


def max_iterations():
    value = os.environ.get(ENV_MAX_ITERATIONS)
    return int(value) if value else DEFAULT_MAX_ITERATIONS


def _guard(work, limit, what):
    limit = max_iterations() if limit is None else limit
    if work > limit:
        raise ResourceError(
            f"{what} needs about {work} iterations, above the cap of {limit}; "
            "use the closed form or raise --max-iterations"
        )


def _positive(*args):
    for n in args:
        if n < 1:
            raise DomainError(f"lattice problem sizes must be >= 1, got {args}")


def _integral(value, formula):
    if value.denominator != 1:
        raise ArithmeticError(f"{formula} produced the non-integral count {value}")
    return value.numerator


@dataclass(frozen=True)
class CountReport:
    """Brute-force count against the printed and corrected closed forms."""

    brute: int
    closed_printed: Fraction
    closed_corrected: Fraction

    @property
    def delta(self):
        """``closed_printed - brute``."""
        return self.closed_printed - self.brute

    @property
    def corrected_ok(self):
        return self.closed_corrected == self.brute


def count_triangle_z2_brute(d, c, max_iterations=None):
    _positive(d, c)
    _guard(c * d, max_iterations, f"T({d}, {c}) enumeration")
    return kernels.count_triangle(d, c, 1)


def count_triangle_z2_closed(d, c):
    """Pick count ``(c + 1)(d + 1)/2 - 1`` for coprime ``d, c``."""
    _positive(d, c)
    if gcd(d, c) != 1:
        raise DomainError(f"T({d}, {c}) closed form needs gcd(d, c) = 1")
    return _integral(Fraction((c + 1) * (d + 1), 2) - 1, "Pick count")


def count_triangle_2z2_brute(d, c, max_iterations=None):
    _positive(d, c)
    _guard(((d + 1) // 2) * ((c + 1) // 2), max_iterations, f"T({d}, {c}) even enumeration")
    return kernels.count_triangle(d, c, 2)


def _even_parts(d, c):
    _positive(d, c)
    if gcd(d, c) != 1:
        raise DomainError(f"T({d}, {c}) closed form needs gcd(d, c) = 1")


def triangle_2z2_printed(d, c):
    """The published closed form for ``#(T(d, c) n (2Z)^2)``, kept verbatim."""
    _even_parts(d, c)
    if d % 2 and c % 2:
        return Fraction(1, 8) * (c * d + 2 * d + 2 * c + s4_via_dedekind(d, c) + s4_via_dedekind(c, d))
    if c % 2 == 0:
        d, c = c, d
    return Fraction(1, 4) * (
        c + d + Fraction(c * d, 2) - Fraction(1, 2 * c * d) + s4_via_dedekind(c, d // 2)
    )


def triangle_2z2_corrected(d, c):
    _even_parts(d, c)
    if d % 2 and c % 2:
        return Fraction(1, 8) * (
            c * d + 2 * d + 2 * c + 3 + s4_via_dedekind(d, c) + s4_via_dedekind(c, d)
        )
    if c % 2 == 0:
        d, c = c, d
    return Fraction(1, 4) * (c + d + Fraction(c * d, 2) + s4_via_dedekind(c, d // 2))


def count_triangle_2z2_closed(d, c):
    """``#(T(d, c) n (2Z)^2)`` for coprime ``d, c`` in terms of ``S_4``.

    Both odd: ``(cd + 2c + 2d + 3 + S4(d, c) + S4(c, d)) / 8``.
    ``d`` even: ``(c + d + cd/2 + S4(c, d/2)) / 4``; an even ``c`` is handled
    by the symmetry ``T(d, c) <-> T(c, d)``.
    """
    return _integral(triangle_2z2_corrected(d, c), "triangle (2Z)^2 count")


def triangle_2z2_report(d, c, max_iterations=None):
    return CountReport(
        brute=count_triangle_2z2_brute(d, c, max_iterations),
        closed_printed=triangle_2z2_printed(d, c),
        closed_corrected=triangle_2z2_corrected(d, c),
    )


def count_tetra_brute(u, v, w, max_iterations=None):
    _positive(u, v, w)
    _guard(u * v * w, max_iterations, f"D({u}, {v}, {w}) enumeration")
    return kernels.count_tetra(u, v, w)


def tetra_mordell_value(u, v, w):
    """Right-hand side of Mordell's formula as an exact rational."""
    _positive(u, v, w)
    if gcd(u, v) != 1 or gcd(u, w) != 1 or gcd(v, w) != 1:
        raise DomainError(f"Mordell's formula needs pairwise coprime u, v, w; got {(u, v, w)}")
    uvw = u * v * w
    return (
        Fraction(uvw, 6)
        + Fraction(u * v + u * w + v * w, 4)
        + Fraction(u + v + w, 4)
        + Fraction(1, 12) * (Fraction(u * v, w) + Fraction(u * w, v) + Fraction(v * w, u))
        + Fraction(1, 12 * uvw)
        - 2
        - (dedekind_fast(u * v, w) + dedekind_fast(u * w, v) + dedekind_fast(v * w, u))
    )


def count_tetra_mordell(u, v, w):
    """``#(D(u, v, w) n Z^3)`` for pairwise coprime ``u, v, w`` via Dedekind sums."""
    return _integral(tetra_mordell_value(u, v, w), "Mordell's formula")


def _check_mordell2(d, c):
    _positive(d, c)
    if d % 2 or c % 2 == 0:
        raise DomainError(f"D({d}, {c}, 2) formula needs d even and c odd")
    if gcd(d, c) != 1:
        raise DomainError(f"D({d}, {c}, 2) formula needs gcd(d, c) = 1")


def _mordell2(d, c, tail):
    return (
        Fraction(c * d, 3)
        + Fraction(2 * c + 2 * d + c * d, 4)
        + Fraction(c + d + 2, 4)
        + Fraction(1, 12) * (Fraction(2 * c, d) + Fraction(2 * d, c) + Fraction(c * d, 2))
        + tail
        - Fraction(5, 2)
        - (2 * dedekind_fast(d, c) + dedekind_general(2 * c, d))
    )


def tetra_mordell2_printed(d, c):
    _check_mordell2(d, c)
    return _mordell2(d, c, Fraction(1, 24 * c * d))


def tetra_mordell2_corrected(d, c):
    """Printed formula with the ``1/(24cd)`` term replaced by ``1/(6cd)``."""
    _check_mordell2(d, c)
    return _mordell2(d, c, Fraction(1, 6 * c * d))


def count_tetra_mordell2(d, c, max_iterations=None):
    """:class:`CountReport` for ``D(d, c, 2)`` with ``d`` even, ``c`` odd."""
    _check_mordell2(d, c)
    return CountReport(
        brute=count_tetra_brute(d, c, 2, max_iterations),
        closed_printed=tetra_mordell2_printed(d, c),
        closed_corrected=tetra_mordell2_corrected(d, c),
    )


def lemma_both_odd_sides(d, c):
    """Both sides of ``s(2c, d) + s(2d, c) = (4c^2 + 4d^2 + 1)/(24cd) - (S4(d,c) + S4(c,d))/8 - 3/8``."""
    lhs = dedekind_fast(2 * c, d) + dedekind_fast(2 * d, c)
    rhs = (
        Fraction(4 * c * c + 4 * d * d + 1, 24 * c * d)
        - Fraction(s4_via_dedekind(d, c) + s4_via_dedekind(c, d), 8)
        - Fraction(3, 8)
    )
    return lhs, rhs


def lemma_one_even_sides(d, c):
    """Both sides of ``2 s(d, c) + s(2c, d) = (d^2 + c^2 + 1)/(6cd) - 1/2 - S4(c, d/2)/4``."""
    lhs = 2 * dedekind_fast(d, c) + dedekind_general(2 * c, d)
    rhs = Fraction(d * d + c * c + 1, 6 * c * d) - Fraction(1, 2) - Fraction(s4_via_dedekind(c, d // 2), 4)
    return lhs, rhs


def verify_lemma_identities(bound):
    """Check both Hardy-sum lemmas for all valid pairs ``1 <= d, c <= bound``.

    Returns a list of violations ``(lemma, d, c, lhs, rhs)``; empty when both
    identities hold.
    """
    if bound < 1:
        raise DomainError("bound must be >= 1")
    bad = []
    for d in range(1, bound + 1):
        for c in range(1, bound + 1):
            if gcd(d, c) != 1:
                continue
            if d % 2 and c % 2:
                lhs, rhs = lemma_both_odd_sides(d, c)
                if lhs != rhs:
                    bad.append(("hardybothodd", d, c, lhs, rhs))
            elif d % 2 == 0:
                lhs, rhs = lemma_one_even_sides(d, c)
                if lhs != rhs:
                    bad.append(("hardyoneeven", d, c, lhs, rhs))
    return bad
