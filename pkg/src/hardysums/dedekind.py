"""Dedekind sums, the Dedekind symbol and the Rademacher cocycle."""

from fractions import Fraction

from hardysums import kernels
from hardysums.exact import DomainError, gcd, sign
from hardysums.modgroup import Mat


def _check(d, c):
    if c <= 0:
        raise DomainError(f"Dedekind sum s({d}, {c}) needs c > 0")
    if gcd(d, c) != 1:
        raise DomainError(f"Dedekind sum s({d}, {c}) needs gcd(d, c) = 1")


def dedekind_naive(d, c):
    """``s(d, c)`` by direct summation of ``((k/c)) ((kd/c))``, ``Theta(c)`` work."""
    _check(d, c)
    return Fraction(kernels.dedekind_scaled(d, c), 4 * c * c)


def dedekind_fast(d, c):
    """``s(d, c)`` through the Euclidean algorithm in ``O(log c)`` steps.

    Reduce ``d`` modulo ``c`` (periodicity), then repeatedly apply
    reciprocity ``s(d, c) = (c^2 + d^2 + 1)/(12cd) - 1/4 - s(c mod d, d)``
    down to ``s(0, 1) = 0``.  Summed with alternating signs, the
    ``c_i/d_i + d_i/c_i`` parts telescope to ``d/c`` plus the alternating sum
    ``Q`` of partial quotients, and the ``1/(c_i d_i)`` parts to
    ``d^-1 mod c`` over ``c`` (shifted down by ``c`` after an even number of
    steps), so the loop needs integers only and one fraction is built at the
    end.
    """
    _check(d, c)
    d0 = d % c
    if d0 == 0:
        return Fraction(0)
    ci, di = c, d0
    q_alt = 0
    steps = 0
    while di:
        q, r = divmod(ci, di)
        q_alt += -q if steps & 1 else q
        ci, di = di, r
        steps += 1
    inv = pow(d0, -1, c)
    if steps % 2 == 0:
        inv -= c
    odd = steps & 1
    return Fraction(c * q_alt + d0 + inv - 3 * c * odd, 12 * c)


def dedekind_general(d, c):
    """``s(d, c)`` for any ``d`` and ``c > 0``, using ``s(hd, hc) = s(d, c)``."""
    if c <= 0:
        raise DomainError(f"Dedekind sum s({d}, {c}) needs c > 0")
    g = gcd(d, c)
    return dedekind_fast(d // g, c // g)


def dedekind_symbol(A):
    """The integer-valued Dedekind symbol of a unimodular matrix.

    ``b/d`` when ``c = 0`` (so ``b`` for ``d = 1``) and
    ``(a + d)/c - 12 s(d, c)`` otherwise.  Matrices with ``c < 0`` are
    evaluated through ``-A``, which gives the same value.

    Coboundary: ``Phi(AB) - Phi(A) - Phi(B) = 3 * w(A, B)`` with ``w`` the
    Rademacher cocycle.
    """
    if not isinstance(A, Mat):
        A = Mat(*A)
    a, b, c, d = A.a, A.b, A.c, A.d
    if c == 0:
        return b * d
    if c < 0:
        a, b, c, d = -a, -b, -c, -d
    value = Fraction(a + d, c) - 12 * dedekind_fast(d, c)
    if value.denominator != 1:
        raise ArithmeticError(f"Dedekind symbol of {A} is not integral: {value}")
    return value.numerator


def rademacher_cocycle(A, B):
    """``w(A, B) = -sign(c_A c_B c_AB)``."""
    AB = A @ B
    return -sign(A.c * B.c * AB.c)
