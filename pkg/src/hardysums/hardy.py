"""Hardy sums ``S_4`` and ``S`` and their matrix versions on the theta group and ``Gamma^0(2)``."""

from hardysums import kernels
from hardysums.dedekind import dedekind_fast, dedekind_symbol
from hardysums.exact import DomainError, gcd, sign
from hardysums.modgroup import Mat, in_gamma0_2, in_gamma_theta


def _check_s4(d, c):
    if c <= 0:
        raise DomainError(f"S4({d}, {c}) needs c > 0")
    if d % 2 == 0:
        raise DomainError(f"S4({d}, {c}) needs d odd")
    if gcd(d, c) != 1:
        raise DomainError(f"S4({d}, {c}) needs gcd(d, c) = 1")


def s4_naive(d, c):
    """``S_4(d, c) = sum_{k=1}^{c-1} (-1)^floor(kd/c)``."""
    _check_s4(d, c)
    return kernels.s4_sum(d, c)


def s4_via_dedekind(d, c):
    """``S_4(d, c) = 8 s(d, 2c) - 4 s(d, c)``, logarithmic time."""
    _check_s4(d, c)
    value = 8 * dedekind_fast(d, 2 * c) - 4 * dedekind_fast(d, c)
    if value.denominator != 1:
        raise ArithmeticError(f"S4({d}, {c}) evaluated to non-integer {value}")
    return value.numerator


def s_naive(d, c):
    """``S(d, c) = sum_{k=1}^{|c|-1} (-1)^(floor(kd/c) + k + 1)``."""
    if c == 0:
        raise DomainError(f"S({d}, {c}) needs c != 0")
    if gcd(d, c) != 1:
        raise DomainError(f"S({d}, {c}) needs gcd(d, c) = 1")
    if (c + d) % 2 == 0:
        raise DomainError(f"S({d}, {c}) needs c + d odd")
    return kernels.s_sum(d, c)


def frak_s_column(a, c):
    """Hardy sum of the cusp ``a/c`` by the Euclidean recursion.

    Translate ``a`` by a multiple of ``2c`` into ``(-|c|, |c|]`` (invariance
    under ``T^(2n)`` on the left), add ``sign(ac)`` and continue with the first
    column ``(c, -a)`` of ``S^-1 A`` until ``c = 0``.
    """
    if gcd(a, c) != 1 or (a + c) % 2 == 0:
        raise DomainError(f"({a}, {c}) is not the first column of a theta-group matrix")
    total = 0
    while c:
        m = abs(c)
        a = (a + m - 1) % (2 * m) - m + 1
        total += sign(a * c)
        a, c = c, -a
    return total


def frak_s(A):
    """``S(a, c)`` for ``A = [[a, *], [c, *]]`` in the theta group, 0 when ``c = 0``."""
    if not isinstance(A, Mat):
        A = Mat(*A)
    if not in_gamma_theta(A):
        raise DomainError(f"matrix {A} is not in the theta group")
    return frak_s_column(A.a, A.c)


def frak_s4(a, c):
    """Hardy sum ``S_4`` of the cusp ``a/c`` of ``Gamma^0(2)``.

    Equal to ``S_4(a, c)`` for ``c > 0``, to the value at ``(-a, -c)`` for
    ``c < 0`` and 0 at ``c = 0``; it satisfies ``frak_s(x + 1) = -frak_s4(x)``.
    """
    if a % 2 == 0:
        raise DomainError(f"({a}, {c}) needs a odd")
    if gcd(a, c) != 1:
        raise DomainError(f"({a}, {c}) needs gcd(a, c) = 1")
    if c == 0:
        return 0
    if c < 0:
        a, c = -a, -c
    return s4_via_dedekind(a, c)


def frak_s4_matrix(A):
    if not in_gamma0_2(A):
        raise DomainError(f"matrix {A} is not in Gamma^0(2)")
    return frak_s4(A.a, A.c)


def chi_theta(A):
    """The homomorphism ``Phi - 3 frak_s`` on the theta group.

    Takes the value 2 at ``T^2`` and 0 at ``S``.
    """
    if not isinstance(A, Mat):
        A = Mat(*A)
    if not in_gamma_theta(A):
        raise DomainError(f"matrix {A} is not in the theta group")
    return dedekind_symbol(A) - 3 * frak_s(A)


def chi_0_2(A):
    """The homomorphism ``Phi + 3 frak_s4`` on ``Gamma^0(2)``."""
    if not in_gamma0_2(A):
        raise DomainError(f"matrix {A} is not in Gamma^0(2)")
    return dedekind_symbol(A) + 3 * frak_s4(A.a, A.c)
