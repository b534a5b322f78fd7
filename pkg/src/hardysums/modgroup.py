"""Unimodular integer matrices, theta-group words and the Moebius action."""

from dataclasses import dataclass
from fractions import Fraction
import random

from hardysums.exact import INF, DomainError


@dataclass(frozen=True)
class Mat:
    """``[[a, b], [c, d]]`` with integer entries and ``ad - bc = 1``."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise DomainError(
                f"matrix [[{self.a}, {self.b}], [{self.c}, {self.d}]] "
                "is not unimodular (determinant != 1)"
            )

    def __matmul__(self, other):
        a, b, c, d = self.a, self.b, self.c, self.d
        e, f, g, h = other.a, other.b, other.c, other.d
        return Mat(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def __neg__(self):
        return Mat(-self.a, -self.b, -self.c, -self.d)

    def __pow__(self, n):
        base = self if n >= 0 else self.inv()
        n = abs(n)
        out = I
        while n:
            if n & 1:
                out = out @ base
            base = base @ base
            n >>= 1
        return out

    def inv(self):
        return Mat(self.d, -self.b, -self.c, self.a)

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def __str__(self):
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


I = Mat(1, 0, 0, 1)
T = Mat(1, 1, 0, 1)
S = Mat(0, -1, 1, 0)
V = Mat(1, 0, 1, 1)
T2 = Mat(1, 2, 0, 1)


def mat_mul(A, B):
    return A @ B


def mat_inv(A):
    return A.inv()


def in_gamma_theta(A):
    """Membership in the theta group: ``a = d`` and ``b = c`` modulo 2."""
    return (A.a - A.d) % 2 == 0 and (A.b - A.c) % 2 == 0


def in_gamma0_2(A):
    """Membership in ``Gamma^0(2)``: ``b`` even."""
    return A.b % 2 == 0


def moebius(A, x):
    """Apply ``z -> (az + b)/(cz + d)`` to a boundary point (``INF`` or rational)."""
    if x is INF:
        if A.c == 0:
            return INF
        return Fraction(A.a, A.c)
    x = Fraction(x)
    p, q = x.numerator, x.denominator
    num = A.a * p + A.b * q
    den = A.c * p + A.d * q
    if den == 0:
        return INF
    return Fraction(num, den)


def cusp(A):
    """``A`` applied to ``i*oo``."""
    return moebius(A, INF)


@dataclass(frozen=True)
class GeneratorWord:
    """``sign * T^(2 n_0) S T^(2 n_1) S ... S T^(2 n_{r+1})``.

    ``exponents`` holds ``n_0 .. n_{r+1}``; the word contains
    ``len(exponents) - 1`` copies of ``S``.
    """

    sign: int
    exponents: tuple

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DomainError("word sign must be +1 or -1")
        if not self.exponents:
            raise DomainError("a word needs at least one exponent")
        object.__setattr__(self, "exponents", tuple(self.exponents))

    @property
    def length(self):
        """Number of ``S`` letters."""
        return len(self.exponents) - 1

    def is_normal(self):
        """Interior exponents nonzero, the normal form of a reduced word."""
        return all(n != 0 for n in self.exponents[1:-1])

    def __str__(self):
        parts = []
        for i, n in enumerate(self.exponents):
            if i:
                parts.append("S")
            if n:
                parts.append(f"T^{2 * n}")
        body = " ".join(parts) or "I"
        return body if self.sign == 1 else f"-{body}"


def compose_word(word):
    """The literal matrix product of a :class:`GeneratorWord`."""
    out = T2 ** word.exponents[0]
    for n in word.exponents[1:]:
        out = out @ S @ (T2 ** n)
    return out if word.sign == 1 else -out


def _reduce_even(a, c):
    """Return ``n`` with ``a - 2nc`` in ``(-|c|, |c|]``."""
    m = 2 * abs(c)
    r = (a + abs(c) - 1) % m - abs(c) + 1  # r = a mod 2|c| in (-|c|, |c|]
    n = (a - r) // (2 * c)
    return n


def decompose_theta(A):
    """Write ``A`` in the theta group as a reduced word in ``T^2`` and ``S``.

    Each step picks ``n`` so that ``a - 2nc`` lands in ``(-|c|, |c|]``, peels
    off ``T^(2n) S`` on the left, and continues with ``S^-1 T^(-2n) A``, whose
    lower-left entry is strictly smaller in absolute value.  Since ``a + c`` is
    odd on the theta group the reduction never ties, so every interior
    exponent is nonzero, and the leading one is zero exactly when
    ``|a/c| < 1``.
    """
    if not in_gamma_theta(A):
        raise DomainError(f"matrix {A} is not in the theta group")
    exps = []
    M = A
    while M.c != 0:
        n = _reduce_even(M.a, M.c)
        exps.append(n)
        # M <- S^-1 T^(-2n) M
        a, b = M.a - 2 * n * M.c, M.b - 2 * n * M.d
        M = Mat(M.c, M.d, -a, -b)
    # M = +-T^(2m)
    sgn = M.a
    exps.append(M.b * sgn // 2)
    return GeneratorWord(sgn, tuple(exps))


def random_theta_word(rng, max_letters, max_exponent=1):
    """Random :class:`GeneratorWord` with at most ``max_letters`` letters.

    Letters are ``S`` or ``T^(2n)`` with ``0 < |n| <= max_exponent``.  The
    result need not be reduced.
    """
    exps = [0]
    for _ in range(rng.randint(0, max_letters)):
        if rng.random() < 0.5:
            exps.append(0)
        else:
            n = rng.randint(1, max_exponent) * rng.choice((1, -1))
            exps[-1] += n
    return GeneratorWord(rng.choice((1, -1)), tuple(exps))


def random_theta_matrix(rng, max_letters, max_exponent=1):
    return compose_word(random_theta_word(rng, max_letters, max_exponent))


def random_sl2z_matrix(rng, max_letters):
    """Random product of at most ``max_letters`` letters from ``T``, ``T^-1``, ``S``."""
    Ti = T.inv()
    out = I
    for _ in range(rng.randint(0, max_letters)):
        out = out @ rng.choice((T, Ti, S))
    return out


def default_rng(seed=None):
    return random.Random(seed)
