"""Pure-Python brute-force kernels.

Reference implementation of every hot loop.  The compiled module
``_ckernels`` exports the same functions with the same signatures and is
preferred when it imports; see :mod:`hardysums.kernels`.

All functions take and return plain integers.  Preconditions are checked by
the callers in the public modules, not here.
"""

BACKEND = "python"


def dedekind_scaled(d, c):
    """Return ``4*c*c * s(d, c)`` computed term by term, for ``c >= 1``.

    Each sawtooth value ``((m/c))`` is ``(2*(m % c) - c) / (2c)`` off the
    multiples of ``c`` and ``0`` on them, so the scaled sum is integral.
    """
    total = 0
    r = 0
    d %= c
    for k in range(1, c):
        r += d
        if r >= c:
            r -= c
        if r:
            total += (2 * k - c) * (2 * r - c)
    return total


def s4_sum(d, c):
    """``sum_{k=1}^{c-1} (-1)^floor(k*d/c)`` for ``c >= 1``."""
    total = 0
    for k in range(1, c):
        total += -1 if (k * d // c) & 1 else 1
    return total


def s_sum(d, c):
    """``sum_{k=1}^{|c|-1} (-1)^(floor(k*d/c) + k + 1)`` for ``c != 0``."""
    total = 0
    for k in range(1, abs(c)):
        total += -1 if (k * d // c + k + 1) & 1 else 1
    return total


def count_triangle(d, c, step):
    """Points ``(x, y)`` with ``x, y >= 0`` multiples of ``step`` and ``x/d + y/c < 1``."""
    cd = c * d
    n = 0
    for x in range(0, d, step):
        for y in range(0, c, step):
            if x * c + y * d < cd:
                n += 1
    return n


def count_tetra(u, v, w):
    """Points of ``Z^3`` with nonnegative coordinates and ``0 < x/u + y/v + z/w < 1``.

    The innermost ``z`` loop is replaced by counting an integer interval, which
    keeps this an enumeration over ``(x, y)`` without any closed form.
    """
    vw, uw, uv, uvw = v * w, u * w, u * v, u * v * w
    n = 0
    for x in range(u):
        tx = x * vw
        for y in range(v):
            t = tx + y * uw
            if t >= uvw:
                break
            # z >= 0 with 0 < t + z*uv < uvw
            z_hi = (uvw - t - 1) // uv
            n += z_hi + 1 if t > 0 else z_hi
    return n


def scan_crossings(alpha, gamma, bound):
    """Net edges ``a/c < alpha/gamma < b/d`` with ``c*d <= bound``.

    Returns tuples ``(a, c, b, d)`` with ``c, d`` odd positive and
    ``b*c - a*d = 2``.  For each odd ``c`` there is exactly one odd ``a`` with
    ``alpha/gamma - 2/c < a/c < alpha/gamma``; the partner denominators ``d``
    form an arithmetic progression modulo ``2c``.
    """
    out = []
    for c in range(1, bound + 1, 2):
        t = c * alpha
        # largest odd a with a*gamma < t
        a = -((-t) // gamma) - 1
        if not a & 1:
            a -= 1
        e = t - a * gamma
        if e >= 2 * gamma:
            continue
        if c == 1:
            d0 = 1
        else:
            try:
                d0 = (-2 * pow(a, -1, c)) % c
            except ValueError:
                continue
            if not d0 & 1:
                d0 += c
        dmax = bound // c
        d = d0
        while d <= dmax and d * e < 2 * gamma:
            out.append((a, c, (a * d + 2) // c, d))
            d += 2 * c
    return out
