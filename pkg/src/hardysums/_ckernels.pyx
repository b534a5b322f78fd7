# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled brute-force kernels.

Same contract as ``_pykernels``.  Arithmetic is done in ``long long``; every
entry point checks that its inputs stay inside the range where no
intermediate can overflow and otherwise defers to the Python version.
"""

from hardysums import _pykernels

BACKEND = "cython"

# largest c with c**3 < 2**63, so the scaled Dedekind sum fits
DEDEKIND_MAX_C = 2000000
SMALL = 1 << 30


cdef inline long long _floordiv(long long a, long long b):
    # b > 0
    cdef long long q = a / b
    if (a % b != 0) and (a < 0):
        q -= 1
    return q


cdef long long _modinv(long long a, long long m):
    # inverse of a modulo m (m >= 2); returns -1 if gcd(a, m) != 1
    cdef long long g = m, x = 0, x1 = 1, q, t
    a %= m
    if a < 0:
        a += m
    cdef long long r = a
    while r != 0:
        q = g / r
        t = g - q * r
        g = r
        r = t
        t = x - q * x1
        x = x1
        x1 = t
    if g != 1:
        return -1
    x %= m
    if x < 0:
        x += m
    return x


def dedekind_scaled(d, c):
    if c > DEDEKIND_MAX_C:
        return _pykernels.dedekind_scaled(d, c)
    cdef long long cc = c
    cdef long long dd = d % c
    cdef long long r = 0, k, total = 0
    for k in range(1, cc):
        r += dd
        if r >= cc:
            r -= cc
        if r:
            total += (2 * k - cc) * (2 * r - cc)
    return total


def s4_sum(d, c):
    if c > SMALL:
        return _pykernels.s4_sum(d, c)
    # floor(k*d/c) mod 2 only depends on d mod 2c
    cdef long long cc = c
    cdef long long dd = d % (2 * c)
    cdef long long k, q = 0, r = 0, total = 0
    for k in range(1, cc):
        r += dd
        while r >= cc:
            r -= cc
            q += 1
        total += -1 if (q & 1) else 1
    return total


def s_sum(d, c):
    if abs(c) > SMALL:
        return _pykernels.s_sum(d, c)
    if c < 0:
        d, c = -d, -c
    cdef long long cc = c
    cdef long long dd = d % (2 * c)
    cdef long long k, q = 0, r = 0, total = 0
    for k in range(1, cc):
        r += dd
        while r >= cc:
            r -= cc
            q += 1
        total += -1 if ((q + k + 1) & 1) else 1
    return total


def count_triangle(d, c, step):
    if d > SMALL or c > SMALL:
        return _pykernels.count_triangle(d, c, step)
    cdef long long dd = d, cc = c, st = step, cd = c * d
    cdef long long x, y, n = 0
    for x in range(0, dd, st):
        for y in range(0, cc, st):
            if x * cc + y * dd < cd:
                n += 1
    return n


def count_tetra(u, v, w):
    if u * v * w > (1 << 40):
        return _pykernels.count_tetra(u, v, w)
    cdef long long uu = u, vv = v, ww = w
    cdef long long vw = vv * ww, uw = uu * ww, uv = uu * vv, uvw = uu * vv * ww
    cdef long long x, y, z, t, s, n = 0
    for x in range(uu):
        for y in range(vv):
            t = x * vw + y * uw
            if t >= uvw:
                break
            for z in range(ww):
                s = t + z * uv
                if s >= uvw:
                    break
                if s > 0:
                    n += 1
    return n


def scan_crossings(alpha, gamma, bound):
    if abs(alpha) > SMALL or gamma > SMALL or bound > SMALL:
        return _pykernels.scan_crossings(alpha, gamma, bound)
    cdef long long al = alpha, ga = gamma, bd = bound
    cdef long long c, t, a, e, d0, d, dmax, inv
    out = []
    for c in range(1, bd + 1, 2):
        t = c * al
        a = -_floordiv(-t, ga) - 1
        if not (a & 1):
            a -= 1
        e = t - a * ga
        if e >= 2 * ga:
            continue
        if c == 1:
            d0 = 1
        else:
            inv = _modinv(a, c)
            if inv < 0:
                continue
            d0 = (c - (2 * inv) % c) % c
            if not (d0 & 1):
                d0 += c
        dmax = bd / c
        d = d0
        while d <= dmax and d * e < 2 * ga:
            out.append((a, c, (a * d + 2) / c, d))
            d += 2 * c
    return out
