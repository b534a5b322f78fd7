"""The oriented geodesic net of the theta group and signed intersection numbers.

Net vertices are the reduced fractions ``a/c`` with ``a`` and ``c`` odd; two of
them, ``a/c`` and ``b/d``, are joined when ``ad - bc = +-2``.  Each edge runs
from the endpoint with the smaller denominator to the one with the larger
denominator; edges between two integers carry both orientations.

Boundary points are :class:`fractions.Fraction` or :data:`hardysums.exact.INF`.
"""

from dataclasses import dataclass
from fractions import Fraction
import json
from math import ceil

from hardysums import kernels
from hardysums.exact import INF, DomainError, render
from hardysums.modgroup import Mat, in_gamma_theta, moebius

DIRECTED = "directed"
DOUBLY = "doubly-oriented"


def _key(x):
    # position on R u {oo}, with oo after every real
    return (1, 0) if x is INF else (0, x)


@dataclass(frozen=True)
class OrientedGeodesic:
    start: object
    end: object
    orientation: str = DIRECTED

    def __post_init__(self):
        if _key(self.start) == _key(self.end):
            raise DomainError("a geodesic needs two distinct endpoints")
        if self.orientation not in (DIRECTED, DOUBLY):
            raise DomainError(f"unknown orientation {self.orientation!r}")


def h_x(x):
    """The vertical geodesic from ``i*oo`` down to ``x``."""
    return OrientedGeodesic(INF, Fraction(x))


@dataclass(frozen=True)
class NetEdge:
    """Net edge between ``p < q``; see the module docstring for orientation."""

    p: Fraction
    q: Fraction

    @property
    def doubly(self):
        return self.p.denominator == self.q.denominator

    @property
    def orientation(self):
        return DOUBLY if self.doubly else DIRECTED

    @property
    def start(self):
        return self.p if self.p.denominator <= self.q.denominator else self.q

    @property
    def end(self):
        return self.q if self.start == self.p else self.p

    def geodesic(self):
        return OrientedGeodesic(self.start, self.end, self.orientation)

    def radius(self):
        return (self.q - self.p) / 2

    def to_json(self):
        return [render(self.p), render(self.q)]


def _odd_odd(x):
    return x.numerator % 2 == 1 and x.denominator % 2 == 1


def net_membership(p, q):
    """The :class:`NetEdge` joining ``p`` and ``q``, or ``None`` if there is none."""
    p, q = Fraction(p), Fraction(q)
    if p == q:
        raise DomainError("net membership needs two distinct endpoints")
    if p > q:
        p, q = q, p
    if not (_odd_odd(p) and _odd_odd(q)):
        return None
    a, c, b, d = p.numerator, p.denominator, q.numerator, q.denominator
    if abs(a * d - b * c) != 2:
        return None
    return NetEdge(p, q)


def _between(x, lo, hi):
    return _key(lo) < _key(x) < _key(hi)


def _ccw(points):
    # points in cyclic increasing order on R u {oo}: exactly one descent
    keys = [_key(x) for x in points]
    n = len(keys)
    return sum(keys[i] > keys[(i + 1) % n] for i in range(n)) == 1


def phi_intersect(g, h):
    """Signed intersection of ``g`` with ``h``: 0, +1 or -1.

    Zero when the endpoints do not interleave or ``g`` carries both
    orientations.  Otherwise +1 exactly when ``(h.start, g.end, h.end,
    g.start)`` is in increasing cyclic order on ``R u {oo}``, i.e. ``g``
    crosses ``h`` from its right.
    """
    ends = [_key(g.start), _key(g.end), _key(h.start), _key(h.end)]
    if len(set(ends)) < 4:
        raise DomainError("phi is undefined for geodesics sharing an endpoint")
    lo, hi = sorted((g.start, g.end), key=_key)
    if _between(h.start, lo, hi) == _between(h.end, lo, hi):
        return 0
    if g.orientation == DOUBLY:
        return 0
    return 1 if _ccw((h.start, g.end, h.end, g.start)) else -1


def in_q_theta(x):
    x = Fraction(x)
    return (x.numerator + x.denominator) % 2 == 1


def _check_q_theta(x):
    if x is INF:
        raise DomainError("oo has no finite crossing bound")
    x = Fraction(x)
    if not in_q_theta(x):
        raise DomainError(f"{x} is not a cusp of the theta group (numerator + denominator must be odd)")
    return x


def cusp_matrix(x):
    """``A`` in the theta group with ``A.oo = x``, ``c > 0`` and ``-c < d < c``."""
    x = _check_q_theta(x)
    alpha, gamma = x.numerator, x.denominator
    d0 = pow(alpha, -1, gamma) if gamma > 1 else 0
    for delta in (d0, d0 - gamma):
        if -gamma < delta < gamma:
            beta, rem = divmod(alpha * delta - 1, gamma)
            if rem == 0:
                A = Mat(alpha, beta, gamma, delta)
                if in_gamma_theta(A):
                    return A
    raise AssertionError(f"no cusp matrix for {x}")  # unreachable for x in Q_theta


def cusp_triangle(x):
    """Vertices of ``A.Delta`` for the ideal triangle ``Delta = (-1, 1, oo)``."""
    A = cusp_matrix(x)
    return (moebius(A, Fraction(-1)), moebius(A, Fraction(1)), moebius(A, INF))


def crossing_bound(x):
    """``ceil(1 / r_x)`` with ``r_x`` the largest side radius of the cusp triangle at ``x``.

    Every net edge ``a/c -- b/d`` crossed by ``h_x`` has ``c*d`` at most this bound.
    """
    v = cusp_triangle(x)
    r = max(abs(v[i] - v[j]) for i, j in ((0, 1), (0, 2), (1, 2))) / 2
    return ceil(1 / r)


def enumerate_crossings(x, bound=None):
    """All net edges ``p < x < q``, sorted by denominator product then ``p``."""
    x = _check_q_theta(x)
    if bound is None:
        bound = crossing_bound(x)
    raw = kernels.scan_crossings(x.numerator, x.denominator, bound)
    edges = [NetEdge(Fraction(a, c), Fraction(b, d)) for a, c, b, d in raw]
    edges.sort(key=lambda e: (e.p.denominator * e.q.denominator, e.p))
    return edges


def intersection_number(x, bound=None):
    """Signed count of net edges crossed by ``h_x`` (0 at ``x = oo``)."""
    if x is INF:
        return 0
    x = _check_q_theta(x)
    h = h_x(x)
    return sum(phi_intersect(e.geodesic(), h) for e in enumerate_crossings(x, bound))


def crossings_jsonl(x, bound=None):
    """One JSON object per crossed edge: ``{"edge": ["a/c", "b/d"], "phi": s}``."""
    x = _check_q_theta(x)
    h = h_x(x)
    return [
        json.dumps({"edge": e.to_json(), "phi": phi_intersect(e.geodesic(), h)})
        for e in enumerate_crossings(x, bound)
    ]


def _t1(x):
    return -x


def _t2(x):
    return x + 2


def _t3(x):
    if x == 0:
        raise DomainError("inversion is undefined at 0")
    return 1 / x


SYMMETRIES = {"reflect": _t1, "translate2": _t2, "invert": _t3}


@dataclass(frozen=True)
class SymmetryImage:
    """Image of a net edge under a boundary map.

    ``geodesic`` carries the orientation transported from the source edge;
    ``edge`` is the net edge on the image endpoints (``None`` if they are not
    joined in the net); ``preserved`` says whether the transported orientation
    is the one the net assigns.
    """

    geodesic: OrientedGeodesic
    edge: NetEdge
    preserved: bool

    @property
    def exceptional(self):
        return not self.preserved


def net_symmetry_check(edge, name):
    """Apply ``reflect`` (``-x``), ``translate2`` (``x + 2``) or ``invert`` (``1/x``) to ``edge``."""
    try:
        t = SYMMETRIES[name]
    except KeyError:
        raise DomainError(f"unknown map {name!r}; expected one of {sorted(SYMMETRIES)}") from None
    g = edge.geodesic()
    image = OrientedGeodesic(t(g.start), t(g.end), g.orientation)
    target = net_membership(image.start, image.end)
    if target is None:
        return SymmetryImage(image, None, False)
    if target.doubly or image.orientation == DOUBLY:
        ok = target.doubly and image.orientation == DOUBLY
    else:
        ok = target.start == image.start
    return SymmetryImage(image, target, ok)
