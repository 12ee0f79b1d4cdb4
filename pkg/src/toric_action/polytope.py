"""Delzant moment polygons of the toric two- and three-point blow-ups of CP^2.

Everything lives in scaled coordinates (x~, y~) = 2*pi*(x, y), where every
vertex is linear in the parameters (alpha, beta, gamma, delta).  The same
moment code runs on Fraction vertices and on MPoly vertices, so the numeric
and symbolic paths share one implementation.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import ConeViolation, DegeneratePolygon, Unsupported
from .exact import ALPHA, BETA, DELTA, GAMMA, MPoly, as_rat


class SurfaceKind(enum.Enum):
    DP2 = "dp2"
    DP3 = "dp3"

    @classmethod
    def parse(cls, value) -> "SurfaceKind":
        if isinstance(value, SurfaceKind):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown surface {value!r}; expected dp2 or dp3") from None

    @property
    def n_blowups(self) -> int:
        return 2 if self is SurfaceKind.DP2 else 3


DP2 = SurfaceKind.DP2
DP3 = SurfaceKind.DP3


@dataclass(frozen=True)
class KahlerParams:
    """Areas (alpha, beta, gamma, delta) cutting out the moment polygon.

    For DP2 alpha is always 0.  The source normalizes delta = 1.
    """

    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction = Fraction(1)

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta"):
            object.__setattr__(self, name, as_rat(getattr(self, name)))

    @classmethod
    def dp2(cls, beta, gamma, delta=1) -> "KahlerParams":
        return cls(Fraction(0), beta, gamma, delta)

    @classmethod
    def dp3(cls, alpha, beta, gamma, delta=1) -> "KahlerParams":
        return cls(alpha, beta, gamma, delta)

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.alpha, self.beta, self.gamma, self.delta)

    def scaled(self, c) -> "KahlerParams":
        c = as_rat(c)
        return KahlerParams(*(c * v for v in self.as_tuple()))

    def swap_beta_gamma(self) -> "KahlerParams":
        return KahlerParams(self.alpha, self.gamma, self.beta, self.delta)


def curve_areas(kind, params) -> list:
    """Edge lattice lengths in counterclockwise order starting on the x~-axis.

    Works for Fraction params and for MPoly params alike.
    """
    kind = SurfaceKind.parse(kind)
    a, b, g, d = params
    if kind is DP2:
        return [b + d, g, d, b, g + d]
    return [b + d, g, a + d, b, g + d, a]


_NORMALS = {
    DP2: [(0, -1), (1, 0), (1, 1), (0, 1), (-1, 0)],
    DP3: [(0, -1), (1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1)],
}


def _vertices(kind, params):
    a, b, g, d = params
    if kind is DP2:
        zero = b * 0
        return [(zero, zero), (b + d, zero), (b + d, g), (b, g + d), (zero, g + d)]
    zero = a * 0
    return [(a, zero), (a + b + d, zero), (a + b + d, g), (b, a + g + d), (zero, a + g + d), (zero, a)]


@dataclass(frozen=True)
class Edge:
    normal: tuple[int, int]
    length: Fraction


@dataclass(frozen=True)
class MomentPolygon:
    kind: SurfaceKind
    params: KahlerParams
    vertices: tuple[tuple[Fraction, Fraction], ...]
    edges: tuple[Edge, ...]

    def dump(self) -> str:
        """Vertex list then edge table, exact fractions, one item per line."""
        lines = [f"# {self.kind.value} polygon, scaled coordinates"]
        lines += [f"{x} {y}" for x, y in self.vertices]
        lines.append("# edges: normal lattice_length")
        lines += [f"({e.normal[0]},{e.normal[1]}) {e.length}" for e in self.edges]
        return "\n".join(lines)


def build_polygon(kind, params: KahlerParams, allow_degenerate: bool = False) -> MomentPolygon:
    """Moment polygon for ``params``.

    Every curve area must be positive.  With ``allow_degenerate`` zero-length
    edges are permitted and dropped (their vertices coincide).
    """
    kind = SurfaceKind.parse(kind)
    if kind is DP2 and params.alpha != 0:
        raise ConeViolation("DP2 parameters must have alpha = 0")
    lengths = curve_areas(kind, params.as_tuple())
    bad = [L for L in lengths if L < 0 or (L == 0 and not allow_degenerate)]
    if bad:
        raise ConeViolation(f"curve areas {lengths} are not all positive")
    verts = _vertices(kind, params.as_tuple())
    keep_v, keep_e = [], []
    for v, n, L in zip(verts, _NORMALS[kind], lengths):
        if L == 0:
            continue
        keep_v.append(v)
        keep_e.append(Edge(n, L))
    if len(keep_v) < 3:
        raise DegeneratePolygon("fewer than three edges survive")
    if signed_area(keep_v) <= 0:
        raise DegeneratePolygon("polygon has non-positive area")
    return MomentPolygon(kind, params, tuple(keep_v), tuple(keep_e))


def signed_area(vertices) -> Fraction:
    n = len(vertices)
    twice = sum(
        vertices[i][0] * vertices[(i + 1) % n][1] - vertices[(i + 1) % n][0] * vertices[i][1]
        for i in range(n)
    )
    return twice / 2


# --------------------------------------------------------------------------
# moment integrals; generic in the coordinate ring (Fraction or MPoly)
# --------------------------------------------------------------------------

def _linear_power(c0, c1, c2, p):
    """Expand (c0 + c1*t + c2*u)**p as {(i, j): coeff} in t**i u**j."""
    out = {}
    for i in range(p + 1):
        for j in range(p + 1 - i):
            k = p - i - j
            m = factorial(p) // (factorial(i) * factorial(j) * factorial(k))
            out[(i, j)] = (c0 ** k) * (c1 ** i) * (c2 ** j) * m
    return out


def _simplex_integral(i: int, j: int) -> Fraction:
    # integral of t^i u^j over {t, u >= 0, t + u <= 1}
    return Fraction(factorial(i) * factorial(j), factorial(i + j + 2))


def _area_moment(vertices, p: int, q: int):
    x0, y0 = vertices[0]
    total = 0
    for k in range(1, len(vertices) - 1):
        x1, y1 = vertices[k]
        x2, y2 = vertices[k + 1]
        ax, bx = x1 - x0, x2 - x0
        ay, by = y1 - y0, y2 - y0
        jac = ax * by - bx * ay
        xs = _linear_power(x0, ax, bx, p)
        ys = _linear_power(y0, ay, by, q)
        tri = 0
        for (i1, j1), cx in xs.items():
            for (i2, j2), cy in ys.items():
                tri = tri + cx * cy * _simplex_integral(i1 + i2, j1 + j2)
        total = total + jac * tri
    return total


def _edge_moment(v1, v2, p: int, q: int):
    # integral over t in [0,1] of x(t)^p y(t)^q along the segment v1 -> v2
    (x1, y1), (x2, y2) = v1, v2
    xs = _linear_power(x1, x2 - x1, x1 * 0, p)
    ys = _linear_power(y1, y2 - y1, y1 * 0, q)
    total = 0
    for (i1, j1), cx in xs.items():
        if j1:
            continue
        for (i2, j2), cy in ys.items():
            if j2:
                continue
            total = total + cx * cy * Fraction(1, i1 + i2 + 1)
    return total


def _boundary_moment(vertices, lengths, p: int, q: int):
    n = len(vertices)
    total = 0
    for k in range(n):
        total = total + lengths[k] * _edge_moment(vertices[k], vertices[(k + 1) % n], p, q)
    return total


def area_moment(P: MomentPolygon, p: int, q: int) -> Fraction:
    """Exact integral of x~^p y~^q over the polygon."""
    if p < 0 or q < 0:
        raise ValueError("moment orders must be nonnegative")
    return Fraction(_area_moment(list(P.vertices), p, q))


def boundary_moment(P: MomentPolygon, p: int, q: int) -> Fraction:
    """Exact integral of x~^p y~^q over the boundary against lattice length."""
    if p < 0 or q < 0:
        raise ValueError("moment orders must be nonnegative")
    return Fraction(_boundary_moment(list(P.vertices), [e.length for e in P.edges], p, q))


def lattice_perimeter(P: MomentPolygon) -> Fraction:
    return sum((e.length for e in P.edges), Fraction(0))


SYMBOLIC_PARAMS = (ALPHA, BETA, GAMMA, DELTA)
MAX_SYMBOLIC_ORDER = 4


@lru_cache(maxsize=None)
def polygon_symbolic(kind, p: int, q: int, which: str = "area") -> MPoly:
    """Moment as a polynomial in (alpha, beta, gamma, delta)."""
    kind = SurfaceKind.parse(kind)
    if p < 0 or q < 0:
        raise ValueError("moment orders must be nonnegative")
    if p + q > MAX_SYMBOLIC_ORDER:
        raise Unsupported(f"symbolic moments are capped at p + q <= {MAX_SYMBOLIC_ORDER}")
    params = (MPoly(),) + SYMBOLIC_PARAMS[1:] if kind is DP2 else SYMBOLIC_PARAMS
    verts = _vertices(kind, params)
    if which == "area":
        return _area_moment(verts, p, q)
    if which == "boundary":
        return _boundary_moment(verts, curve_areas(kind, params), p, q)
    raise ValueError(f"which must be 'area' or 'boundary', not {which!r}")


def symbolic_vertices(kind) -> list[tuple[MPoly, MPoly]]:
    kind = SurfaceKind.parse(kind)
    params = (MPoly(),) + SYMBOLIC_PARAMS[1:] if kind is DP2 else SYMBOLIC_PARAMS
    return _vertices(kind, params)


def delzant_determinants(P: MomentPolygon) -> list[int]:
    """det of consecutive primitive edge directions at every vertex."""
    dirs = [(-n[1], n[0]) for n in (e.normal for e in P.edges)]
    k = len(dirs)
    return [dirs[i - 1][0] * dirs[i][1] - dirs[i - 1][1] * dirs[i][0] for i in range(k)]
