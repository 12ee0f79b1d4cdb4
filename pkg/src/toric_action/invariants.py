"""Class-level invariants of extremal Kahler metrics on the toric surfaces.

Conventions, all in scaled coordinates X = 2*pi*x:

* M_pq are area moments and L_pq lattice-boundary moments of the polygon.
  The measure d(mu) is the Euclidean measure in scaled coordinates, so the
  total mass is V = M_00 = Omega^2 / 2.
* The scalar-curvature measure is 4*pi times lattice length on the boundary:
  int x^p y^q s d(mu) = 4*pi*(2*pi)^-(p+q) * L_pq, pinned by int s = 4*pi*c1.Omega.
* f_1 = L_10*V - L_00*M_10 and similarly f_2, so F_i = 2*f_i / V.
* Abar = M_20*V - M_10^2 (and Bbar, Cbar), so A = Abar / (4*pi^2*V).

The extremal potential is s = s0 + a(x - x0) + b(y - y0) with a, b solving
[[A, C], [C, B]] (a, b) = (F1, F2).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import cohomology
from .errors import DegenerateMoments
from .exact import DELTA, MPoly, PiScalar, RatFn
from .polytope import (
    DP2,
    DP3,
    KahlerParams,
    MomentPolygon,
    SurfaceKind,
    area_moment,
    boundary_moment,
    build_polygon,
    polygon_symbolic,
)

_ORDERS = ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2))


@dataclass(frozen=True)
class Moments:
    """The moments the invariants are assembled from, plus derived combinations."""

    M00: object
    M10: object
    M01: object
    M20: object
    M11: object
    M02: object
    L00: object
    L10: object
    L01: object

    @property
    def V(self):
        return self.M00

    @property
    def f1(self):
        return self.L10 * self.M00 - self.L00 * self.M10

    @property
    def f2(self):
        return self.L01 * self.M00 - self.L00 * self.M01

    @property
    def Abar(self):
        return self.M20 * self.M00 - self.M10 * self.M10

    @property
    def Bbar(self):
        return self.M02 * self.M00 - self.M01 * self.M01

    @property
    def Cbar(self):
        return self.M11 * self.M00 - self.M10 * self.M01


def polygon_moments(P: MomentPolygon) -> Moments:
    area = {pq: area_moment(P, *pq) for pq in _ORDERS}
    return Moments(
        *(area[pq] for pq in _ORDERS),
        boundary_moment(P, 0, 0),
        boundary_moment(P, 1, 0),
        boundary_moment(P, 0, 1),
    )


@lru_cache(maxsize=None)
def symbolic_moments(kind) -> Moments:
    kind = SurfaceKind.parse(kind)
    return Moments(
        *(polygon_symbolic(kind, p, q, "area") for p, q in _ORDERS),
        polygon_symbolic(kind, 0, 0, "boundary"),
        polygon_symbolic(kind, 1, 0, "boundary"),
        polygon_symbolic(kind, 0, 1, "boundary"),
    )


# --------------------------------------------------------------------------
# numeric invariants
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class InvariantSet:
    V: Fraction
    s0: PiScalar
    x0: Fraction
    y0: Fraction
    F1: Fraction
    F2: Fraction
    A: PiScalar
    B: PiScalar
    C: PiScalar
    a: PiScalar
    b: PiScalar


@dataclass(frozen=True)
class AffinePotential:
    """s = s0 + a(x - x0) + b(y - y0); x0, y0 stored in scaled coordinates."""

    s0: PiScalar
    a: PiScalar
    b: PiScalar
    x0: Fraction
    y0: Fraction

    def at_scaled(self, X, Y) -> PiScalar:
        # a carries pi^2 and (X - X0)/(2 pi) carries pi^-1
        lin = (self.a.coeff * (X - self.x0) + self.b.coeff * (Y - self.y0)) / 2
        return PiScalar(self.s0.coeff + lin, 1)


@dataclass(frozen=True)
class FunctionalValue:
    calT: Fraction
    calB: Fraction
    calA: Fraction


def _resolve(kind, params, allow_degenerate=False) -> tuple[SurfaceKind, MomentPolygon]:
    kind = SurfaceKind.parse(kind)
    if not isinstance(params, KahlerParams):
        params = KahlerParams(*params) if len(params) == 4 else (
            KahlerParams.dp2(*params) if kind is DP2 else KahlerParams.dp3(*params)
        )
    return kind, build_polygon(kind, params, allow_degenerate=allow_degenerate)


def scalar_moment(P: MomentPolygon, p: int, q: int) -> PiScalar:
    """int x^p y^q s d(mu) = 4*pi*(2*pi)^-(p+q) * L_pq."""
    return PiScalar(Fraction(4, 2 ** (p + q)) * boundary_moment(P, p, q), 1 - p - q)


def _from_moments(m: Moments) -> InvariantSet:
    V = m.V
    delta = m.Abar * m.Bbar - m.Cbar * m.Cbar
    if delta == 0:
        raise DegenerateMoments("second-moment matrix is singular")
    f1, f2 = m.f1, m.f2
    return InvariantSet(
        V=V,
        s0=PiScalar(4 * m.L00 / V, 1),
        x0=m.M10 / V,
        y0=m.M01 / V,
        F1=2 * f1 / V,
        F2=2 * f2 / V,
        A=PiScalar(m.Abar / (4 * V), -2),
        B=PiScalar(m.Bbar / (4 * V), -2),
        C=PiScalar(m.Cbar / (4 * V), -2),
        a=PiScalar(8 * (m.Bbar * f1 - m.Cbar * f2) / delta, 2),
        b=PiScalar(8 * (m.Abar * f2 - m.Cbar * f1) / delta, 2),
    )


def invariant_set(kind, params, allow_degenerate: bool = False) -> InvariantSet:
    _, P = _resolve(kind, params, allow_degenerate)
    return _from_moments(polygon_moments(P))


def extremal_potential(kind, params, allow_degenerate: bool = False) -> AffinePotential:
    inv = invariant_set(kind, params, allow_degenerate)
    return AffinePotential(inv.s0, inv.a, inv.b, inv.x0, inv.y0)


def calB(kind, params, allow_degenerate: bool = False) -> Fraction:
    """(B F1^2 - 2 C F1 F2 + A F2^2) / (32 pi^2 (AB - C^2)); pi cancels."""
    _, P = _resolve(kind, params, allow_degenerate)
    m = polygon_moments(P)
    delta = m.Abar * m.Bbar - m.Cbar * m.Cbar
    if delta == 0:
        raise DegenerateMoments("second-moment matrix is singular")
    f1, f2 = m.f1, m.f2
    num = m.Bbar * f1 * f1 - 2 * m.Cbar * f1 * f2 + m.Abar * f2 * f2
    return num / (2 * m.V * delta)


def calT(kind, params) -> Fraction:
    kind = SurfaceKind.parse(kind)
    if not isinstance(params, KahlerParams):
        params = KahlerParams.dp2(*params) if kind is DP2 and len(params) < 4 else KahlerParams(*params)
    return cohomology.calT(cohomology.class_from_params(kind, params))


def functional(kind, params, allow_degenerate: bool = False) -> FunctionalValue:
    kind, P = _resolve(kind, params, allow_degenerate)
    t = calT(kind, P.params)
    b = calB(kind, P.params, allow_degenerate)
    return FunctionalValue(t, b, t + b)


def calA(kind, params, allow_degenerate: bool = False) -> Fraction:
    return functional(kind, params, allow_degenerate).calA


def vertex_values(kind, params, allow_degenerate: bool = False) -> list[PiScalar]:
    """Extremal scalar curvature at each polygon vertex, in polygon order."""
    _, P = _resolve(kind, params, allow_degenerate)
    inv = _from_moments(polygon_moments(P))
    pot = AffinePotential(inv.s0, inv.a, inv.b, inv.x0, inv.y0)
    return [pot.at_scaled(X, Y) for X, Y in P.vertices]


def scalar_bounds(kind, params, allow_degenerate: bool = False) -> tuple[PiScalar, PiScalar]:
    """(min, max) of the affine potential; extremes of an affine map sit at vertices."""
    vals = vertex_values(kind, params, allow_degenerate)
    return min(vals, key=lambda v: v.coeff), max(vals, key=lambda v: v.coeff)


def corner_lower_bound(params) -> PiScalar:
    """DP2 only: potential at the bounding-box corner (beta+delta, gamma+delta).

    The corner lies outside the pentagon; since a, b < 0 it is a lower bound
    for s, and it reproduces the closed-form bound printed for the pentagon.
    """
    if not isinstance(params, KahlerParams):
        params = KahlerParams.dp2(*params)
    pot = extremal_potential(DP2, params)
    return pot.at_scaled(params.beta + params.delta, params.gamma + params.delta)


def l2_energy(kind, params) -> PiScalar:
    """int (s - s0)^2 d(mu), integrating the squared affine potential directly."""
    _, P = _resolve(kind, params)
    inv = invariant_set(kind, P.params)
    # (s - s0)/pi = p*X + q*Y + r in scaled coordinates
    p = inv.a.coeff / 2
    q = inv.b.coeff / 2
    r = -(p * inv.x0 + q * inv.y0)
    M = {pq: area_moment(P, *pq) for pq in _ORDERS}
    total = (
        p * p * M[(2, 0)] + 2 * p * q * M[(1, 1)] + q * q * M[(0, 2)]
        + 2 * p * r * M[(1, 0)] + 2 * q * r * M[(0, 1)] + r * r * M[(0, 0)]
    )
    return PiScalar(total, 2)


# --------------------------------------------------------------------------
# symbolic invariants
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class SymbolicInvariantSet:
    """Entries are RatFn in (alpha, beta, gamma, delta); PiScalar carries the grade."""

    V: RatFn
    s0: PiScalar
    x0: RatFn
    y0: RatFn
    F1: RatFn
    F2: RatFn
    A: PiScalar
    B: PiScalar
    C: PiScalar
    a: PiScalar
    b: PiScalar


@dataclass(frozen=True)
class _SymbolicCore:
    moments: Moments
    gram: MPoly          # Abar*Bbar - Cbar^2, divided by V
    energy: MPoly        # Bbar f1^2 - 2 Cbar f1 f2 + Abar f2^2, divided by V*delta^2


@lru_cache(maxsize=None)
def _core(kind) -> _SymbolicCore:
    m = symbolic_moments(kind)
    V = m.V
    gram = (m.Abar * m.Bbar - m.Cbar * m.Cbar).exact_div(V)
    f1, f2 = m.f1, m.f2
    energy = m.Bbar * f1 * f1 - 2 * m.Cbar * f1 * f2 + m.Abar * f2 * f2
    energy = energy.exact_div(V * DELTA * DELTA)
    return _SymbolicCore(m, gram, energy)


@lru_cache(maxsize=None)
def invariant_set_symbolic(kind) -> SymbolicInvariantSet:
    kind = SurfaceKind.parse(kind)
    m = symbolic_moments(kind)
    V = m.V
    full_gram = m.Abar * m.Bbar - m.Cbar * m.Cbar
    return SymbolicInvariantSet(
        V=RatFn(V),
        s0=PiScalar(RatFn(4 * m.L00, V), 1),
        x0=RatFn(m.M10, V),
        y0=RatFn(m.M01, V),
        F1=RatFn(2 * m.f1, V),
        F2=RatFn(2 * m.f2, V),
        A=PiScalar(RatFn(m.Abar, 4 * V), -2),
        B=PiScalar(RatFn(m.Bbar, 4 * V), -2),
        C=PiScalar(RatFn(m.Cbar, 4 * V), -2),
        a=PiScalar(RatFn(8 * (m.Bbar * m.f1 - m.Cbar * m.f2), full_gram), 2),
        b=PiScalar(RatFn(8 * (m.Abar * m.f2 - m.Cbar * m.f1), full_gram), 2),
    )


def _delta_top(p: MPoly) -> Fraction:
    return p.coefficient((0, 0, 0, p.degree()))


@lru_cache(maxsize=None)
def calB_symbolic(kind) -> RatFn:
    """calB as delta^2 * N' / D with D scaled so its pure delta^deg coefficient is 1.

    At delta = 1 that makes the denominator's constant term 1.
    """
    core = _core(kind)
    den = 2 * core.moments.V * core.gram
    c = _delta_top(den)
    if not c:
        raise DegenerateMoments("denominator has no pure delta term")
    return RatFn(DELTA * DELTA * core.energy / c, den / c)


def potential_symbolic_at(kind, X: MPoly, Y: MPoly) -> RatFn:
    """Extremal potential (coefficient of pi) at scaled point (X, Y), polynomial in the params.

    s/pi = 4 L00/V + (a/(2 pi^2)) (X - X0) + (b/(2 pi^2)) (Y - Y0).  Over the
    common denominator V * (V * gram) the numerator carries V^2, which is
    divided out exactly.  The denominator is scaled so its pure delta term is 1.
    """
    core = _core(kind)
    m = core.moments
    V = m.V
    ca = m.Bbar * m.f1 - m.Cbar * m.f2
    cb = m.Abar * m.f2 - m.Cbar * m.f1
    num = 4 * m.L00 * V * core.gram + 4 * (ca * (X * V - m.M10) + cb * (Y * V - m.M01))
    num = num.exact_div(V).exact_div(V)
    den = core.gram
    c = _delta_top(den)
    return RatFn(num / c, den / c)


@lru_cache(maxsize=None)
def vertex_values_symbolic(kind) -> tuple[RatFn, ...]:
    """Potential at each polygon vertex, in polygon order."""
    from .polytope import symbolic_vertices

    kind = SurfaceKind.parse(kind)
    return tuple(potential_symbolic_at(kind, X, Y) for X, Y in symbolic_vertices(kind))


@lru_cache(maxsize=None)
def corner_lower_bound_symbolic() -> RatFn:
    """DP2 potential at the bounding-box corner (beta+delta, gamma+delta)."""
    from .exact import BETA, GAMMA

    return potential_symbolic_at(DP2, BETA + DELTA, GAMMA + DELTA)


def specialize(f: RatFn, delta=1, alpha=None) -> RatFn:
    vals = {"delta": delta}
    if alpha is not None:
        vals["alpha"] = alpha
    return f.subs(vals)


__all__ = [
    "DP2", "DP3", "AffinePotential", "FunctionalValue", "InvariantSet", "Moments",
    "SymbolicInvariantSet", "calA", "calB", "calB_symbolic", "calT", "corner_lower_bound",
    "extremal_potential", "functional", "invariant_set", "invariant_set_symbolic",
    "l2_energy", "polygon_moments", "scalar_bounds", "scalar_moment", "specialize",
    "symbolic_moments", "vertex_values", "vertex_values_symbolic", "potential_symbolic_at",
    "corner_lower_bound_symbolic",
]
