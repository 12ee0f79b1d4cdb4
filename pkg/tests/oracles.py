"""Independent reference computations used only by the tests.

Nothing here calls the package's moment code: polygon integrals come from
sympy (either its polytope integrator or direct iterated integration over a
hand-decomposed region) and lattice lengths are read off edge vectors.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

import sympy as sp
from sympy.integrals.intpoly import polytope_integrate

X, Y = sp.symbols("x y")
al, be, ga, de = sp.symbols("alpha beta gamma delta", positive=True)


def to_sympy(q: Fraction) -> sp.Rational:
    return sp.Rational(q.numerator, q.denominator)


def to_fraction(r) -> Fraction:
    r = sp.sympify(r)
    if not r.is_Rational:
        raise TypeError(f"oracle produced a non-rational value {r}")
    return Fraction(int(r.p), int(r.q))


def hexagon(a, b, g, d):
    """DP3 moment hexagon in scaled coordinates, built from the half-plane description."""
    return [(a, 0), (a + b + d, 0), (a + b + d, g), (b, a + g + d), (0, a + g + d), (0, a)]


def pentagon(b, g, d):
    return [(0, 0), (b + d, 0), (b + d, g), (b, g + d), (0, g + d)]


def lattice_length(p, q) -> Fraction:
    """t with q - p = t*u, u a primitive integer vector."""
    dx, dy = Fraction(q[0]) - Fraction(p[0]), Fraction(q[1]) - Fraction(p[1])
    den = dx.denominator * dy.denominator
    ix, iy = int(dx * den), int(dy * den)
    g = gcd(abs(ix), abs(iy))
    return Fraction(g, den)


def area_integral(vertices, expr) -> Fraction:
    pts = [sp.Point(to_sympy(Fraction(x)), to_sympy(Fraction(y))) for x, y in vertices]
    # drop repeated vertices of degenerate polygons
    clean = [p for i, p in enumerate(pts) if p != pts[i - 1]]
    # sympy's integrator wants clockwise order
    return to_fraction(polytope_integrate(sp.Polygon(*reversed(clean)), expr))


def boundary_integral(vertices, expr) -> Fraction:
    """Sum over edges of lattice length times the mean of expr along the edge."""
    t = sp.Symbol("t")
    total = sp.Integer(0)
    n = len(vertices)
    for k in range(n):
        p, q = vertices[k], vertices[(k + 1) % n]
        L = lattice_length(p, q)
        if L == 0:
            continue
        px, py = to_sympy(Fraction(p[0])), to_sympy(Fraction(p[1]))
        qx, qy = to_sympy(Fraction(q[0])), to_sympy(Fraction(q[1]))
        f = expr.subs({X: px + t * (qx - px), Y: py + t * (qy - py)}, simultaneous=True)
        total += to_sympy(L) * sp.integrate(sp.expand(f), (t, 0, 1))
    return to_fraction(total)


def extremal_affine(vertices):
    """(c0, c1, c2) with c0 + c1 x + c2 y the L2 projection of 4 x boundary measure.

    Solves int_P (c0 + c1 x + c2 y) f dA = 4 int_dP f dsigma for f in {1, x, y}.
    """
    basis = [sp.Integer(1), X, Y]
    M = sp.Matrix(3, 3, lambda i, j: to_sympy(area_integral(vertices, basis[i] * basis[j])))
    rhs = sp.Matrix([4 * to_sympy(boundary_integral(vertices, f)) for f in basis])
    c = M.LUsolve(rhs)
    return tuple(to_fraction(v) for v in c)


def energy(vertices) -> Fraction:
    """int_P (lin - mean)^2 dA with lin the extremal affine function."""
    c0, c1, c2 = (to_sympy(v) for v in extremal_affine(vertices))
    V = to_sympy(area_integral(vertices, sp.Integer(1)))
    mean = 4 * to_sympy(boundary_integral(vertices, sp.Integer(1))) / V
    return area_integral(vertices, sp.expand((c0 + c1 * X + c2 * Y - mean) ** 2))


# ---------------------------------------------------------------------------
# symbolic moments by iterated integration over a decomposed region
# ---------------------------------------------------------------------------

def _rect(f, w, h):
    return sp.integrate(sp.integrate(f, (Y, 0, h)), (X, 0, w))


def _corner_triangle(f, cx, cy, leg):
    """Triangle with right angle at (cx, cy), legs pointing in -x and -y."""
    return sp.integrate(sp.integrate(f, (Y, cy - leg + (cx - X), cy)), (X, cx - leg, cx))


def _origin_triangle(f, leg):
    return sp.integrate(sp.integrate(f, (Y, 0, leg - X)), (X, 0, leg))


@lru_cache(maxsize=None)
def symbolic_area_moment(kind: str, p: int, q: int) -> sp.Expr:
    f = X ** p * Y ** q
    if kind == "dp2":
        return sp.expand(_rect(f, be + de, ga + de) - _corner_triangle(f, be + de, ga + de, de))
    W, H = al + be + de, al + ga + de
    return sp.expand(_rect(f, W, H) - _origin_triangle(f, al) - _corner_triangle(f, W, H, al + de))


@lru_cache(maxsize=None)
def symbolic_boundary_moment(kind: str, p: int, q: int) -> sp.Expr:
    t = sp.Symbol("t")
    f = X ** p * Y ** q
    if kind == "dp2":
        verts = pentagon(be, ga, de)
        lengths = [be + de, ga, de, be, ga + de]
    else:
        verts = hexagon(al, be, ga, de)
        lengths = [be + de, ga, al + de, be, ga + de, al]
    total = 0
    n = len(verts)
    for k in range(n):
        (px, py), (qx, qy) = verts[k], verts[(k + 1) % n]
        g = f.subs({X: px + t * (qx - px), Y: py + t * (qy - py)}, simultaneous=True)
        total += lengths[k] * sp.integrate(sp.expand(g), (t, 0, 1))
    return sp.expand(total)


def mpoly_to_sympy(p) -> sp.Expr:
    syms = (al, be, ga, de)
    out = sp.Integer(0)
    for e, c in p.items():
        term = to_sympy(Fraction(c))
        for s, k in zip(syms, e):
            term *= s ** k
        out += term
    return sp.expand(out)
