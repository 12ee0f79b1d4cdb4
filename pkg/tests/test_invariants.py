import itertools
import random
from fractions import Fraction

import pytest

import oracles as O
from toric_action.cohomology import c1, calT as class_calT, class_from_params
from toric_action.errors import ConeViolation, NonPositiveSquare
from toric_action.exact import MPoly, PiScalar, RatFn
from toric_action.invariants import (
    calA,
    calB,
    calB_symbolic,
    calT,
    extremal_potential,
    functional,
    invariant_set,
    invariant_set_symbolic,
    l2_energy,
    scalar_bounds,
    scalar_moment,
    specialize,
    vertex_values,
)
from toric_action.polytope import DP2, DP3, KahlerParams, area_moment, build_polygon, lattice_perimeter

ONE = KahlerParams.dp2(1, 1)


def _rand(kind, rng):
    v = [Fraction(rng.randint(1, 50), rng.randint(1, 11)) for _ in range(4)]
    return KahlerParams.dp2(*v[1:]) if kind is DP2 else KahlerParams(*v)


def test_scalar_moment_examples():
    P = build_polygon(DP2, ONE)
    assert scalar_moment(P, 0, 0) == PiScalar(Fraction(28), 1)
    Q = build_polygon(DP2, KahlerParams.dp2(Fraction(2, 3), Fraction(2, 3)))
    assert scalar_moment(Q, 1, 0) == scalar_moment(Q, 0, 1)
    rng = random.Random(3)
    for kind in (DP2, DP3):
        R = build_polygon(kind, _rand(kind, rng))
        assert scalar_moment(R, 0, 0) == PiScalar(4 * lattice_perimeter(R), 1)


def test_invariant_set_examples():
    inv = invariant_set(DP2, ONE)
    assert inv.F1 == inv.F2 == Fraction(-2, 3)
    assert inv.s0 == PiScalar(Fraction(8), 1)
    assert inv.V == Fraction(7, 2)
    for t in (Fraction(1, 3), Fraction(5), Fraction(22, 7)):
        sym = invariant_set(DP3, KahlerParams.dp3(t, t, t))
        assert sym.F1 == sym.F2 == 0


def test_ab_minus_c_squared_positive():
    rng = random.Random(5)
    for kind in (DP2, DP3):
        for _ in range(20):
            inv = invariant_set(kind, _rand(kind, rng))
            assert inv.V > 0
            assert (inv.A * inv.B - inv.C * inv.C).coeff > 0


@pytest.mark.parametrize("kind", [DP2, DP3])
def test_potential_matches_l2_projection_oracle(kind):
    rng = random.Random(17)
    for _ in range(8):
        p = _rand(kind, rng)
        P = build_polygon(kind, p)
        c0, cx, cy = O.extremal_affine(P.vertices)
        inv = invariant_set(kind, p)
        # s/pi = c0 + cx X + cy Y in scaled coordinates
        assert inv.a == PiScalar(2 * cx, 2)
        assert inv.b == PiScalar(2 * cy, 2)
        assert inv.s0 == PiScalar(c0 + cx * inv.x0 + cy * inv.y0, 1)
        assert 32 * calB(kind, p) == O.energy(P.vertices)


def test_symbolic_entries_swap_and_specialize():
    s = invariant_set_symbolic(DP2)
    assert s.F1.swap("beta", "gamma") == s.F2
    assert specialize(s.F1).eval((0, 1, 1, 1)) == Fraction(-2, 3)
    a = specialize(s.a.coeff)
    b = specialize(s.b.coeff)
    assert a.swap("beta", "gamma") == b


def test_calB_examples():
    assert calB(DP2, ONE) == Fraction(1736, 12679)
    assert calB(DP3, KahlerParams.dp3(1, 1, 1, 1)) == 0
    rng = random.Random(9)
    for _ in range(20):
        a, b, g = (Fraction(rng.randint(1, 30), rng.randint(1, 7)) for _ in range(3))
        assert calB(DP3, KahlerParams.dp3(a, b, g, 0), allow_degenerate=True) == 0


def test_calB_symbolic_structure():
    for kind in (DP2, DP3):
        f = calB_symbolic(kind)
        assert f.num.is_homogeneous() and f.den.is_homogeneous()
        assert f.num.degree() == f.den.degree()
        assert f.num.divides_monomial((0, 0, 0, 2))
    assert calB_symbolic(DP2).eval((0, 1, 1, 1)) == Fraction(1736, 12679)


def test_calT_examples():
    assert class_calT(c1(DP2)) == 7
    assert class_calT(c1(DP3)) == 6
    assert calA(DP2, ONE) == Fraction(90489, 12679)
    assert calA(DP2, ONE) < Fraction(29, 4)
    fv = functional(DP2, ONE)
    assert fv.calA == fv.calT + fv.calB and fv.calA >= fv.calT
    with pytest.raises(NonPositiveSquare):
        class_calT(c1(DP2) - c1(DP2))


def test_extremal_potential_examples():
    pot = extremal_potential(DP2, ONE)
    assert pot.a == pot.b and pot.a.coeff < 0
    z = extremal_potential(DP3, KahlerParams.dp3(1, 1, 1, 1))
    assert z.a.is_zero() and z.b.is_zero()


@pytest.mark.parametrize("kind", [DP2, DP3])
def test_potential_has_mean_s0(kind):
    rng = random.Random(21)
    for _ in range(10):
        p = _rand(kind, rng)
        P = build_polygon(kind, p)
        pot = extremal_potential(kind, p)
        # int (s - s0) dA is linear in the first moments
        lin = pot.a.coeff * (area_moment(P, 1, 0) - pot.x0 * area_moment(P, 0, 0)) \
            + pot.b.coeff * (area_moment(P, 0, 1) - pot.y0 * area_moment(P, 0, 0))
        assert lin == 0


def test_scalar_bounds_examples():
    s = scalar_bounds(DP3, KahlerParams.dp3(1, 1, 1, 1))
    # lattice perimeter of that hexagon is 9 and its area 13/2
    assert s[0] == s[1] == PiScalar(Fraction(4 * 9) / Fraction(13, 2), 1) == PiScalar(Fraction(72, 13), 1)
    vals = vertex_values(DP2, ONE)
    assert max(vals, key=lambda v: v.coeff) == vals[0]
    for kind in (DP2, DP3):
        p = _rand(kind, random.Random(1))
        lo, hi = scalar_bounds(kind, p)
        lo2, hi2 = scalar_bounds(kind, p.scaled(Fraction(3, 2)))
        assert lo2 == lo * PiScalar(Fraction(2, 3)) and hi2 == hi * PiScalar(Fraction(2, 3))


@pytest.mark.parametrize("kind", [DP2, DP3])
def test_scale_invariance(kind):
    rng = random.Random(33)
    for _ in range(15):
        p = _rand(kind, rng)
        c = Fraction(rng.randint(1, 20), rng.randint(1, 20))
        assert calB(kind, p.scaled(c)) == calB(kind, p)
        assert calT(kind, p.scaled(c)) == calT(kind, p)


def test_dp3_specializes_to_dp2():
    rng = random.Random(41)
    for _ in range(15):
        p2 = _rand(DP2, rng)
        p3 = KahlerParams(Fraction(0), p2.beta, p2.gamma, p2.delta)
        i2, i3 = invariant_set(DP2, p2), invariant_set(DP3, p3, allow_degenerate=True)
        assert i2 == i3
        assert calB(DP2, p2) == calB(DP3, p3, allow_degenerate=True)
    s2, s3 = invariant_set_symbolic(DP2), invariant_set_symbolic(DP3)
    for name in ("V", "F1", "F2"):
        f3 = getattr(s3, name)
        assert f3.subs({"alpha": 0}) == getattr(s2, name)
    assert calB_symbolic(DP3).subs({"alpha": 0}) == calB_symbolic(DP2)


def test_permuting_dp3_parameters_permutes_vertex_values():
    rng = random.Random(43)
    for _ in range(5):
        a, b, g = (Fraction(rng.randint(1, 30), rng.randint(1, 7)) for _ in range(3))
        base = sorted(v.coeff for v in vertex_values(DP3, KahlerParams.dp3(a, b, g)))
        for perm in itertools.permutations((a, b, g)):
            assert sorted(v.coeff for v in vertex_values(DP3, KahlerParams.dp3(*perm))) == base


def test_l2_energy_identity():
    rng = random.Random(47)
    for kind in (DP2, DP3):
        for _ in range(10):
            p = _rand(kind, rng)
            assert l2_energy(kind, p) == PiScalar(32 * calB(kind, p), 2)


def test_cone_violation():
    with pytest.raises(ConeViolation):
        invariant_set(DP2, KahlerParams.dp2(0, 1))
    with pytest.raises(ConeViolation):
        calB(DP3, KahlerParams.dp3(1, 1, 1, -1))
