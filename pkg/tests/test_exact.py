from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from oracles import mpoly_to_sympy, al, be, ga, de
from toric_action.errors import GradeMismatch
from toric_action.exact import (
    MPoly,
    PiScalar,
    RatFn,
    as_rat,
    homogenize,
    min_coefficient,
    mpoly_arith,
    ratfn_eq,
)

rats = st.fractions(min_value=-50, max_value=50, max_denominator=12)
exps = st.tuples(*(st.integers(0, 3) for _ in range(4)))
polys = st.dictionaries(exps, rats, max_size=6).map(MPoly)
points = st.tuples(*(rats for _ in range(4)))


def test_as_rat_refuses_floats_and_bools():
    assert as_rat("3/7") == Fraction(3, 7)
    assert as_rat(5) == 5
    with pytest.raises(TypeError):
        as_rat(0.1)
    with pytest.raises(TypeError):
        as_rat(True)


def test_parse_and_render_round_trip():
    p = MPoly.parse("2*beta**2*gamma - 3*delta + 1/2")
    assert p.coefficient((0, 2, 1, 0)) == 2
    assert p.constant_term() == Fraction(1, 2)
    assert MPoly.parse(str(p)) == p
    assert MPoly.parse("b*g") == MPoly.parse("β*γ")


def test_parse_rejects_division_by_a_variable():
    with pytest.raises(ValueError):
        MPoly.parse("1/beta")


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert p * (q + r) == p * q + p * r
    assert p - p == MPoly()


@given(polys, polys)
def test_multiplication_matches_sympy(p, q):
    assert mpoly_to_sympy(p * q) == sp.expand(mpoly_to_sympy(p) * mpoly_to_sympy(q))


@given(polys, points)
def test_evaluation_is_a_homomorphism(p, pt):
    q = p * p + 3 * p
    assert q.eval(pt) == p.eval(pt) ** 2 + 3 * p.eval(pt)


@given(polys)
def test_partial_matches_sympy(p):
    for name, sym in (("alpha", al), ("beta", be), ("gamma", ga), ("delta", de)):
        assert mpoly_to_sympy(p.partial(name)) == sp.diff(mpoly_to_sympy(p), sym)


@given(polys, polys)
def test_exact_div_inverts_multiplication(p, q):
    if q.is_zero():
        return
    assert (p * q).exact_div(q) == p


def test_exact_div_rejects_inexact():
    with pytest.raises(ValueError):
        MPoly.parse("beta**2 + 1").exact_div(MPoly.parse("beta"))


@given(polys)
def test_record_round_trip_is_bit_exact(p):
    rec = p.to_record(pi_power=2)
    assert rec["pi_power"] == 2
    assert MPoly.from_record(rec) == p


def test_homogenize_and_min_coefficient():
    p = MPoly.parse("beta**2 - 3*gamma + 1")
    h = homogenize(p, "delta", 3)
    assert h.is_homogeneous() and h.degree() == 3
    assert h.subs({"delta": 1}) == p
    assert min_coefficient(p) == -3
    with pytest.raises(ValueError):
        homogenize(p, "delta", 1)


def test_mpoly_arith_dispatch():
    p, q = MPoly.parse("beta"), MPoly.parse("gamma")
    assert mpoly_arith("add", p, q) == p + q
    assert mpoly_arith("mul", p, q) == p * q
    with pytest.raises(ValueError):
        mpoly_arith("mod", p, q)


@given(polys, polys, polys)
def test_ratfn_equality_is_cross_multiplication(n, d, c):
    if d.is_zero() or c.is_zero():
        return
    assert ratfn_eq(RatFn(n, d), RatFn(n * c, d * c))
    assert RatFn(n, d) == RatFn(-n, -d)


def test_ratfn_denominator_sign_normalized():
    f = RatFn(MPoly.parse("beta"), MPoly.parse("-gamma - 1"))
    assert f.den.leading_term()[1] > 0
    assert f.eval((0, 2, 1, 0)) == Fraction(-1)


def test_ratfn_arithmetic_and_partial():
    b = RatFn(MPoly.var("beta"))
    f = 1 / (1 + b)
    assert f.partial("beta") == -1 / ((1 + b) * (1 + b))
    assert (f + f) * (1 + b) == RatFn(MPoly.const(2))
    with pytest.raises(ZeroDivisionError):
        f.eval((0, -1, 0, 0))


def test_pi_scalar_grading():
    x = PiScalar(Fraction(3), 1)
    y = PiScalar(Fraction(1, 2), 1)
    assert x + y == PiScalar(Fraction(7, 2), 1)
    assert (x * PiScalar(Fraction(2), -2)).pi_power == -1
    assert PiScalar(Fraction(0), 3) == PiScalar(Fraction(0), -1)
    with pytest.raises(GradeMismatch):
        x + PiScalar(Fraction(1), 2)
    with pytest.raises(GradeMismatch):
        x < PiScalar(Fraction(1), 0)
    assert y < x
    assert abs(float(x) - 3 * 3.141592653589793) < 1e-12
