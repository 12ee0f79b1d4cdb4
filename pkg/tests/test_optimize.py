from fractions import Fraction

import pytest

from toric_action.cohomology import T_sublevel_test, calT as class_calT
from toric_action.errors import DenominatorVanishes, SameSign, ToleranceTooSmall
from toric_action.exact import MPoly, RatFn
from toric_action.invariants import calA, calB, calT
from toric_action.optimize import (
    MAX_BISECTION_STEPS,
    SweepRange,
    Y_LEVEL,
    calA_symbolic_dp2,
    diagonal_Y_interval,
    diagonal_class,
    evaluate_quantities,
    frange,
    grid_sweep,
    is_symmetric_dp2,
    minimize_calA_dp2,
    path_rows,
    sign_bisection,
)
from toric_action.polytope import DP2, DP3, KahlerParams
from toric_action.cohomology import c1


@pytest.fixture(scope="module")
def result():
    return minimize_calA_dp2(Fraction(1, 10 ** 8))


def test_bisection_examples():
    b = MPoly.var("beta")
    lo, hi = sign_bisection(RatFn(b - 2), 1, 3, Fraction(1, 2 ** 20))
    assert lo <= 2 <= hi and hi - lo <= Fraction(1, 2 ** 20)
    with pytest.raises(SameSign):
        sign_bisection(RatFn(MPoly.const(1), b + 1), 0, 1, Fraction(1, 100))
    with pytest.raises(DenominatorVanishes):
        sign_bisection(RatFn(b - Fraction(1, 3), b - Fraction(1, 2)), 0, 1, Fraction(1, 100))
    with pytest.raises(ToleranceTooSmall):
        sign_bisection(RatFn(3 * b - 1), 0, 1, Fraction(1, 2 ** 40), max_steps=10)
    assert MAX_BISECTION_STEPS == 256
    # an exact root on the grid is returned as a degenerate bracket
    assert sign_bisection(RatFn(b - Fraction(1, 2)), 0, 1, Fraction(1, 10)) == (Fraction(1, 2), Fraction(1, 2))


def test_symmetry_and_action_formula():
    assert is_symmetric_dp2()
    A = calA_symbolic_dp2()
    for b, g in ((Fraction(1), Fraction(1)), (Fraction(2, 3), Fraction(5, 2)), (Fraction(7), Fraction(1, 9))):
        assert A.eval((0, b, g, 1)) == calA(DP2, KahlerParams.dp2(b, g))


def test_diagonal_interval_inside_Y():
    lo, hi = diagonal_Y_interval()
    assert lo < 1 < hi
    assert T_sublevel_test(diagonal_class(lo), Y_LEVEL)
    assert T_sublevel_test(diagonal_class(hi), Y_LEVEL)
    # just outside the interval the class leaves Y
    assert not T_sublevel_test(diagonal_class(lo - Fraction(1, 1000)), Y_LEVEL)
    assert not T_sublevel_test(diagonal_class(hi + Fraction(1, 100)), Y_LEVEL)


def test_minimizer(result):
    r = result
    assert r.calA_star < Fraction(29, 4)
    assert r.certified_below == Fraction(29, 4)
    assert r.inside_Y and -r.eta_square < Fraction(7, 29)
    assert r.symmetric and r.diagonal_critical
    assert r.bracket[1] - r.bracket[0] <= Fraction(1, 10 ** 8)
    p = r.params_star
    assert p.beta == p.gamma and p.delta == 1
    assert r.calA_star == calT(DP2, p) + calB(DP2, p)
    assert r.calA_star >= calT(DP2, p) and calB(DP2, p) < Fraction(1, 4)
    assert r.calA_star <= Fraction(90489, 12679)
    assert r.gradient_norm < 1e-6


def test_grid_finds_nothing_smaller(result):
    g = result.grid
    assert g.passed and g.step == Fraction(1, 100)
    assert g.points_inside > 1000
    assert g.min_float >= float(result.calA_star)
    # the sweep's only local minimum sits next to the diagonal witness
    assert len(g.local_minima) == 1
    b, gam, _ = g.local_minima[0]
    assert b == gam and abs(b - result.params_star.beta) <= Fraction(1, 100)


def test_refinement_is_monotone():
    coarse = minimize_calA_dp2(Fraction(1, 10 ** 6), run_grid=False)
    fine = minimize_calA_dp2(Fraction(1, 10 ** 7), run_grid=False)
    lo, hi = coarse.bracket
    ends = [calA(DP2, KahlerParams.dp2(x, x)) for x in (lo, hi)]
    osc = max(ends) - min(ends + [coarse.calA_star, fine.calA_star])
    assert abs(fine.calA_star - coarse.calA_star) <= osc
    assert fine.bracket[0] >= lo and fine.bracket[1] <= hi


def test_record_is_exact():
    r = minimize_calA_dp2(Fraction(1, 1000), run_grid=False).to_record()
    assert Fraction(r["calA"]) < Fraction(r["certified_below"])
    assert abs(float(Fraction(r["calA"])) - r["calA_float"]) < 1e-15
    with pytest.raises(ValueError):
        minimize_calA_dp2(0)


def test_sweep_examples():
    rows = grid_sweep(DP2, [SweepRange(("beta", "gamma"), Fraction(1, 5), Fraction(3), Fraction(1, 5))], ["calB"])
    assert len(rows) == 15
    assert all(r["status"] == "ok" and r["values"]["calB"] < Fraction(1, 4) for r in rows)
    sym = grid_sweep(DP3, [SweepRange(("alpha", "beta", "gamma"), Fraction(1, 2), Fraction(3), Fraction(1, 2))],
                     ["calB", "F1", "F2"])
    assert all(r["values"]["calB"] == 0 and r["values"]["F1"] == 0 for r in sym)
    assert grid_sweep(DP2, [SweepRange(("beta",), Fraction(2), Fraction(1), Fraction(1, 5))], ["calB"]) == []
    flagged = grid_sweep(DP2, [SweepRange(("beta",), Fraction(-1), Fraction(1), Fraction(1))], ["calA"])
    assert [r["status"] for r in flagged] == ["cone_violation", "cone_violation", "ok"]
    with pytest.raises(ValueError):
        grid_sweep(DP2, [SweepRange(("alpha",), 0, 1, 1)], ["calB"])


def test_sweep_is_deterministic_and_ordered():
    ranges = [SweepRange(("beta",), Fraction(1), Fraction(2), Fraction(1, 2)),
              SweepRange(("gamma",), Fraction(1), Fraction(2), Fraction(1, 2))]
    a = grid_sweep(DP2, ranges, ["calA"])
    b = grid_sweep(DP2, ranges, ["calA"])
    assert [r["params"] for r in a] == [r["params"] for r in b]
    assert [(r["params"].beta, r["params"].gamma) for r in a][:3] == [(1, 1), (1, Fraction(3, 2)), (1, 2)]


def test_frange_and_quantities():
    assert frange(0, 1, Fraction(1, 3)) == [0, Fraction(1, 3), Fraction(2, 3), 1]
    with pytest.raises(ValueError):
        frange(0, 1, 0)
    vals = evaluate_quantities(DP2, KahlerParams.dp2(1, 1), ["calA", "smin", "smax"])
    assert vals["calA"] == Fraction(90489, 12679)
    assert vals["smin"].coeff > 0 and vals["smax"].coeff > vals["smin"].coeff
    with pytest.raises(ValueError):
        evaluate_quantities(DP2, KahlerParams.dp2(1, 1), ["nope"])


def test_path_rows():
    rows = path_rows(c1(DP2), 10)
    assert len(rows) == 11
    assert [r["E1_area"] for r in rows] == [1 - Fraction(i, 10) for i in range(11)]
    assert rows[0]["calT"] == 6 and rows[-1]["calT"] == 7
    assert all(r["calT"] <= 7 for r in rows)
    assert rows[0]["calB"] == 0
    assert rows[-1]["calB"] == Fraction(1736, 12679)
    with pytest.raises(ValueError):
        path_rows(c1(DP2), 0)
