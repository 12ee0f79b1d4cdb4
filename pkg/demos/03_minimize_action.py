"""Locate the minimum of calA = calT + calB on the two-point blow-up.

The action is symmetric in beta and gamma, so the search runs along the
diagonal with exact bisection, then a 1/100 grid over {calT <= 29/4} checks
that nothing off the diagonal does better.
Run: python3 demos/03_minimize_action.py
"""
from fractions import Fraction

from toric_action import DP2, KahlerParams, calA
from toric_action.optimize import diagonal_Y_interval, minimize_calA_dp2

lo, hi = diagonal_Y_interval()
print(f"diagonal slice of calT <= 29/4: beta in [{float(lo):.6f}, {float(hi):.6f}]")

print("\n  beta     calA(beta, beta)")
for k in range(6, 15):
    u = Fraction(k, 10)
    print(f"  {float(u):4.1f}     {float(calA(DP2, KahlerParams.dp2(u, u))):.10f}")

res = minimize_calA_dp2(Fraction(1, 10 ** 10))
print("\nminimizer beta = gamma ~", float(res.params_star.beta))
print("calA there       ~", float(res.calA_star), "< 29/4:", res.calA_star < Fraction(29, 4))
print("inside Y_29/4:", res.inside_Y, " diagonal critical:", res.diagonal_critical)
print(f"grid: {res.grid.points_inside} points checked, none below the witness: {res.grid.passed}")
