"""A walk through the invariants of the anticanonical class on both surfaces.

Run: python3 demos/01_invariants_tour.py
"""
from fractions import Fraction

from toric_action import DP2, DP3, KahlerParams, build_polygon, calB, calT, invariant_set, scalar_bounds
from toric_action.cohomology import c1, params_from_class

# c1 of the two-point blow-up is (3; 1,1), i.e. beta = gamma = delta = 1
p2 = params_from_class(c1(DP2))
P = build_polygon(DP2, p2)
print(P.dump())
print()

inv = invariant_set(DP2, p2)
print("volume V        ", inv.V)
print("average s0      ", inv.s0)              # carries one power of pi
print("Futaki F1, F2   ", inv.F1, inv.F2)      # equal, by the beta <-> gamma symmetry
print("a, b            ", inv.a, inv.b)        # both negative
print("calT            ", calT(DP2, p2))
print("calB            ", calB(DP2, p2), "~", float(calB(DP2, p2)))
lo, hi = scalar_bounds(DP2, p2)
print("s ranges over   ", lo, "to", hi)
print()

# on the three-point blow-up c1 = (3; 1,1,1) sits at delta = 0, which is
# still an interior point of the cone; the hexagon is regular and calB vanishes
p3 = params_from_class(c1(DP3))
print("DP3 c1 params   ", p3.as_tuple())
print("DP3 calB(c1)    ", calB(DP3, p3))

# a lopsided class: Futaki invariant no longer zero
q = KahlerParams.dp3(Fraction(1, 3), 2, Fraction(5, 4))
print("DP3 lopsided    ", calB(DP3, q), "~", float(calB(DP3, q)))
