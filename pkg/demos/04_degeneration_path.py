"""Sliding from c1 of DP3 to the pullback of c1 of DP2.

Along (1-t) c1 + t p^*Omega the area of E_1 shrinks linearly to zero while
calT stays below its endpoint value 7.
Run: python3 demos/04_degeneration_path.py
"""
from toric_action import DP2
from toric_action.cohomology import c1
from toric_action.optimize import path_rows

print(f"{'t':>5} {'area(E1)':>9} {'calT':>9} {'calB':>10} {'s_min/pi':>10} {'s_max/pi':>10}")
for r in path_rows(c1(DP2), 10):
    print(f"{float(r['t']):5.2f} {float(r['E1_area']):9.3f} {float(r['calT']):9.5f} "
          f"{float(r['calB']):10.6f} {float(r['smin'].coeff):10.5f} {float(r['smax'].coeff):10.5f}")
