"""Machine-checking calB < 1/4 and positivity of the extremal scalar curvature.

calB = N/D at delta = 1.  The certificate shows D - 4N - Q has no negative
coefficient, where Q = 4 * sum v^2 (1 - v^2 + v^4) is manifestly nonnegative.
Run: python3 demos/02_certificates.py
"""
from toric_action import DP2, DP3
from toric_action.certify import verify_B_bound, verify_scalar_positivity

for kind in (DP2, DP3):
    cert = verify_B_bound(kind)
    print(cert.statement)
    print("  verified:", cert.verified)
    print("  residual has", len(cert.residual), "terms, smallest coefficient", cert.residual.min_coefficient())
    print("  leading terms:", " + ".join(f"{c}*{e}" for e, c in cert.residual.sorted_terms()[:3]), "...")

# the checker is not vacuous: demanding calB < 1/5 breaks it
weak = verify_B_bound(DP2, bound_multiplier=5)
print()
print("asking for calB < 1/5 on DP2:", weak.verified)
print("  first negative monomials:", list(weak.details["negative_terms"].items())[:3])

print()
for kind in (DP2, DP3):
    rep = verify_scalar_positivity(kind)
    print(rep.statement, "->", rep.verified, f"({len(rep.vertices)} vertices)")
