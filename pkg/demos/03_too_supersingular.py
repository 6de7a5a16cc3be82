"""The too-supersingular disk of X(1) at p = 5, from the 5-division polynomial.

Run:  python demos/03_too_supersingular.py
"""

from fractions import Fraction as F

from stablelab import sslab

print("Family: y^2 = x^3 + t*x + 1 over the supersingular disk v5(t) > 0.")
psi5 = sslab.division_polynomial_5()
print("5-division polynomial: degree", psi5.degree("x"),
      "in x, leading coefficient", psi5.coefficient("x", 12))
print("x^10 coefficient:", psi5.coefficient("x", 10), "\n")

polygon = sslab.torsion_polygon()
print("Parametric Newton polygon in lambda = v5(t) on (0, 1):")
print("  hull vertex sets:", polygon.vertex_sets())
print("  breakpoint:", polygon.breakpoints, "\n")

for lam in (F(1, 2), F(9, 10)):
    profile = sslab.torsion_profile(lam)
    print(f"lambda = {lam}:")
    print("  x-root valuations:", profile.x_root_valuations)
    print("  z = x/y valuations over the 24 points:", profile.z_valuations)
    print("  canonical subgroup:", profile.canonical_subgroup)
print()

print("Below 5/6 four points sit strictly closer to the origin (the canonical")
print("subgroup); at 5/6 and beyond all 24 are equidistant and none exists.")
threshold = sslab.too_ss_threshold()
print("j(t) =", threshold.j_numerator, "/", threshold.j_denominator)
print("v5(j) = 3*v5(t), so the no-canonical-subgroup disk of X(1) is")
print("v5(j) >=", threshold.threshold)
