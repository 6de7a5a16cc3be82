"""Push circles and disks through the maps of the 5-power modular tower.

Run:  python demos/02_map_images.py
"""

from fractions import Fraction as F

from stablelab import modmaps

maps = modmaps.builtin_maps()
print("The six classical maps between X0(25), X0(5) and X(1):")
for name, rmap in maps.items():
    print(f"  {name:6s}: {rmap.source_coord} -> {rmap.target_coord}, "
          f"degrees {rmap.degrees()}")
print()

print("A circle maps to a circle exactly when one monomial dominates alone:")
cert = modmaps.image_valuation(maps["pi5_t"], modmaps.ValRegion("u", "circle", F(3, 10)))
print(f"  v(u) = 3/10  ->  v(t) = {cert.lower_bound}  ({cert.conclusion})")
cert = modmaps.image_valuation(maps["pi1_j"], modmaps.ValRegion("t", "circle", F(3, 2)))
print(f"  v(t) = 3/2   ->  v(j) = {cert.lower_bound}  ({cert.conclusion})")
cert = modmaps.image_valuation(maps["pi1_j"], modmaps.ValRegion("t", "circle", F(5, 2)))
print(f"  v(t) = 5/2   ->  v(j) >= {cert.lower_bound}  ({cert.conclusion})")
print("The tie in the last line is how a circle image fattens into a disk.\n")

print("Atkin-Lehner fixed circles (lambda with v(c) - lambda = lambda):")
print("  w5 = 125/t :", modmaps.al_fixed_circle(maps["w5"]))
print("  w25 = 5/u  :", modmaps.al_fixed_circle(maps["w25"]))
print("both are involutions:", modmaps.is_involution(maps["w5"]),
      modmaps.is_involution(maps["w25"]), "\n")

print("Where do the ten ramification points land on X0(5)?  Eliminating the")
print("double-root parametrization x = 5/u^2, y = 10/u through pi5:")
ric = modmaps.ramification_image_polynomial()
print("  eliminant degree:", len(ric.eliminant) - 1)
print("  squarefree part:", ric.squarefree_part, " i.e. t^2 = 125\n")

print("The four CM residue disks merge into one congruence:")
disks = modmaps.cm_disk_identities()
print("  v5(5^5/r^5 - 5^3) =", disks.u_disk_valuation, "> 3")
print("  (j^2 - 125)(j^2 + 125) = j^4 - 5^6:", disks.factorization_ok)
