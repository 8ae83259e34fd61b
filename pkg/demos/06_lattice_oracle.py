"""The independent brute-force check at grid scale.

Monotone voxel sets are exactly the symmetrization fixed points, so the
discrete minimum over them equals the minimum over all voxel sets; both are
computed and compared, and every discrete minimum sits above the continuous
profile, with the representable cube/tube/slab shapes attaining it.
"""

from fractions import Fraction as F

from cubeiso import brute_min, brute_min_general, profile, strip_brute_min
from cubeiso.classify import strip_profile2d
from cubeiso.search import box_count, count_monotone

print("== enumeration sizes vs the box-counting product formula ==")
for m in (2, 3, 4):
    print(f"  plane partitions in the {m}^3 box: {count_monotone(3, m):7d}"
          f"  (formula: {box_count(m, m, m)})")

print()
print("== restricted and unrestricted minima agree ==")
for m in (3, 4):
    rows = []
    for k in range(0, m * m // 2 + 1):
        a = brute_min(2, m, k).min_perimeter
        b = brute_min_general(2, m, k).min_perimeter
        rows.append(a == b)
    print(f"  2D m={m}: {sum(rows)}/{len(rows)} cell counts agree")

print()
print("== discrete minima vs the continuous profile (3D, m=4) ==")
m = 4
print("   k   V        discrete   profile kinds")
for k in (1, 4, 8, 16, 27, 32):
    r = brute_min(3, m, k)
    e = profile(F(k, m**3))
    print(
        f"  {k:2d}   {str(F(k, m**3)):7s}  {str(r.min_perimeter):8s} "
        f" {'+'.join(sorted(e.kinds))}  ({len(r.minimizers)} minimizer orbit(s))"
    )

print()
print("== the confined-strip sub-problem ==")
m = 6
for a_cells, k in ((3, 4), (3, 9), (2, 12), (4, 8)):
    a, v = F(a_cells, m), F(k, m * m)
    value, kinds = strip_profile2d(a, v)
    got = strip_brute_min(m, a_cells, k)
    val = value if not hasattr(value, "lo") else f"~{float(value):.6f}"
    print(
        f"  width {a}, volume {v}: discrete {got}, continuous {val}"
        f" ({'+'.join(sorted(kinds))})"
    )
