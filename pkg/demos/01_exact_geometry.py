"""Tour of the exact geometry kernel: box unions, measures, sections.

Everything is a Fraction; no float ever enters a geometric predicate.
"""

from fractions import Fraction as F

from cubeiso import CubicalSet, CubeIsometry, equal_up_to_isometry, voxelize
from cubeiso.formats import set_to_json

HALF = F(1, 2)

print("== an L-shaped union of two overlapping boxes ==")
lshape = CubicalSet.from_coords(2, [((0, 0), (HALF, 1)), ((0, 0), (1, HALF))])
print("canonical boxes:")
for b in lshape.boxes:
    print("   ", [f"[{lo},{hi}]" for lo, hi in zip(b.lo, b.hi)])
print("volume:", lshape.volume(), "   relative perimeter:", lshape.relative_perimeter())

print()
print("== the three minimizer shapes at volume 1/8 ==")
a3 = F(1, 2)  # cube side for volume 1/8
cube = CubicalSet.from_coords(3, [((0, 0, 0), (a3, a3, a3))])
tube = CubicalSet.from_coords(3, [((0, 0, 0), (F(1, 4), HALF, 1))])
slab = CubicalSet.from_coords(3, [((0, 0, 0), (F(1, 8), 1, 1))])
for name, x in (("cube", cube), ("tube(1/4 x 1/2)", tube), ("slab", slab)):
    print(f"{name:16s} volume={x.volume()}  rel.perimeter={x.relative_perimeter()}")

print()
print("== one-sided cross-sections see the jump at a face ==")
below = cube.cross_section(2, a3, "below")
above = cube.cross_section(2, a3, "above")
print("below the top face:", below.volume(), "   above:", above.volume())
print("boundary slice area at the face:", cube.boundary_slice(2, a3).volume())

print()
print("== the 48 cube isometries preserve both measures ==")
g = CubeIsometry((2, 0, 1), (True, False, False))
img = tube.apply(g)
print("image volume:", img.volume(), "  image perimeter:", img.relative_perimeter())
witness = equal_up_to_isometry(tube, img)
print("witness isometry found:", witness is not None)

print()
print("== voxel grids round-trip exactly ==")
v = voxelize(cube, 4)
print("occupied cells:", v.count(), "  voxel perimeter:", v.relative_perimeter())

print()
print("== byte-deterministic JSON ==")
print(set_to_json(lshape), end="")
