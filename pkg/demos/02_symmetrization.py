"""Steiner symmetrization: columns slide to the wall, perimeter never grows."""

from fractions import Fraction as F

import numpy as np

from cubeiso import CubicalSet, devoxelize, is_symmetrized, steiner, symmetrize_all
from cubeiso.sampling import random_voxel

HALF = F(1, 2)

print("== two opposite quarter-squares become a slab ==")
checker = CubicalSet.from_coords(
    2, [((0, HALF), (HALF, 1)), ((HALF, 0), (1, HALF))]
)
sym = symmetrize_all(checker)
print("before: volume", checker.volume(), " perimeter", checker.relative_perimeter())
print("after:  volume", sym.volume(), " perimeter", sym.relative_perimeter())
print("fixed point of all axes:", is_symmetrized(sym))

print()
print("== disjoint column pieces concatenate ==")
pieces = CubicalSet.from_coords(
    2, [((0, 0), (F(1, 4), 1)), ((HALF, 0), (F(3, 4), 1))]
)
print("one pass along axis 0 gives:", steiner(pieces, 0).boxes[0].hi)

print()
print("== random voxel sets: volume exact, perimeter monotone ==")
rng = np.random.default_rng(1)
for trial in range(5):
    v = random_voxel(rng, 3, 5)
    x = devoxelize(v)
    y = symmetrize_all(x)
    print(
        f"trial {trial}: cells={v.count():3d}  perimeter "
        f"{x.relative_perimeter()} -> {y.relative_perimeter()}"
        f"   (volume drift: {y.volume() - x.volume()})"
    )

print()
print("== a symmetrized set is a monotone staircase ==")
v = random_voxel(rng, 2, 6)
y = symmetrize_all(devoxelize(v))
from cubeiso import voxelize

print(voxelize(y, 6).cells.astype(int))
