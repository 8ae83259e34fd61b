"""Singular slices and the exact volume-for-perimeter exchange rate.

Translating a slice by d changes volume by exactly area*d and relative
perimeter by exactly P*d, where P weighs the slice boundary +1 where walls
grow, -1 where they shrink, 0 on the cube walls.
"""

from fractions import Fraction as F

from cubeiso import (
    check_stationarity,
    event_horizon,
    realize,
    slice_data,
    translate_slice,
)

a, b, c = F(1, 3), F(1, 4), F(1, 5)
boxset = realize("box", (a, b, c))

print("== the three face slices of a box ==")
for axis, pos in ((0, a), (1, b), (2, c)):
    d = slice_data(boxset, axis, pos)
    print(
        f"axis {axis} at {pos}: area={d.area}  +1 part={d.outer_measure}  "
        f"0 part={d.cube_measure}  -1 part={d.inner_measure}  "
        f"first variation={d.first_var}"
    )

print()
print("== exact linear exchange within the event horizon ==")
d = slice_data(boxset, 2, c)
hz = event_horizon(boxset, 2, c, +1)
step = hz.distance / 3
moved = translate_slice(boxset, 2, c, step)
print(f"horizon: {hz.kind} at distance {hz.distance}; moving by {step}")
print("volume delta:   ", moved.volume() - boxset.volume(), "= area*d =", d.area * step)
print(
    "perimeter delta:",
    moved.relative_perimeter() - boxset.relative_perimeter(),
    "= P*d =",
    d.signed_measure * step,
)

print()
print("== a minimizer candidate must equalize all first variations ==")
for tag, params in (
    ("box", (F(2, 5), F(2, 5), F(2, 5))),
    ("tube", (F(1, 3), F(1, 4))),
    ("slab_leg", (F(1, 4), F(1, 3), F(1, 2))),
):
    rep = check_stationarity(realize(tag, params))
    vals = ", ".join(str(v) for v in rep.values())
    print(f"{tag:9s} first variations {{{vals}}} -> stationary: {rep.stationary}")
