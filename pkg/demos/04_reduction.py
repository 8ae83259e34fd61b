"""Reducing an arbitrary set to a special staircase, step by step.

Each motion lands a moving slice plane on another plane or a wall; volume
is conserved to the bit, perimeter never increases, and afterwards every
direction carries at most one interior singular plane.
"""

import numpy as np

from cubeiso import is_special, reduce_to_special, singular_points
from cubeiso.sampling import random_monotone_set

rng = np.random.default_rng(2024)
x = random_monotone_set(rng, 3, 5, max_cells=5**3 // 2)

print("input volume:   ", x.volume())
print("input perimeter:", x.relative_perimeter())
print(
    "interior singular points per direction:",
    [len(singular_points(x, i)) for i in range(3)],
)

special, log = reduce_to_special(x)

print()
print("reduction log:")
for step in log:
    if step.kind == "symmetrize":
        print(f"  symmetrize      d_perimeter={step.d_perimeter}")
    else:
        print(
            f"  {step.kind:9s} axis {step.axis}: {tuple(map(str, step.positions))}"
            f" -> {tuple(map(str, step.new_positions))}"
            f"  volume moved={step.distance}  d_perimeter={step.d_perimeter}"
        )

print()
print("output volume:   ", special.volume(), "(drift:", special.volume() - x.volume(), ")")
print("output perimeter:", special.relative_perimeter())
print(
    "interior singular points per direction:",
    [len(singular_points(special, i)) for i in range(3)],
)
print("special:", is_special(special))
