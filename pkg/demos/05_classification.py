"""The seven special families and the cube/tube/slab classification.

Special sets sort into boxes, tubes, slabs, and four L-faced families; the
L-faced ones always admit an explicit equal-volume competitor with strictly
smaller relative perimeter, certified in exact rationals.
"""

from fractions import Fraction as F

from cubeiso import (
    V1,
    V2,
    classify,
    competitor,
    profile,
    realize,
    special_family,
)

print("== the profile and its two threshold volumes ==")
print(f"V1 = {V1} = (2/3)^6   V2 = {V2}")
for v in (F(1, 20), V1, F(1, 8), V2, F(2, 5), F(1, 2)):
    e = profile(v)
    val = e.value if not hasattr(e.value, "lo") else f"~{float(e.value):.6f}"
    print(f"  V={str(v):7s} minimizers: {'+'.join(sorted(e.kinds)):10s} value {val}")

print()
print("== family detection round-trips through a witness isometry ==")
for tag, params in (
    ("tri_slab", (F(1, 5), F(1, 5), F(1, 6))),
    ("l_prism", (F(1, 4), F(1, 3), F(3, 5))),
    ("slab_leg", (F(1, 4), F(1, 3), F(1, 2))),
    ("tripod", (F(3, 10), F(3, 10), F(3, 10))),
):
    fam = special_family(realize(tag, params))
    print(f"  {tag:9s} -> {fam.tag} with parameters {tuple(map(str, fam.params))}")

print()
print("== every L-faced family member is beaten, exactly ==")
a = F(3, 10)
cert = competitor("tripod", (a, a, a))
print(
    f"tripod a={a}: perimeter {cert.original.relative_perimeter()}"
    f" -> {cert.competitor.relative_perimeter()}"
    f"  (delta {cert.d_perimeter} = -a(1-a), volume delta {cert.d_volume})"
)
cert = competitor("tri_slab", (F(1, 5), F(1, 5), F(1, 5)))
print(f"three thin wall slabs -> one slab: delta {cert.d_perimeter}")

print()
print("== verdicts ==")
for name, x in (
    ("cube of volume 1/27", realize("box", (F(1, 3),) * 3)),
    ("tube at the V1 tie", realize("tube", (F(8, 27), F(8, 27)))),
    ("slab of volume 1/2", realize("slab", (F(1, 2),))),
    ("slab of volume 2/3", realize("slab", (F(2, 3),))),
    ("stationary cube above V1", realize("box", (F(1, 2),) * 3)),
    ("tripod", realize("tripod", (F(3, 10),) * 3)),
):
    res = classify(x)
    extra = f" [{'; '.join(res.notes)}]" if res.notes else ""
    print(f"  {name:26s}: {res.verdict}{extra}")
