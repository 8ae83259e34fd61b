"""Byte-deterministic serialization: JSON set/voxel formats and OBJ export.

Set format::

    {"dim": n, "boxes": [{"hi": ["p/q", ...], "lo": ["p/q", ...]}, ...]}

Voxel format::

    {"cells": [flat indices, ascending], "dim": n, "res": m}

Keys are sorted, boxes appear in canonical order, rationals are exact
strings, so serializing the same set always yields the same bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction
from .errors import RationalParseError
from .geometry import AxisBox, CubicalSet, VoxelSet, boundary_faces

__all__ = [
    "rat_to_str",
    "parse_rat",
    "set_to_json",
    "set_from_json",
    "voxel_to_json",
    "voxel_from_json",
    "export_obj",
]


def rat_to_str(q: Fraction) -> str:
    return str(q)


def parse_rat(text, where: str = "") -> Fraction:
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise RationalParseError(repr(text), where)
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise RationalParseError(str(text), where) from None


def set_to_json(x: CubicalSet) -> str:
    obj = {
        "dim": x.dim,
        "boxes": [
            {
                "lo": [rat_to_str(c) for c in b.lo],
                "hi": [rat_to_str(c) for c in b.hi],
            }
            for b in x.boxes
        ],
    }
    return json.dumps(obj, sort_keys=True, separators=(",", ": ")) + "\n"


def set_from_json(text: str) -> CubicalSet:
    obj = json.loads(text)
    dim = obj["dim"]
    boxes = []
    for k, entry in enumerate(obj.get("boxes", [])):
        lo = tuple(
            parse_rat(c, f"boxes[{k}].lo[{i}]") for i, c in enumerate(entry["lo"])
        )
        hi = tuple(
            parse_rat(c, f"boxes[{k}].hi[{i}]") for i, c in enumerate(entry["hi"])
        )
        boxes.append(AxisBox(lo, hi))
    return CubicalSet.from_boxes(dim, boxes)


def voxel_to_json(v: VoxelSet) -> str:
    obj = {"dim": v.dim, "res": v.res, "cells": v.flat_indices()}
    return json.dumps(obj, sort_keys=True, separators=(",", ": ")) + "\n"


def voxel_from_json(text: str) -> VoxelSet:
    obj = json.loads(text)
    return VoxelSet.from_indices(obj["dim"], obj["res"], obj["cells"])


def load_set(path: str) -> CubicalSet:
    """Read either a set file or a voxel file, returning a CubicalSet."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    obj = json.loads(text)
    if "res" in obj:
        return voxel_from_json(text).to_cubical()
    return set_from_json(text)


# -- OBJ mesh export --------------------------------------------------------


def _vertex_str(c: Fraction) -> str:
    return f"{float(c):.9f}"


def export_obj(x: CubicalSet) -> str:
    """Wavefront OBJ of the interior boundary, plus the cube wireframe.

    Each rectangular boundary face is triangulated along its
    lexicographically smaller diagonal.  Only dimension 3 is supported.
    """
    if x.dim != 3:
        raise ValueError("OBJ export requires a 3-dimensional set")
    vertices: dict[tuple, int] = {}
    lines = ["# cubeiso mesh: interior boundary faces + cube wireframe"]

    def vid(p: tuple) -> int:
        if p not in vertices:
            vertices[p] = len(vertices) + 1
        return vertices[p]

    triangles = []
    for axis, s, region in boundary_faces(x):
        for b in region.boxes:
            (u0, v0), (u1, v1) = b.lo, b.hi
            corners2d = [(u0, v0), (u1, v0), (u1, v1), (u0, v1)]
            quad = []
            for u, v in corners2d:
                p = [None, None, None]
                p[axis] = s
                others = [k for k in range(3) if k != axis]
                p[others[0]], p[others[1]] = u, v
                quad.append(tuple(p))
            # cyclic corners; candidate diagonals (0,2) and (1,3)
            d02 = tuple(sorted((quad[0], quad[2])))
            d13 = tuple(sorted((quad[1], quad[3])))
            if d02 <= d13:
                triangles.append((quad[0], quad[1], quad[2]))
                triangles.append((quad[0], quad[2], quad[3]))
            else:
                triangles.append((quad[1], quad[2], quad[3]))
                triangles.append((quad[1], quad[3], quad[0]))

    tri_ids = [tuple(vid(p) for p in t) for t in triangles]
    corners = [
        (Fraction(a), Fraction(b), Fraction(c))
        for a in (0, 1)
        for b in (0, 1)
        for c in (0, 1)
    ]
    corner_ids = [vid(p) for p in corners]
    edges = []
    for i, p in enumerate(corners):
        for j in range(i + 1, 8):
            if sum(a != b for a, b in zip(p, corners[j])) == 1:
                edges.append((corner_ids[i], corner_ids[j]))

    for p in vertices:  # insertion order == id order
        lines.append("v " + " ".join(_vertex_str(c) for c in p))
    for t in tri_ids:
        lines.append(f"f {t[0]} {t[1]} {t[2]}")
    for a, b in edges:
        lines.append(f"l {a} {b}")
    return "\n".join(lines) + "\n"
