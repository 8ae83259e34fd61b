"""Write OBJ meshes of the interior boundary for external rendering.

Each boundary rectangle away from the cube walls becomes two triangles;
the cube wireframe is included as line elements for context.
"""

import pathlib
import sys
from fractions import Fraction as F

from cubeiso import realize
from cubeiso.formats import export_obj

out_dir = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else pathlib.Path(".")

shapes = {
    "cube": realize("box", (F(1, 2),) * 3),
    "tube": realize("tube", (F(1, 2), F(1, 2))),
    "slab": realize("slab", (F(1, 4),)),
    "tripod": realize("tripod", (F(3, 10),) * 3),
    "tri_slab": realize("tri_slab", (F(1, 5),) * 3),
}

for name, x in shapes.items():
    text = export_obj(x)
    path = out_dir / f"{name}.obj"
    path.write_text(text)
    n_tris = sum(1 for l in text.splitlines() if l.startswith("f "))
    print(f"{path}: {n_tris} triangles, perimeter {x.relative_perimeter()}")
