"""Exact geometry kernel: canonical form, measures, sections, isometries."""

from fractions import Fraction as F

import numpy as np
import pytest

from cubeiso.errors import AlignmentError, DimensionMismatchError, DomainError, UnitCubeError
from cubeiso.geometry import (
    CubeIsometry,
    CubicalSet,
    VoxelSet,
    all_isometries,
    boundary_faces,
    box,
    devoxelize,
    equal_up_to_isometry,
    voxelize,
)

HALF = F(1, 2)


def cs(dim, pairs):
    return CubicalSet.from_coords(dim, pairs)


class TestNormalize:
    def test_l_shape_two_boxes(self):
        x = cs(2, [((0, 0), (HALF, 1)), ((0, 0), (1, HALF))])
        assert len(x.boxes) == 2
        assert x.volume() == F(3, 4)
        # point-set equality with the input union
        for p in [(F(1, 4), F(3, 4)), (F(3, 4), F(1, 4)), (F(1, 4), F(1, 4))]:
            assert x.contains(p)
        assert not x.contains((F(3, 4), F(3, 4)))

    def test_already_canonical(self):
        x = cs(3, [((0, 0, 0), (HALF, HALF, HALF))])
        assert x.boxes == (box((0, 0, 0), (HALF, HALF, HALF)),)

    def test_overlap_resolution(self):
        x = cs(2, [((0, 0), (F(3, 4), HALF)), ((F(1, 4), 0), (1, HALF))])
        assert x == cs(2, [((0, 0), (1, HALF))])

    def test_idempotent(self):
        x = cs(2, [((0, 0), (HALF, 1)), ((0, 0), (1, HALF))])
        assert CubicalSet.from_boxes(2, x.boxes) == x

    def test_point_set_faithful_random(self):
        rng = np.random.default_rng(11)
        for _ in range(40):
            dim = int(rng.integers(1, 4))
            raw = []
            for _ in range(int(rng.integers(1, 5))):
                lo = [F(int(rng.integers(0, 4)), 8) for _ in range(dim)]
                hi = [c + F(int(rng.integers(1, 4)), 8) for c in lo]
                hi = [min(c, F(1)) for c in hi]
                raw.append((tuple(lo), tuple(hi)))
            x = cs(dim, raw)
            for _ in range(20):
                p = tuple(F(int(rng.integers(0, 17)), 16) for _ in range(dim))
                expected = any(
                    all(a <= c <= b for a, c, b in zip(lo, p, hi))
                    for lo, hi in raw
                )
                assert x.contains(p) == expected

    def test_rejects_bad_boxes(self):
        with pytest.raises(UnitCubeError):
            box((0, 0), (0, 1))  # degenerate side
        with pytest.raises(UnitCubeError):
            box((0, 0), (F(3, 2), 1))  # outside the cube
        with pytest.raises(DimensionMismatchError):
            CubicalSet.from_boxes(2, [box((0,), (1,))])


class TestMeasures:
    def test_volume_examples(self):
        assert cs(3, [((0, 0, 0), (HALF, HALF, HALF))]).volume() == F(1, 8)
        assert CubicalSet.empty(2).volume() == 0
        a, b = F(1, 3), F(1, 5)
        lshape = cs(2, [((0, 0), (a, 1)), ((0, 0), (1, b))])
        assert lshape.volume() == a + b - a * b

    def test_perimeter_examples(self):
        a = F(2, 7)
        assert cs(3, [((0, 0, 0), (a, a, a))]).relative_perimeter() == 3 * a * a
        assert cs(3, [((0, 0, 0), (a, a, 1))]).relative_perimeter() == 2 * a
        assert cs(3, [((0, 0, 0), (F(2, 5), 1, 1))]).relative_perimeter() == 1
        assert CubicalSet.unit(3).relative_perimeter() == 0

    def test_perimeter_1d(self):
        assert cs(1, [((0,), (F(1, 3),))]).relative_perimeter() == 1
        assert cs(1, [((F(1, 4),), (F(1, 2),))]).relative_perimeter() == 2


class TestSections:
    def test_cross_section_constant_column(self):
        x = cs(3, [((0, 0, 0), (HALF, HALF, HALF))])
        sq = cs(2, [((0, 0), (HALF, HALF))])
        assert x.cross_section(2, F(1, 4), "below") == sq
        assert x.cross_section(2, F(1, 4), "above") == sq

    def test_cross_section_at_face(self):
        x = cs(3, [((0, 0, 0), (HALF, HALF, HALF))])
        assert x.cross_section(2, HALF, "below") == cs(2, [((0, 0), (HALF, HALF))])
        assert x.cross_section(2, HALF, "above").is_empty

    def test_cross_section_domain_errors(self):
        x = cs(2, [((0, 0), (HALF, HALF))])
        with pytest.raises(DomainError):
            x.cross_section(0, 0, "below")
        with pytest.raises(DomainError):
            x.cross_section(0, 1, "above")
        with pytest.raises(DomainError):
            x.cross_section(0, HALF, "sideways")

    def test_boundary_slice(self):
        a = F(1, 3)
        x = cs(3, [((0, 0, 0), (a, a, a))])
        face = x.boundary_slice(0, a)
        assert face.volume() == a * a
        assert x.boundary_slice(0, F(1, 5)).volume() == 0

    def test_l_prism_section(self):
        a, b, c = F(1, 4), F(1, 3), F(3, 5)
        prism = cs(3, [((0, 0, 0), (a, 1, c)), ((0, 0, 0), (1, b, c))])
        below = prism.cross_section(2, c, "below")
        assert below == cs(2, [((0, 0), (a, 1)), ((0, 0), (1, b))])
        assert prism.cross_section(2, c, "above").is_empty


class TestBoolean:
    def test_complement(self):
        a = F(2, 5)
        slab = cs(3, [((0, 0, 0), (a, 1, 1))])
        comp = slab.complement()
        assert comp == cs(3, [((a, 0, 0), (1, 1, 1))])
        assert comp.volume() == 1 - slab.volume()
        assert comp.relative_perimeter() == slab.relative_perimeter()
        assert CubicalSet.empty(2).complement() == CubicalSet.unit(2)

    def test_tri_slab_complement_is_corner_cube(self):
        a = F(1, 5)
        tri = cs(
            3,
            [((0, 0, 0), (a, 1, 1)), ((0, 0, 0), (1, a, 1)), ((0, 0, 0), (1, 1, a))],
        )
        corner = cs(3, [((a, a, a), (1, 1, 1))])
        assert tri.complement() == corner
        assert tri.relative_perimeter() == 3 * (1 - a) ** 2
        assert corner.relative_perimeter() == 3 * (1 - a) ** 2

    def test_complement_involution_random(self):
        rng = np.random.default_rng(5)
        for _ in range(15):
            v = VoxelSet(4, rng.random((4, 4)) < 0.5)
            x = devoxelize(v)
            assert x.complement().complement() == x
            assert x.volume() + x.complement().volume() == 1
            assert x.complement().relative_perimeter() == x.relative_perimeter()


class TestIsometry:
    def test_apply_examples(self):
        a = F(1, 3)
        slab = cs(3, [((0, 0, 0), (a, 1, 1))])
        ident = CubeIsometry.identity(3)
        assert slab.apply(ident) == slab
        flip0 = CubeIsometry((0, 1, 2), (True, False, False))
        assert slab.apply(flip0) == cs(3, [((1 - a, 0, 0), (1, 1, 1))])
        b = F(1, 5)
        boxab = cs(3, [((0, 0, 0), (a, b, 1))])
        swap = CubeIsometry((1, 0, 2), (False, False, False))
        assert boxab.apply(swap) == cs(3, [((0, 0, 0), (b, a, 1))])

    def test_group_axioms(self):
        isos = list(all_isometries(3))
        assert len(isos) == 48
        rng = np.random.default_rng(3)
        pts = [tuple(F(int(rng.integers(0, 8)), 7) for _ in range(3)) for _ in range(5)]
        for _ in range(30):
            g = isos[int(rng.integers(0, 48))]
            h = isos[int(rng.integers(0, 48))]
            for p in pts:
                assert g.compose(h).apply_point(p) == g.apply_point(h.apply_point(p))
                assert g.inverse().apply_point(g.apply_point(p)) == p

    def test_invariance_of_measures(self):
        rng = np.random.default_rng(9)
        for _ in range(10):
            v = VoxelSet(3, rng.random((3, 3, 3)) < 0.5)
            x = devoxelize(v)
            for g in all_isometries(3):
                y = x.apply(g)
                assert y.volume() == x.volume()
                assert y.relative_perimeter() == x.relative_perimeter()

    def test_equal_up_to_isometry(self):
        a = F(1, 4)
        tube_x = cs(3, [((0, 0, 0), (a, a, 1))])
        tube_z = cs(3, [((0, 0, 0), (1, a, a))])
        g = equal_up_to_isometry(tube_x, tube_z)
        assert g is not None
        assert tube_x.apply(g) == tube_z
        # cube and tube of the same volume 1/64 are not isometric
        cube = cs(3, [((0, 0, 0), (a, a, a))])
        thin_tube = cs(3, [((0, 0, 0), (F(1, 8), F(1, 8), 1))])
        assert cube.volume() == thin_tube.volume()
        assert equal_up_to_isometry(cube, thin_tube) is None


class TestVoxel:
    def test_roundtrip(self):
        x = cs(3, [((0, 0, 0), (HALF, HALF, HALF))])
        v = voxelize(x, 4)
        assert v.count() == 8
        assert devoxelize(v) == x
        assert voxelize(devoxelize(v), 4) == v

    def test_full_grid(self):
        v = VoxelSet(3, np.ones((3, 3), dtype=bool))
        assert devoxelize(v) == CubicalSet.unit(2)

    def test_alignment_error(self):
        x = cs(3, [((0, 0, 0), (F(1, 3), F(1, 3), F(1, 3)))])
        with pytest.raises(AlignmentError):
            voxelize(x, 4)

    def test_face_count_matches_sweep(self):
        rng = np.random.default_rng(17)
        for dim, m in ((2, 5), (3, 3), (3, 4)):
            for _ in range(8):
                v = VoxelSet(m, rng.random((m,) * dim) < 0.5)
                x = devoxelize(v)
                assert x.volume() == v.volume()
                assert x.relative_perimeter() == v.relative_perimeter()

    def test_voxel_isometry_matches_exact(self):
        rng = np.random.default_rng(23)
        v = VoxelSet(3, rng.random((3, 3, 3)) < 0.5)
        for g in all_isometries(3):
            assert devoxelize(v.apply(g)) == devoxelize(v).apply(g)


class TestHigherDim:
    def test_4d_box(self):
        a = F(1, 3)
        x = cs(4, [((0, 0, 0, 0), (a, a, a, a))])
        assert x.volume() == a**4
        assert x.relative_perimeter() == 4 * a**3

    def test_boundary_faces_cube(self):
        x = cs(3, [((0, 0, 0), (HALF, HALF, HALF))])
        faces = boundary_faces(x)
        assert len(faces) == 3
        assert all(region.volume() == F(1, 4) for _, _, region in faces)
