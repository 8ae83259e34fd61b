"""Slices, signed boundary measures, event-driven motions, reduction."""

from fractions import Fraction as F

import numpy as np
import pytest

from cubeiso.errors import (
    DomainError,
    EventError,
    NonSingularError,
    NotSymmetrizedError,
    PreconditionError,
)
from cubeiso.geometry import CubicalSet
from cubeiso.sampling import random_monotone_set
from cubeiso.symmetrize import is_symmetrized
from cubeiso.variation import (
    check_stationarity,
    event_horizon,
    improve_step,
    is_special,
    merge_step,
    monotone_relative_perimeter,
    reduce_to_special,
    singular_points,
    slice_data,
    translate_slice,
)

HALF = F(1, 2)


def cs(dim, pairs):
    return CubicalSet.from_coords(dim, pairs)


def tri_slab(a, b, c):
    return cs(
        3, [((0, 0, 0), (a, 1, 1)), ((0, 0, 0), (1, b, 1)), ((0, 0, 0), (1, 1, c))]
    )


def slab_leg(a, b, c):
    return cs(3, [((0, 0, 0), (a, 1, 1)), ((0, 0, 0), (1, b, c))])


class TestSingularPoints:
    def test_cube(self):
        a = F(1, 3)
        x = cs(3, [((0, 0, 0), (a, a, a))])
        assert singular_points(x, 0) == [a]

    def test_tri_slab_interior_point(self):
        a, b, c = F(1, 5), F(1, 4), F(1, 6)
        assert singular_points(tri_slab(a, b, c), 0) == [a]

    def test_unit_cube_has_none(self):
        for i in range(3):
            assert singular_points(CubicalSet.unit(3), i) == []


class TestSliceData:
    def test_box_face(self):
        a, b, c = F(1, 3), F(1, 4), F(1, 5)
        x = cs(3, [((0, 0, 0), (a, b, c))])
        d = slice_data(x, 2, c)
        assert d.region == cs(2, [((0, 0), (a, b))])
        assert d.area == a * b
        assert d.outer_measure == a + b
        assert d.cube_measure == a + b
        assert d.inner_measure == 0
        assert d.first_var == (a + b) / (a * b)
        assert d.total_boundary == 2 * (a + b)

    def test_tri_slab_corner_slice(self):
        a, b, c = F(1, 5), F(1, 4), F(1, 6)
        d = slice_data(tri_slab(a, b, c), 0, a)
        assert d.area == (1 - b) * (1 - c)
        assert d.first_var == (b + c - 2) / ((1 - b) * (1 - c))
        assert d.outer_measure == 0

    def test_slab_leg_variations(self):
        a, b, c = F(1, 4), F(1, 3), F(1, 2)
        x = slab_leg(a, b, c)
        assert slice_data(x, 0, a).first_var == (-b - c) / (1 - b * c)
        assert slice_data(x, 1, b).first_var == (1 - a - c) / ((1 - a) * c)
        assert slice_data(x, 2, c).first_var == (1 - a - b) / ((1 - a) * b)

    def test_region_matches_boundary_slice(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            x = random_monotone_set(rng, 3, 4)
            for axis in range(3):
                for s in singular_points(x, axis):
                    d = slice_data(x, axis, s)
                    assert d.region == x.boundary_slice(axis, s)
                    assert d.area == d.region.volume()

    def test_requires_symmetrized(self):
        x = cs(2, [((F(1, 4), 0), (F(3, 4), HALF))])
        with pytest.raises(NotSymmetrizedError):
            slice_data(x, 0, F(1, 4))

    def test_nonsingular_position(self):
        x = cs(2, [((0, 0), (HALF, HALF))])
        with pytest.raises(NonSingularError):
            slice_data(x, 0, F(1, 4))


class TestTranslate:
    def test_linear_law_cube(self):
        a = F(2, 5)
        x = cs(3, [((0, 0, 0), (a, a, a))])
        d = slice_data(x, 2, a)
        step = F(1, 7)
        y = translate_slice(x, 2, a, step)
        assert y == cs(3, [((0, 0, 0), (a, a, a + step))])
        assert y.volume() - x.volume() == d.area * step
        assert y.relative_perimeter() - x.relative_perimeter() == d.signed_measure * step

    def test_zero_motion(self):
        x = cs(2, [((0, 0), (HALF, HALF))])
        assert translate_slice(x, 0, HALF, 0) == x

    def test_event_error_beyond_horizon(self):
        a = F(1, 3)
        x = cs(3, [((0, 0, 0), (a, a, a))])
        with pytest.raises(EventError) as exc:
            translate_slice(x, 0, a, 1 - a)
        assert exc.value.event.kind == "slice-hits-1"

    def test_horizons(self):
        a = F(1, 3)
        x = cs(3, [((0, 0, 0), (a, a, a))])
        up = event_horizon(x, 0, a, +1)
        assert (up.kind, up.distance) == ("slice-hits-1", 1 - a)
        down = event_horizon(x, 0, a, -1)
        assert (down.kind, down.distance) == ("slice-hits-0", a)

    def test_horizon_stops_at_staircase_step(self):
        x = cs(2, [((0, 0), (F(1, 4), F(3, 4))), ((F(1, 4), 0), (HALF, F(1, 4)))])
        hz = event_horizon(x, 1, F(1, 4), +1)
        assert (hz.kind, hz.distance) == ("slice-area-changes", HALF)


class TestMergeImprove:
    @staticmethod
    def four_step():
        w = F(1, 4)
        heights = [F(4, 5), F(3, 5), F(2, 5), F(1, 5)]
        return cs(
            2,
            [
                ((i * w, 0), ((i + 1) * w, h))
                for i, h in enumerate(heights)
            ],
        )

    def test_merge_preserves_both_measures(self):
        x = self.four_step()
        fvs = {s: slice_data(x, 1, s).first_var for s in singular_points(x, 1)}
        assert fvs[F(2, 5)] == fvs[F(3, 5)] == 0
        y = merge_step(x, 1, F(2, 5), F(3, 5))
        assert y.volume() == x.volume()
        assert y.relative_perimeter() == x.relative_perimeter()
        assert len(singular_points(y, 1)) == len(singular_points(x, 1)) - 1
        assert singular_points(y, 1) == [F(1, 5), HALF, F(4, 5)]

    def test_merge_requires_equal_variation(self):
        x = self.four_step()
        with pytest.raises(PreconditionError):
            merge_step(x, 1, F(1, 5), F(2, 5))

    def test_improve_same_direction(self):
        w = F(1, 3)
        x = cs(
            2,
            [
                ((0, 0), (w, F(3, 4))),
                ((w, 0), (2 * w, HALF)),
                ((2 * w, 0), (1, F(1, 4))),
            ],
        )
        y = improve_step(x, (F(1, 4), 1), (F(3, 4), 1))
        assert y.volume() == x.volume()
        assert y.relative_perimeter() < x.relative_perimeter()
        assert y == cs(2, [((0, 0), (1, HALF))])

    def test_improve_cross_direction_slab_leg(self):
        a, b, c = F(1, 4), F(1, 3), F(1, 2)
        x = slab_leg(a, b, c)
        y = improve_step(x, (a, 0), (c, 2))
        assert y.volume() == x.volume()
        assert y.relative_perimeter() < x.relative_perimeter()
        assert is_symmetrized(y)

    def test_improve_rejects_equal_variations(self):
        a = F(1, 3)
        x = cs(3, [((0, 0, 0), (a, a, a))])
        with pytest.raises(PreconditionError):
            improve_step(x, (a, 0), (a, 1))


class TestStationarity:
    def test_cube_is_stationary(self):
        a = F(1, 3)
        rep = check_stationarity(cs(3, [((0, 0, 0), (a, a, a))]))
        assert rep.stationary
        assert rep.values() == [2 / a]
        assert len(rep.slices) == 3

    def test_uneven_tube_is_not(self):
        a, b = F(1, 3), F(1, 4)
        rep = check_stationarity(cs(3, [((0, 0, 0), (a, b, 1))]))
        assert not rep.stationary
        assert rep.values() == sorted([1 / a, 1 / b])

    def test_symmetric_tripod_is_stationary(self):
        a = F(3, 10)
        x = cs(
            3,
            [
                ((0, 0, 0), (a, 1, a)),
                ((0, 0, 0), (1, a, a)),
                ((0, 0, 0), (a, a, 1)),
            ],
        )
        rep = check_stationarity(x)
        assert rep.stationary
        assert rep.values() == [(1 - 2 * a) / (a * (1 - a))]


class TestSpecialAndReduce:
    def test_minimizer_shapes_are_special(self):
        assert is_special(cs(3, [((0, 0, 0), (F(1, 3),) * 3)]))
        assert is_special(cs(3, [((0, 0, 0), (F(2, 5), 1, 1))]))
        assert not is_special(cs(3, [((F(1, 4), 0, 0), (HALF, 1, 1))]))
        assert not is_special(CubicalSet.unit(3))  # volume above 1/2

    def test_reduce_already_special(self):
        x = cs(3, [((0, 0, 0), (F(1, 3),) * 3)])
        y, log = reduce_to_special(x)
        assert y == x
        assert [s.kind for s in log] == ["symmetrize"]

    def test_reduce_staircase_2d(self):
        x = cs(2, [((0, 0), (F(1, 4), F(3, 4))), ((F(1, 4), 0), (HALF, F(1, 4)))])
        y, log = reduce_to_special(x)
        assert is_special(y)
        assert y.volume() == x.volume() == F(1, 4)
        assert y.relative_perimeter() <= x.relative_perimeter()

    def test_reduce_requires_small_volume(self):
        with pytest.raises(DomainError):
            reduce_to_special(CubicalSet.unit(3))

    def test_reduce_random_monotone(self):
        rng = np.random.default_rng(29)
        for _ in range(15):
            x = random_monotone_set(rng, 3, 4, max_cells=32)
            y, log = reduce_to_special(x)
            assert is_special(y)
            assert y.volume() == x.volume()
            assert y.relative_perimeter() <= x.relative_perimeter()
            for step in log[1:]:
                assert step.kind in ("merge", "improve")
                assert step.d_perimeter <= 0

    def test_monotone_perimeter_matches_sweep(self):
        rng = np.random.default_rng(31)
        for _ in range(20):
            x = random_monotone_set(rng, 3, 5)
            assert monotone_relative_perimeter(x) == x.relative_perimeter()


class TestBoundaryPartition:
    def test_parts_sum_to_full_boundary(self):
        # interior parts (+1 and -1) together are exactly the region's
        # relative perimeter; the 0 part is the rest of its boundary
        rng = np.random.default_rng(61)
        for _ in range(12):
            x = random_monotone_set(rng, 3, 4)
            for axis in range(3):
                for s in singular_points(x, axis):
                    d = slice_data(x, axis, s)
                    interior = d.outer_measure + d.inner_measure
                    assert interior == d.region.relative_perimeter()

    def test_full_face_slice_has_zero_variation(self):
        x = cs(3, [((0, 0, 0), (F(2, 5), 1, 1))])
        d = slice_data(x, 0, F(2, 5))
        assert d.region == CubicalSet.unit(2)
        assert d.outer_measure == d.inner_measure == 0
        assert d.cube_measure == 4
        assert d.first_var == 0


class TestRandomizedMotions:
    def test_cross_direction_improvements_on_random_sets(self):
        # pick the extremal unequal pair across different axes and demand
        # the full contract: exact volume, strict decrease, still monotone
        rng = np.random.default_rng(67)
        done = 0
        while done < 25:
            x = random_monotone_set(rng, 3, 4, max_cells=30)
            rep = check_stationarity(x, assume_symmetrized=True)
            pairs = [
                (a, b)
                for a in rep.slices
                for b in rep.slices
                if a.axis != b.axis and a.first_var != b.first_var
            ]
            if not pairs:
                continue
            lo, hi = pairs[0]
            y = improve_step(
                x,
                (lo.position, lo.axis),
                (hi.position, hi.axis),
                assume_symmetrized=True,
            )
            assert y.volume() == x.volume()
            assert y.relative_perimeter() < x.relative_perimeter()
            assert is_symmetrized(y)
            done += 1

    def test_merge_family_of_flat_staircases(self):
        # equal column widths make the interior slices all zero-variation,
        # so any interior pair merges with both measures preserved
        for m in (3, 4, 5):
            w = F(1, m)
            heights = [F(m - i, m + 1) for i in range(m)]
            x = cs(2, [((i * w, 0), ((i + 1) * w, h)) for i, h in enumerate(heights)])
            pts = singular_points(x, 1)
            inner = [s for s in pts if slice_data(x, 1, s).first_var == 0]
            assert len(inner) == m - 2
            if len(inner) >= 2:
                y = merge_step(x, 1, inner[0], inner[1])
                assert y.relative_perimeter() == x.relative_perimeter()
                assert y.volume() == x.volume()

    def test_four_dimensional_slice_translation(self):
        a = F(1, 3)
        x = CubicalSet.from_coords(4, [((0, 0, 0, 0), (a, a, a, a))])
        d = slice_data(x, 3, a)
        assert d.area == a**3
        assert d.first_var == 3 / a
        step = F(1, 9)
        y = translate_slice(x, 3, a, step)
        assert y.volume() - x.volume() == d.area * step
        assert (
            y.relative_perimeter() - x.relative_perimeter()
            == d.signed_measure * step
        )

    def test_reduce_random_2d(self):
        rng = np.random.default_rng(71)
        for _ in range(10):
            x = random_monotone_set(rng, 2, 6, max_cells=18)
            y, _ = reduce_to_special(x)
            assert is_special(y)
            assert y.volume() == x.volume()
            assert y.relative_perimeter() <= x.relative_perimeter()
