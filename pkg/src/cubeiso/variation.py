"""First-variation analysis of symmetrized cubical sets.

A symmetrized set is a monotone staircase: along every axis, each column is
an interval anchored at the zero wall, so the set is the subgraph of a
non-increasing height function over the base grid perpendicular to any axis.
Singular slices are the level sets of that function; translating one trades
volume against relative perimeter at the exact rational rate P/A, where A is
the slice area and P the signed measure of its boundary (wall-growing parts
count +1, wall-shrinking parts -1, parts on the cube boundary 0).

All motions are event-driven: a slice moves exactly to the nearest
structural event (another level of the height function, or a cube wall), so
every volume and perimeter delta is an exact rational.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import (
    DomainError,
    EventError,
    InternalCheckError,
    IterationCapError,
    NonSingularError,
    NotSymmetrizedError,
    PreconditionError,
)
from .geometry import ONE, ZERO, AxisBox, CubicalSet, as_rat
from .symmetrize import is_symmetrized, symmetrize_all

__all__ = [
    "SliceData",
    "VariationEvent",
    "ReductionStep",
    "StationarityReport",
    "singular_points",
    "slice_data",
    "translate_slice",
    "event_horizon",
    "merge_step",
    "improve_step",
    "reduce_to_special",
    "check_stationarity",
    "is_special",
    "monotone_relative_perimeter",
]

HALF = Fraction(1, 2)


# -- height profiles ---------------------------------------------------------


class _Profile:
    """Height function of a symmetrized set over the grid perpendicular to
    one axis: ``heights[idx]`` is the column measure of the grid cell."""

    __slots__ = ("dim", "axis", "grids", "heights")

    def __init__(self, dim, axis, grids, heights):
        self.dim = dim
        self.axis = axis
        self.grids = grids  # per base axis: sorted cuts including 0 and 1
        self.heights = heights  # dict: cell index tuple -> Fraction

    def cell_area(self, idx) -> Fraction:
        a = ONE
        for g, i in zip(self.grids, idx):
            a *= g[i + 1] - g[i]
        return a

    def level_cells(self, s: Fraction) -> list:
        return [idx for idx, h in self.heights.items() if h == s]

    def level_area(self, s: Fraction) -> Fraction:
        return sum((self.cell_area(i) for i in self.level_cells(s)), ZERO)

    def levels(self) -> list[Fraction]:
        return sorted({h for h in self.heights.values()})

    def interior_levels(self) -> list[Fraction]:
        return [v for v in self.levels() if ZERO < v < ONE]

    def volume(self) -> Fraction:
        return sum(
            (h * self.cell_area(idx) for idx, h in self.heights.items()), ZERO
        )

    def edge_length(self, idx, j) -> Fraction:
        e = ONE
        for k, g in enumerate(self.grids):
            if k != j:
                e *= g[idx[k] + 1] - g[idx[k]]
        return e

    def to_set(self) -> CubicalSet:
        boxes = []
        for idx, h in self.heights.items():
            if h == 0:
                continue
            lo, hi = [], []
            k = 0
            for j in range(self.dim):
                if j == self.axis:
                    lo.append(ZERO)
                    hi.append(h)
                else:
                    g = self.grids[k]
                    lo.append(g[idx[k]])
                    hi.append(g[idx[k] + 1])
                    k += 1
            boxes.append(AxisBox(tuple(lo), tuple(hi)))
        return CubicalSet.from_boxes(self.dim, boxes)

    def relative_perimeter(self) -> Fraction:
        """Caps plus wall differences; valid for monotone height functions."""
        total = ZERO
        for idx, h in self.heights.items():
            if ZERO < h < ONE:
                total += self.cell_area(idx)
            for j in range(len(self.grids)):
                if idx[j] + 1 > len(self.grids[j]) - 2:
                    continue  # neighbour would be past the far wall
                nb = idx[:j] + (idx[j] + 1,) + idx[j + 1:]
                diff = h - self.heights[nb]
                if diff != 0:
                    total += abs(diff) * self.edge_length(idx, j)
        return total


def _build_profile(x: CubicalSet, axis: int) -> _Profile:
    grids = []
    for j in range(x.dim):
        if j == axis:
            continue
        cuts = {ZERO, ONE}
        for b in x.boxes:
            cuts.update(b.interval(j))
        grids.append(sorted(cuts))
    heights: dict = {}
    if x.dim == 1:
        heights[()] = sum((b.hi[0] - b.lo[0] for b in x.boxes), ZERO)
        return _Profile(1, axis, grids, heights)
    for idx in itertools.product(*[range(len(g) - 1) for g in grids]):
        heights[idx] = ZERO
    other_axes = [j for j in range(x.dim) if j != axis]
    for b in x.boxes:
        length = b.hi[axis] - b.lo[axis]
        spans = []
        for k, j in enumerate(other_axes):
            g = grids[k]
            spans.append(range(g.index(b.lo[j]), g.index(b.hi[j])))
        for idx in itertools.product(*spans):
            heights[idx] += length
    return _Profile(x.dim, axis, grids, heights)


def monotone_relative_perimeter(x: CubicalSet) -> Fraction:
    """Relative perimeter via one height profile; requires a symmetrized set.

    Independent of the axis-sweep implementation in :mod:`cubeiso.geometry`;
    the two routes are cross-checked in the test suite.
    """
    return _build_profile(x, 0).relative_perimeter()


def _require_symmetrized(x: CubicalSet, assume: bool):
    if not assume and not is_symmetrized(x):
        raise NotSymmetrizedError(
            "operation requires a Steiner-symmetrization fixed point"
        )


# -- slice analysis ----------------------------------------------------------


@dataclass(frozen=True)
class SliceData:
    """One singular slice: its region, area, and signed boundary measure.

    ``outer_measure`` is the part of the region's boundary where translating
    the slice outward grows walls (+1), ``inner_measure`` where walls shrink
    (-1), and ``cube_measure`` the part on the cube boundary (0).  The first
    variation ``signed_measure / area`` is the exact rate of perimeter
    change per unit of volume moved.
    """

    axis: int
    position: Fraction
    region: CubicalSet
    area: Fraction
    outer_measure: Fraction
    cube_measure: Fraction
    inner_measure: Fraction

    @property
    def signed_measure(self) -> Fraction:
        return self.outer_measure - self.inner_measure

    @property
    def first_var(self) -> Fraction:
        return self.signed_measure / self.area

    @property
    def total_boundary(self) -> Fraction:
        return self.outer_measure + self.cube_measure + self.inner_measure


@dataclass(frozen=True)
class VariationEvent:
    kind: str  # slice-hits-0 | slice-hits-1 | slices-collide | slice-area-changes
    distance: Fraction


def singular_points(x: CubicalSet, axis: int) -> list[Fraction]:
    """Interior positions whose boundary slice has positive (n-1)-measure.

    Valid for arbitrary cubical sets; finite by construction.
    """
    out = []
    for s in x.internal_coords(axis):
        if x.boundary_slice(axis, s).volume() > 0:
            out.append(s)
    return out


def _slice_from_profile(prof: _Profile, s: Fraction) -> SliceData:
    cells = prof.level_cells(s)
    if not cells or not (ZERO < s < ONE):
        raise NonSingularError(
            f"{s} is not an interior singular point along axis {prof.axis}"
        )
    cellset = set(cells)
    area = sum((prof.cell_area(i) for i in cells), ZERO)
    outer = cube = inner = ZERO
    nbase = len(prof.grids)
    for idx in cells:
        for j in range(nbase):
            edge = prof.edge_length(idx, j)
            for step in (-1, 1):
                nj = idx[j] + step
                if nj < 0 or nj > len(prof.grids[j]) - 2:
                    cube += edge  # flush against a cube wall
                    continue
                nb = idx[:j] + (nj,) + idx[j + 1:]
                if nb in cellset:
                    continue  # interior to the region
                if prof.heights[nb] > s:
                    inner += edge
                else:
                    outer += edge
    boxes = []
    for idx in cells:
        lo = tuple(prof.grids[k][idx[k]] for k in range(nbase))
        hi = tuple(prof.grids[k][idx[k] + 1] for k in range(nbase))
        boxes.append(AxisBox(lo, hi))
    region = CubicalSet.from_boxes(prof.dim - 1, boxes)
    return SliceData(prof.axis, s, region, area, outer, cube, inner)


def slice_data(
    x: CubicalSet, axis: int, s, *, assume_symmetrized: bool = False
) -> SliceData:
    """Region, area and signed boundary classification of the singular
    slice of a symmetrized set at position ``s`` along ``axis``."""
    _require_symmetrized(x, assume_symmetrized)
    return _slice_from_profile(_build_profile(x, axis), as_rat(s))


def _horizon(prof: _Profile, s: Fraction, direction: int) -> VariationEvent:
    values = set(prof.levels()) | {ZERO, ONE}
    if direction > 0:
        nxt = min(v for v in values if v > s)
        kind = "slice-hits-1" if nxt == ONE else "slice-area-changes"
        return VariationEvent(kind, nxt - s)
    prev = max(v for v in values if v < s)
    kind = "slice-hits-0" if prev == ZERO else "slice-area-changes"
    return VariationEvent(kind, s - prev)


def event_horizon(
    x: CubicalSet, axis: int, s, direction, *, assume_symmetrized: bool = False
) -> VariationEvent:
    """Exact supremum of event-free motion of one slice.

    ``direction`` is +1 (toward the far wall) or -1 (toward the origin);
    the strings ``"up"``/``"down"`` are also accepted.  Motion ends when the
    plane reaches another level of the height function
    (``slice-area-changes``) or a cube wall (``slice-hits-0/1``).
    """
    _require_symmetrized(x, assume_symmetrized)
    s = as_rat(s)
    if isinstance(direction, str):
        direction = {"up": 1, "above": 1, "down": -1, "below": -1}[direction]
    prof = _build_profile(x, axis)
    if not prof.level_cells(s) or not (ZERO < s < ONE):
        raise NonSingularError(f"{s} is not an interior singular point")
    return _horizon(prof, s, direction)


def translate_slice(
    x: CubicalSet, axis: int, s, d, *, assume_symmetrized: bool = False
) -> CubicalSet:
    """Move the singular slice at ``s`` by the signed distance ``d``.

    Within the event horizon this changes volume by exactly ``area * d``
    and relative perimeter by exactly ``signed_measure * d``.
    """
    _require_symmetrized(x, assume_symmetrized)
    s, d = as_rat(s), as_rat(d)
    if d == 0:
        return x
    prof = _build_profile(x, axis)
    if not prof.level_cells(s) or not (ZERO < s < ONE):
        raise NonSingularError(f"{s} is not an interior singular point")
    horizon = _horizon(prof, s, 1 if d > 0 else -1)
    if abs(d) >= horizon.distance:
        raise EventError(horizon, d)
    for idx in prof.level_cells(s):
        prof.heights[idx] = s + d
    return prof.to_set()


# -- paired motions ----------------------------------------------------------


@dataclass(frozen=True)
class _MotionInfo:
    event: str
    exchanged: Fraction  # volume moved from the shrink side to the grow side
    grow_from: Fraction
    grow_to: Fraction
    shrink_from: Fraction
    shrink_to: Fraction


def _joint_motion(
    prof: _Profile, s_grow: Fraction, s_shrink: Fraction
) -> tuple[CubicalSet, _MotionInfo]:
    """Raise the ``s_grow`` level and lower the ``s_shrink`` level at equal
    volume rates, stopping exactly at the first event."""
    grow_cells = prof.level_cells(s_grow)
    shrink_cells = prof.level_cells(s_shrink)
    a_g = prof.level_area(s_grow)
    a_s = prof.level_area(s_shrink)
    values = set(prof.levels()) | {ZERO, ONE}
    candidates: list[tuple[Fraction, str]] = []
    if s_grow < s_shrink:
        t = (s_shrink - s_grow) * a_g * a_s / (a_g + a_s)
        candidates.append((t, "slices-collide"))
    for v in values:
        if v in (s_grow, s_shrink):
            continue
        if v > s_grow:
            kind = "slice-hits-1" if v == ONE else "slice-area-changes"
            candidates.append(((v - s_grow) * a_g, kind))
        if v < s_shrink:
            kind = "slice-hits-0" if v == ZERO else "slice-area-changes"
            candidates.append(((s_shrink - v) * a_s, kind))
    t_star, kind = min(candidates, key=lambda c: (c[0], c[1]))
    p_grow = s_grow + t_star / a_g
    p_shrink = s_shrink - t_star / a_s
    for idx in grow_cells:
        prof.heights[idx] = p_grow
    for idx in shrink_cells:
        prof.heights[idx] = p_shrink
    info = _MotionInfo(kind, t_star, s_grow, p_grow, s_shrink, p_shrink)
    return prof.to_set(), info


def merge_step(
    x: CubicalSet, axis: int, s1, s2, *, assume_symmetrized: bool = False
) -> CubicalSet:
    """Move two equal-first-variation slices of one direction toward each
    other at matched volume rates until one meets another slice or they
    collide.  Volume and relative perimeter are preserved exactly and the
    interior singular count along ``axis`` strictly decreases."""
    y, _ = _merge_step_full(x, axis, as_rat(s1), as_rat(s2), assume_symmetrized)
    return y


def _merge_step_full(x, axis, s1, s2, assume):
    _require_symmetrized(x, assume)
    if not s1 < s2:
        raise DomainError("merge_step requires s1 < s2")
    prof = _build_profile(x, axis)
    d1 = _slice_from_profile(prof, s1)
    d2 = _slice_from_profile(prof, s2)
    if d1.first_var != d2.first_var:
        raise PreconditionError(
            f"first variations differ ({d1.first_var} vs {d2.first_var}); "
            "use improve_step"
        )
    before_vol = prof.volume()
    before_per = prof.relative_perimeter()
    before_count = len(prof.interior_levels())
    y, info = _joint_motion(prof, s1, s2)
    after = _build_profile(y, axis)
    if after.volume() != before_vol:
        raise InternalCheckError("merge_step changed the volume")
    if after.relative_perimeter() != before_per:
        raise InternalCheckError("merge_step changed the relative perimeter")
    if not len(after.interior_levels()) < before_count:
        raise InternalCheckError("merge_step did not reduce the slice count")
    return y, info


def improve_step(
    x: CubicalSet,
    slice1: tuple,
    slice2: tuple,
    *,
    assume_symmetrized: bool = False,
) -> CubicalSet:
    """Strictly decrease relative perimeter at constant volume by growing
    the slice with the smaller first variation while shrinking the other.

    ``slice1``/``slice2`` are ``(position, axis)`` pairs.  Same-direction
    pairs move jointly to the first event; cross-direction pairs use an
    exact slab exchange, halving the step until the (at most quadratic)
    interaction term is dominated by the first-order gain."""
    _require_symmetrized(x, assume_symmetrized)
    (s1, i1), (s2, i2) = slice1, slice2
    s1, s2 = as_rat(s1), as_rat(s2)
    d1 = slice_data(x, i1, s1, assume_symmetrized=True)
    d2 = slice_data(x, i2, s2, assume_symmetrized=True)
    if d1.first_var == d2.first_var:
        raise PreconditionError(
            "equal first variations admit no improving trade"
        )
    if d1.first_var > d2.first_var:
        d1, d2 = d2, d1
        (s1, i1), (s2, i2) = (s2, i2), (s1, i1)
    if i1 == i2:
        y, _ = _improve_same_axis_full(x, i1, s1, s2, d1, d2)
        return y
    return _improve_cross_axis(x, (s1, i1, d1), (s2, i2, d2))


def _improve_same_axis_full(x, axis, s_grow, s_shrink, d_grow, d_shrink):
    prof = _build_profile(x, axis)
    before_vol = prof.volume()
    before_per = prof.relative_perimeter()
    y, info = _joint_motion(prof, s_grow, s_shrink)
    after = _build_profile(y, axis)
    if after.volume() != before_vol:
        raise InternalCheckError("improve_step changed the volume")
    after_per = after.relative_perimeter()
    predicted = (d_grow.first_var - d_shrink.first_var) * info.exchanged
    if info.event in ("slices-collide", "slice-area-changes"):
        if after_per - before_per != predicted:
            raise InternalCheckError(
                "interior-event motion deviated from the linear law"
            )
    if not after_per < before_per:
        raise InternalCheckError("improve_step failed to decrease perimeter")
    return y, info


def _improve_cross_axis(x, grow, shrink):
    """Two successive exact slice translations: grow the low-variation slice,
    recompute the high-variation slice on the grown set (the two slabs may
    interact), then shrink it by the exactly matching volume.  The step is
    halved until the quadratic interaction term is dominated."""
    (s1, i1, d1), (s2, i2, _) = grow, shrink
    h_g = _horizon(_build_profile(x, i1), s1, 1).distance
    sigma = h_g / 2
    before_vol = x.volume()
    before_per = x.relative_perimeter()
    for _ in range(64):
        y1 = translate_slice(x, i1, s1, sigma, assume_symmetrized=True)
        try:
            d2_new = slice_data(y1, i2, s2, assume_symmetrized=True)
        except NonSingularError:
            sigma /= 2
            continue
        tau = sigma * d1.area / d2_new.area
        h_s = _horizon(_build_profile(y1, i2), s2, -1).distance
        if tau >= h_s:
            sigma /= 2
            continue
        y = translate_slice(y1, i2, s2, -tau, assume_symmetrized=True)
        if y.volume() != before_vol:
            raise InternalCheckError("slab exchange volume mismatch")
        if y.relative_perimeter() < before_per:
            return y
        sigma /= 2
    raise InternalCheckError("cross-direction improvement failed to converge")


# -- stationarity, specialness, reduction -------------------------------------


@dataclass(frozen=True)
class StationarityReport:
    slices: tuple[SliceData, ...]
    stationary: bool

    def values(self) -> list[Fraction]:
        return sorted({d.first_var for d in self.slices})


def check_stationarity(
    x: CubicalSet, *, assume_symmetrized: bool = False
) -> StationarityReport:
    """List every interior singular slice with its exact first variation.

    A relative-perimeter minimizer must have all first variations equal;
    any strict inequality certifies an improving volume trade.
    """
    _require_symmetrized(x, assume_symmetrized)
    slices = []
    for axis in range(x.dim):
        prof = _build_profile(x, axis)
        for v in prof.interior_levels():
            slices.append(_slice_from_profile(prof, v))
    fvs = {d.first_var for d in slices}
    return StationarityReport(tuple(slices), len(fvs) <= 1)


def is_special(x: CubicalSet) -> bool:
    """Symmetrized, volume in (0, 1/2], full near the origin corner, and at
    most one interior singular point per direction."""
    if not (ZERO < x.volume() <= HALF):
        return False
    if not is_symmetrized(x):
        return False
    corner = []
    for axis in range(x.dim):
        corner.append(min(c for c in x.coords(axis) if c > 0) / 2)
    if not x.contains(tuple(corner)):
        return False
    return all(
        len(_build_profile(x, axis).interior_levels()) <= 1
        for axis in range(x.dim)
    )


@dataclass(frozen=True)
class ReductionStep:
    kind: str  # symmetrize | merge | improve
    axis: Optional[int]
    positions: tuple[Fraction, ...]
    new_positions: tuple[Fraction, ...]
    distance: Fraction  # volume exchanged by the motion
    d_perimeter: Fraction
    d_volume: Fraction


def reduce_to_special(
    x: CubicalSet, cap_factor: int = 16
) -> tuple[CubicalSet, list[ReductionStep]]:
    """Symmetrize, then merge or improve singular slices direction by
    direction until at most one interior singular point per axis remains.

    Volume is preserved exactly and relative perimeter never increases; the
    log records one step per motion with exact deltas.  Every motion lands a
    moving plane on another plane or a wall, so the total interior singular
    count strictly decreases each step; the iteration cap is a safeguard.
    """
    if not (ZERO < x.volume() <= HALF):
        raise DomainError("reduction requires volume in (0, 1/2]")
    log: list[ReductionStep] = []
    y = symmetrize_all(x)
    log.append(
        ReductionStep(
            "symmetrize",
            None,
            (),
            (),
            ZERO,
            y.relative_perimeter() - x.relative_perimeter(),
            ZERO,
        )
    )
    profiles = [_build_profile(y, i) for i in range(y.dim)]
    cap = cap_factor * (
        sum(len(p.interior_levels()) for p in profiles) + y.dim
    )
    steps = 0
    while True:
        target = None
        for i in range(y.dim):
            prof = _build_profile(y, i)
            if len(prof.interior_levels()) >= 2:
                target = (i, prof)
                break
        if target is None:
            break
        steps += 1
        if steps > cap:
            raise IterationCapError(f"reduction exceeded {cap} steps", log)
        axis, prof = target
        levels = prof.interior_levels()
        data = {v: _slice_from_profile(prof, v) for v in levels}
        before_per = prof.relative_perimeter()
        pair = None
        for a, b in itertools.combinations(levels, 2):
            if data[a].first_var == data[b].first_var:
                pair = (a, b)
                break
        if pair is not None:
            z, info = _merge_step_full(y, axis, pair[0], pair[1], True)
            kind = "merge"
        else:
            lo = min(levels, key=lambda v: (data[v].first_var, v))
            hi = max(levels, key=lambda v: (data[v].first_var, -v))
            z, info = _improve_same_axis_full(
                y, axis, lo, hi, data[lo], data[hi]
            )
            kind = "improve"
        d_per = _build_profile(z, axis).relative_perimeter() - before_per
        if d_per > 0 or z.volume() != y.volume():
            raise InternalCheckError("reduction step violated its contract")
        log.append(
            ReductionStep(
                kind,
                axis,
                (info.grow_from, info.shrink_from),
                (info.grow_to, info.shrink_to),
                info.exchanged,
                d_per,
                ZERO,
            )
        )
        y = z
    if not is_special(y):
        raise InternalCheckError("reduction output failed the special-set check")
    return y, log
