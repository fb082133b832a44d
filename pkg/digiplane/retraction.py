"""
Retractions of the plane onto convex disks, edge-unions and wedges.

A Retraction is evaluated lazily from its scheme; nothing is tabulated over
the plane. Every builder checks its input, and the two glued builders verify
their result on a window around the target before returning it.
"""

import logging
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Dict, FrozenSet, List, Mapping, NamedTuple, Optional, Sequence, Tuple

import pandas as pd

from .convexity import OctagonBounds, decompose_disk, octagon_bounds, require_convex_disk
from .core import C2, DigitalImage, Point, Window, adjacent, adjacent_or_equal
from .exceptions import (CrossAdjacency, DigiplaneError, DomainError, GlueMismatch, IntersectionNotSingleton,
                         NotConvexDisk, SegmentError, SharedSetNotEdge, WindowTooSmall)
from .lines import DigitalLine, HalfPlane, Orientation, classify_segment, opposite_sides, separation_line

logger = logging.getLogger(__name__)

__all__ = [
    "AxisScheme", "SlantedScheme", "EdgeUnionScheme", "WedgeScheme", "TableScheme", "Retraction",
    "RetractionReport", "WedgeInfo", "Window", "build_axis_retraction", "build_slanted_retraction",
    "build_edge_union_retraction", "check_wedge", "build_wedge_retraction", "verify_retraction",
    "verify_retraction_on",
]


def _clamp(v: int, lo: int, hi: int) -> int:
    return lo if v < lo else hi if v > hi else v


def _swap(p: Sequence[int]) -> Point:
    return Point(p[1], p[0])


def _mirror(p: Sequence[int]) -> Point:
    return Point(-p[0], p[1])


def _swapped(b: OctagonBounds) -> OctagonBounds:
    return OctagonBounds(b.y_lo, b.y_hi, b.x_lo, b.x_hi, -b.d_hi, -b.d_lo, b.s_lo, b.s_hi)


def _mirrored(b: OctagonBounds) -> OctagonBounds:
    return OctagonBounds(-b.x_hi, -b.x_lo, b.y_lo, b.y_hi, b.s_lo, b.s_hi, b.d_lo, b.d_hi)


@dataclass(frozen=True)
class AxisScheme:
    """
    Clamp into the column range, then into the column (VERTICAL); the
    HORIZONTAL variant does the same with rows.
    """

    bounds: OctagonBounds
    orientation: Orientation = Orientation.VERTICAL

    name = "axis"

    def evaluate(self, p: Point) -> Point:
        if self.orientation is Orientation.HORIZONTAL:
            return _swap(_column_clamp(_swapped(self.bounds), _swap(p)))
        return _column_clamp(self.bounds, p)


def _column_clamp(b: OctagonBounds, p: Point) -> Point:
    x = _clamp(p.x, b.x_lo, b.x_hi)
    lo, hi = b.column(x)
    return Point(x, _clamp(p.y, lo, hi))


@dataclass(frozen=True)
class SlantedScheme:
    """
    Retraction built around the two extreme lines of slope -1; slope +1 is
    the mirror image under x -> -x, and bounds and curve are stored in the
    mirrored frame then.

    With exact_sides, a point beyond an extreme line drops a perpendicular
    onto it and is clamped into the disk's part of that line. Points between
    the lines slide along their diagonal to the nearest end of the disk's
    part of it; when that end is interior they step one column west and try
    again. Without exact_sides, points are projected onto the strip between
    the extreme lines and then clamped into their column.
    """

    bounds: OctagonBounds
    curve: FrozenSet[Point]
    slope: int = -1
    exact_sides: bool = True

    name = "slanted"

    def evaluate(self, p: Point) -> Point:
        if self.slope == 1:
            return _mirror(self._evaluate(_mirror(p)))
        return self._evaluate(p)

    def _evaluate(self, p: Point) -> Point:
        if self.exact_sides:
            return _slide_to_curve(self.bounds, self.curve, p)
        return _column_clamp(self.bounds, _strip_foot(self.bounds, p))


def _line_range(b: OctagonBounds, s: int) -> Tuple[int, int]:
    """x-range of the octagon's lattice points on x + y = s (empty when lo > hi)."""
    lo = max(-((b.d_hi - s) // 2), s - b.y_hi, b.x_lo)
    hi = min((s - b.d_lo) // 2, s - b.y_lo, b.x_hi)
    return lo, hi


def _strip_foot(b: OctagonBounds, p: Point) -> Point:
    """Perpendicular foot on the nearer extreme line, for points outside the strip."""
    x, y = p
    s = x + y
    if b.s_lo <= s <= b.s_hi:
        return p
    level = b.s_hi if s > b.s_hi else b.s_lo
    # floor picks the western foot when the perpendicular misses the lattice
    x = (level + x - y) // 2
    return Point(x, level - x)


def _slide_to_curve(b: OctagonBounds, curve: FrozenSet[Point], p: Point) -> Point:
    x, y = p
    s = x + y
    if s > b.s_hi or s < b.s_lo:
        foot = _strip_foot(b, p)
        level = foot.x + foot.y
        lo, hi = _line_range(b, level)
        u = _clamp(foot.x, lo, hi)
        return Point(u, level - u)
    lo, hi = _line_range(b, s)
    if lo <= x <= hi:
        return p
    if lo <= hi:
        u = lo if x < lo else hi
        end = Point(u, s - u)
        if end in curve:
            return end
    return _slide_to_curve(b, curve, Point(x - 1, y))


@dataclass(frozen=True)
class EdgeUnionScheme:
    """first on the closed side `side` of line, second elsewhere."""

    line: DigitalLine
    side: int
    first: "Retraction"
    second: "Retraction"

    name = "edge-union"

    def evaluate(self, p: Point) -> Point:
        if HalfPlane(self.line, self.side).contains(p):
            return self.first(p)
        return self.second(p)


@dataclass(frozen=True)
class WedgeScheme(EdgeUnionScheme):
    wedge_point: Point

    name = "wedge"


@dataclass(frozen=True)
class TableScheme:
    """
    Explicit values, looked up after an optional inner retraction. Without
    an inner retraction only points of the table's domain can be evaluated.
    """

    table: Mapping[Point, Point]
    inner: Optional["Retraction"] = None
    domain: Optional[frozenset] = None

    name = "table"

    def evaluate(self, p: Point) -> Point:
        q = self.inner(p) if self.inner is not None else p
        if self.inner is None and self.domain is not None and q not in self.domain:
            raise DomainError(f"{q} is outside the domain of the table")
        return Point(*self.table.get(q, q))


@dataclass(frozen=True)
class Retraction:
    """A map onto target that fixes target pointwise."""

    target: DigitalImage
    scheme: object = field(compare=False)

    def __call__(self, p: Sequence[int]) -> Point:
        return self.scheme.evaluate(Point(p[0], p[1]))

    @property
    def name(self) -> str:
        return self.scheme.name

    def table(self, window: Window) -> pd.DataFrame:
        """Values over a window as a DataFrame with columns x, y, rx, ry."""
        rows = [(p.x, p.y, *self(p)) for p in window]
        return pd.DataFrame(rows, columns=["x", "y", "rx", "ry"])


def build_axis_retraction(X: DigitalImage, orientation: Orientation = Orientation.VERTICAL) -> Retraction:
    """
    Retraction of the plane onto a convex disk by column (or row) clamping.

    Raises:
        NotConvexDisk: If X is not a convex disk
    """
    if not orientation.is_axis_parallel:
        raise DomainError(f"Axis retraction needs a horizontal or vertical orientation, got {orientation.value}")
    require_convex_disk(X)
    logger.info("Axis retraction (%s) onto %d points", orientation.value, len(X))
    return Retraction(X, AxisScheme(octagon_bounds(X), orientation))


def build_slanted_retraction(X: DigitalImage, slope: int = -1) -> Retraction:
    """
    Retraction of the plane onto a convex disk sandwiched by lines of slope
    -1 or +1.

    The nearest-point construction is tried first and kept when it verifies
    on a window around X. Otherwise (a side that is a single point, for
    instance) the strip projection is used and exact_sides is False.

    Raises:
        NotConvexDisk: If X is not a convex disk
    """
    if slope not in (-1, 1):
        raise DomainError(f"Slope must be -1 or +1, got {slope}")
    disk = require_convex_disk(X)
    bounds, curve = octagon_bounds(X), disk.curve.points
    if slope == 1:
        bounds, curve = _mirrored(bounds), frozenset(_mirror(p) for p in curve)

    r = Retraction(X, SlantedScheme(bounds, curve, slope, exact_sides=True))
    report = verify_retraction(r, Window.around(X, Window.DEFAULT_PAD + 1), check_boundary=True)
    if not report.passed:
        logger.debug("Nearest-point slanted retraction rejected: %s", report.message)
        r = Retraction(X, SlantedScheme(bounds, curve, slope, exact_sides=False))
    logger.info("Slanted retraction (slope %+d) onto %d points, exact sides: %s",
                slope, len(X), r.scheme.exact_sides)
    return r


def _component_retraction(X: DigitalImage, line: DigitalLine) -> Retraction:
    if line.orientation.is_axis_parallel:
        return build_axis_retraction(X, line.orientation)
    return build_slanted_retraction(X, -1 if line.orientation is Orientation.SLOPE_MINUS else 1)


def _check_glue(r: Retraction, line: DigitalLine) -> None:
    window = Window.around(r.target, Window.DEFAULT_PAD + 1)
    first, second = r.scheme.first, r.scheme.second
    for p in line.points_in(window):
        if first(p) != second(p):
            raise GlueMismatch(f"Pieces disagree on the separation line at {p}: {first(p)} vs {second(p)}")
    report = verify_retraction(r, window)
    if not report.passed:
        raise GlueMismatch(f"Glued map fails verification: {report.message}")


def _glue(target: DigitalImage, X1: DigitalImage, X2: DigitalImage, line: DigitalLine,
          make_scheme: Callable[..., EdgeUnionScheme]) -> Retraction:
    """
    Glue retractions of X1 and X2 along line. Along a slanted line the
    slanted pieces may disagree; axis pieces in both orientations are tried
    next, and the first gluing that passes its self-check is returned.

    Raises:
        GlueMismatch: The first failure, when no gluing passes
    """
    side = opposite_sides(line, X1.points, X2.points)
    builders: List[Callable[[DigitalImage], Retraction]] = [lambda X: _component_retraction(X, line)]
    if not line.orientation.is_axis_parallel:
        builders += [partial(build_axis_retraction, orientation=o)
                     for o in (Orientation.VERTICAL, Orientation.HORIZONTAL)]
    error: Optional[GlueMismatch] = None
    for build in builders:
        r = Retraction(target, make_scheme(line, side, build(X1), build(X2)))
        try:
            _check_glue(r, line)
            return r
        except GlueMismatch as e:
            logger.debug("Gluing %s pieces along %s rejected: %s", r.scheme.first.name, line, e)
            error = error or e
    raise error


def _convex_union_retraction(target: DigitalImage) -> Optional[Retraction]:
    """Axis retraction onto target when target is itself a convex disk."""
    try:
        require_convex_disk(target)
    except NotConvexDisk:
        return None
    r = Retraction(target, AxisScheme(octagon_bounds(target)))
    if not verify_retraction(r, Window.around(target, Window.DEFAULT_PAD + 1)).passed:
        return None
    return r


def build_edge_union_retraction(X1: DigitalImage, X2: DigitalImage) -> Retraction:
    """
    Retraction of the plane onto X1 union X2, where the convex disks X1 and
    X2 share an edge of both bounding curves.

    Pieces are glued along the line of separation. When the shared edge is
    slanted and no gluing passes, a union that is itself a convex disk gets
    an axis retraction instead. Slanted edge-unions whose union is not
    convex and whose pieces disagree remain out of reach.

    Raises:
        NotConvexDisk: If X1 or X2 is not a convex disk
        SharedSetNotEdge: If the shared set is not an edge of both curves
        GlueMismatch: If no construction passes its self-check
    """
    d1 = require_convex_disk(X1)
    d2 = require_convex_disk(X2)
    shared = X1.points & X2.points
    if len(shared) < 2:
        raise SharedSetNotEdge(f"The disks share {len(shared)} point(s), not an edge")
    try:
        classify_segment(shared)
    except SegmentError as e:
        raise SharedSetNotEdge(f"The shared set is not a segment: {e}") from e
    for label, disk in (("first", d1), ("second", d2)):
        if not disk.is_edge(shared):
            raise SharedSetNotEdge(f"The shared set is not a maximal segment of the {label} bounding curve")

    line = separation_line(X1, X2)
    target = X1.union(X2).with_kind(C2)
    try:
        r = _glue(target, X1, X2, line, EdgeUnionScheme)
    except GlueMismatch:
        if line.orientation.is_axis_parallel:
            raise
        r = _convex_union_retraction(target)
        if r is None:
            raise
        logger.info("Edge-union along %s retracted as one convex disk", line)
        return r
    logger.info("Edge-union retraction glued along %s with %s pieces", line, r.scheme.first.name)
    return r


class WedgeInfo(NamedTuple):
    point: Point
    endpoint_of_both: bool


def check_wedge(X1: DigitalImage, X2: DigitalImage) -> WedgeInfo:
    """
    Check that X1 and X2 meet in one point and touch nowhere else.

    Raises:
        IntersectionNotSingleton: If the images share zero or several points
        CrossAdjacency: With the first adjacent pair found away from the wedge point
    """
    shared = X1.points & X2.points
    if len(shared) != 1:
        raise IntersectionNotSingleton(f"The images share {len(shared)} points")
    (x0,) = shared
    rest2 = sorted(X2.points - shared)
    for p in sorted(X1.points - shared):
        for q in rest2:
            if adjacent(p, q):
                raise CrossAdjacency((p, q))

    endpoint = True
    for X in (X1, X2):
        try:
            endpoint = endpoint and x0 in decompose_disk(X).vertices
        except DigiplaneError:
            endpoint = False
    return WedgeInfo(x0, endpoint)


def build_wedge_retraction(X1: DigitalImage, X2: DigitalImage) -> Retraction:
    """
    Retraction of the plane onto the wedge of two convex disks.

    Raises:
        NotConvexDisk: If X1 or X2 is not a convex disk
        IntersectionNotSingleton, CrossAdjacency: If the images do not form a wedge
        NoSeparation: If no line of separation passes through the wedge point
        GlueMismatch: If the glued map fails its self-check
    """
    require_convex_disk(X1)
    require_convex_disk(X2)
    info = check_wedge(X1, X2)
    line = separation_line(X1, X2)
    r = _glue(X1.union(X2).with_kind(C2), X1, X2, line, partial(WedgeScheme, wedge_point=info.point))
    logger.info("Wedge retraction at %s glued along %s", info.point, line)
    return r


@dataclass(frozen=True)
class RetractionReport:
    passed: bool
    checked: int
    failure: str = ""
    counterexample: Tuple[Point, ...] = ()
    message: str = ""

    def __bool__(self) -> bool:
        return self.passed


def verify_retraction(r: Retraction, window: Window, min_pad: int = Window.DEFAULT_PAD,
                      check_boundary: bool = False) -> RetractionReport:
    """
    Check r on every point of window.

    Args:
        r: The retraction to check
        window: Must contain the target's bounding box grown by min_pad
        min_pad: Required margin around the target
        check_boundary: Also require that points off the interior of the
            target disk land on its bounding curve

    Raises:
        WindowTooSmall: If the window is too small
    """
    if not window.contains_box(r.target.bounding_box(), min_pad):
        raise WindowTooSmall(f"Window {window} does not contain the target grown by {min_pad}")
    return verify_retraction_on(r, window.as_image(C2), check_boundary)


def verify_retraction_on(r, domain: DigitalImage, check_boundary: bool = False) -> RetractionReport:
    """
    Check that r fixes the target, maps domain into the target, and maps
    adjacent points to adjacent or equal points.
    """
    target = r.target
    values: Dict[Point, Point] = {p: Point(*r(p)) for p in domain.sorted_points()}
    checked = len(values)

    for p, q in values.items():
        if p in target and q != p:
            return RetractionReport(False, checked, "identity", (p,), f"{p} is in the target but maps to {q}")
    for p, q in values.items():
        if q not in target:
            return RetractionReport(False, checked, "containment", (p,), f"{p} maps to {q}, outside the target")
    for p, q in domain.edges():
        if not adjacent_or_equal(values[p], values[q], target.kind):
            return RetractionReport(False, checked, "continuity", (p, q),
                                    f"{p} ~ {q} but {values[p]} and {values[q]} are not adjacent")
    if check_boundary:
        disk = decompose_disk(target)
        for p, q in values.items():
            if p not in disk.interior and q not in disk.curve.points:
                return RetractionReport(False, checked, "boundary", (p,),
                                        f"{p} is off the interior but maps to {q}, off the bounding curve")
    return RetractionReport(True, checked)
