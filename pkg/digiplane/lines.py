"""
Digital segments, digital lines and half-planes.

A digital line is horizontal, vertical or of slope +1 or -1. Lines are
infinite, so they are stored as (orientation, offset) and only enumerated
inside a finite Window.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Optional, Sequence, Tuple

from .core import DigitalImage, Point, Window, adjacent
from .exceptions import BadSlope, NoSeparation, NotCollinear, NotConnected, SegmentError

logger = logging.getLogger(__name__)


class Orientation(Enum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"
    SLOPE_PLUS = "slope+1"
    SLOPE_MINUS = "slope-1"

    @property
    def step(self) -> Point:
        """Unit step along a line of this orientation."""
        return _STEPS[self]

    @property
    def is_axis_parallel(self) -> bool:
        return self in (Orientation.HORIZONTAL, Orientation.VERTICAL)

    @classmethod
    def of_step(cls, dx: int, dy: int) -> "Orientation":
        if dy == 0 and dx != 0:
            return cls.HORIZONTAL
        if dx == 0 and dy != 0:
            return cls.VERTICAL
        if dx == dy and dx != 0:
            return cls.SLOPE_PLUS
        if dx == -dy and dx != 0:
            return cls.SLOPE_MINUS
        raise BadSlope(f"Step ({dx},{dy}) has no digital line orientation")


_STEPS = {
    Orientation.HORIZONTAL: Point(1, 0),
    Orientation.VERTICAL: Point(0, 1),
    Orientation.SLOPE_PLUS: Point(1, 1),
    Orientation.SLOPE_MINUS: Point(1, -1),
}

# Order in which separation_line tries orientations.
SEPARATION_ORDER = (
    Orientation.HORIZONTAL,
    Orientation.VERTICAL,
    Orientation.SLOPE_MINUS,
    Orientation.SLOPE_PLUS,
)


def linear_form(orientation: Orientation, p: Sequence[int]) -> int:
    """The integer form whose level sets are the lines of an orientation."""
    x, y = p[0], p[1]
    if orientation is Orientation.HORIZONTAL:
        return y
    if orientation is Orientation.VERTICAL:
        return x
    if orientation is Orientation.SLOPE_PLUS:
        return y - x
    return x + y


@dataclass(frozen=True)
class DigitalLine:
    """y=b, x=b, y-x=b or x+y=b depending on orientation."""

    orientation: Orientation
    offset: int

    @classmethod
    def through(cls, orientation: Orientation, p: Sequence[int]) -> "DigitalLine":
        return cls(orientation, linear_form(orientation, p))

    def form(self, p: Sequence[int]) -> int:
        return linear_form(self.orientation, p)

    def contains(self, p: Sequence[int]) -> bool:
        return self.form(p) == self.offset

    __contains__ = contains

    def points_in(self, window: Window) -> List[Point]:
        return [p for p in window if self.contains(p)]

    def __str__(self) -> str:
        lhs = {
            Orientation.HORIZONTAL: "y",
            Orientation.VERTICAL: "x",
            Orientation.SLOPE_PLUS: "y-x",
            Orientation.SLOPE_MINUS: "x+y",
        }[self.orientation]
        return f"{lhs}={self.offset}"


@dataclass(frozen=True)
class HalfPlane:
    """A line together with one closed side of it (side is +1 or -1)."""

    line: DigitalLine
    side: int

    def __post_init__(self):
        if self.side not in (1, -1):
            raise ValueError(f"side must be +1 or -1, got {self.side}")

    def contains(self, p: Sequence[int]) -> bool:
        delta = self.line.form(p) - self.line.offset
        return delta == 0 or (delta > 0) == (self.side > 0)

    __contains__ = contains

    def opposite(self) -> "HalfPlane":
        return HalfPlane(self.line, -self.side)


def half_plane_contains(h: HalfPlane, p: Sequence[int]) -> bool:
    return h.contains(p)


@dataclass(frozen=True)
class Segment:
    """
    A digital segment. orientation is None for a single point, which is the
    degenerate segment.
    """

    orientation: Optional[Orientation]
    start: Point
    end: Point
    points: Tuple[Point, ...]

    @property
    def is_degenerate(self) -> bool:
        return self.orientation is None

    @property
    def endpoints(self) -> Tuple[Point, Point]:
        return self.start, self.end

    def line(self) -> DigitalLine:
        if self.orientation is None:
            raise SegmentError("A single point lies on four lines")
        return DigitalLine.through(self.orientation, self.start)

    def __len__(self) -> int:
        return len(self.points)


def classify_segment(points: Iterable[Sequence[int]]) -> Segment:
    """
    Recognize a digital segment.

    Args:
        points: Nonempty collection of lattice points (duplicates ignored)

    Returns:
        Segment with its orientation and its two extreme points

    Raises:
        NotCollinear: Points do not lie on one Euclidean line
        BadSlope: Collinear, but the slope is not 0, infinite or +-1
        NotConnected: The points leave a gap along their line
    """
    pts = sorted({Point(p[0], p[1]) for p in points})
    if not pts:
        raise SegmentError("A segment needs at least one point")
    first = pts[0]
    if len(pts) == 1:
        return Segment(None, first, first, (first,))

    dx, dy = pts[1] - first
    for p in pts[2:]:
        ex, ey = p - first
        if dx * ey - dy * ex != 0:
            raise NotCollinear(f"{p} is not on the line through {first} and {pts[1]}")
    if not (dx == 0 or dy == 0 or abs(dx) == abs(dy)):
        raise BadSlope(f"Slope {dy}/{dx} is not 0, infinite or +-1")
    orientation = Orientation.of_step(dx, dy)

    # Lexicographic order runs along the line for all four orientations.
    for p, q in zip(pts, pts[1:]):
        if not adjacent(p, q):
            raise NotConnected(f"Gap between {p} and {q}")
    return Segment(orientation, pts[0], pts[-1], tuple(pts))


def sandwich_lines(X: DigitalImage, orientation: Orientation) -> Tuple[DigitalLine, DigitalLine]:
    """
    The two extreme lines of an orientation that meet the convex disk X.

    Raises:
        NotConvexDisk: If X is not a convex disk
    """
    from .convexity import require_convex_disk

    require_convex_disk(X)
    values = [linear_form(orientation, p) for p in X.points]
    return DigitalLine(orientation, min(values)), DigitalLine(orientation, max(values))


def opposite_sides(line: DigitalLine, X1: Iterable[Sequence[int]], X2: Iterable[Sequence[int]]) -> Optional[int]:
    """
    Side of line holding X1 when X1 and X2 lie on opposite closed sides,
    otherwise None.
    """
    d1 = [line.form(p) - line.offset for p in X1]
    d2 = [line.form(p) - line.offset for p in X2]
    if all(v >= 0 for v in d1) and all(v <= 0 for v in d2):
        return 1
    if all(v <= 0 for v in d1) and all(v >= 0 for v in d2):
        return -1
    return None


def is_separation_line(line: DigitalLine, X1: DigitalImage, X2: DigitalImage) -> bool:
    """
    Direct check of the line-of-separation definition.

    With a single shared point the line must meet X1 union X2 in exactly that
    point; otherwise the shared set must lie on the line.
    """
    shared = X1.points & X2.points
    if not shared:
        return False
    if opposite_sides(line, X1.points, X2.points) is None:
        return False
    if len(shared) == 1:
        on_line = {p for p in X1.points | X2.points if line.contains(p)}
        return on_line == shared
    return all(line.contains(p) for p in shared)


def separation_line(X1: DigitalImage, X2: DigitalImage) -> DigitalLine:
    """
    Find a line of separation for an edge-union or a wedge.

    Orientations are tried in the order horizontal, vertical, slope -1,
    slope +1 and the first line that works is returned.

    Raises:
        NoSeparation: If no orientation gives a line of separation
    """
    shared = X1.points & X2.points
    if not shared:
        raise NoSeparation("The images do not meet")
    if len(shared) > 1:
        try:
            segment = classify_segment(shared)
        except SegmentError as e:
            raise NoSeparation(f"Shared set is not a segment: {e}") from e
        candidates = [segment.orientation]
    else:
        candidates = list(SEPARATION_ORDER)
    anchor = min(shared)

    for orientation in SEPARATION_ORDER:
        if orientation not in candidates:
            continue
        line = DigitalLine.through(orientation, anchor)
        if is_separation_line(line, X1, X2):
            logger.debug("Separation line %s", line)
            return line
    raise NoSeparation("No horizontal, vertical or diagonal line separates the images")
