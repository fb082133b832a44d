"""
Bounding curves, disks and digital convexity.

A digital disk is decomposed by tracing the points that touch the unbounded
c1-component of its complement. The curve is read counterclockwise from its
lexicographically least point, split into maximal straight runs (the edges),
and compared with the Euclidean convex hull of the disk.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from .core import C1, DigitalImage, Point, Window, components
from .exceptions import (DigiplaneError, DomainError, EmptyInput, HoleDetected, NotAClosedCurve, NotAVertex,
                         NotConvexDisk, SegmentError)
from .lines import Orientation, Segment, classify_segment

logger = logging.getLogger(__name__)

# Unit steps by angle, 45 degrees apart, counterclockwise from east.
DIRECTIONS: Tuple[Point, ...] = (
    Point(1, 0), Point(1, 1), Point(0, 1), Point(-1, 1),
    Point(-1, 0), Point(-1, -1), Point(0, -1), Point(1, -1),
)
_DIRECTION_INDEX = {d: i for i, d in enumerate(DIRECTIONS)}


@dataclass(frozen=True)
class ClosedCurve:
    """Pairwise distinct points, each c2-adjacent to the next (cyclically)."""

    cycle: Tuple[Point, ...]

    def __len__(self) -> int:
        return len(self.cycle)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.cycle)

    def __getitem__(self, i: int) -> Point:
        return self.cycle[i % len(self.cycle)]

    @property
    def points(self) -> FrozenSet[Point]:
        return frozenset(self.cycle)

    def steps(self) -> List[Point]:
        """steps()[i] leads from point i to point i+1."""
        return [self[i + 1] - self[i] for i in range(len(self))]

    def signed_area2(self) -> int:
        """Twice the signed shoelace area (positive when counterclockwise)."""
        return sum(p.x * q.y - q.x * p.y for p, q in zip(self.cycle, self.cycle[1:] + self.cycle[:1]))


@dataclass(frozen=True)
class Edge:
    orientation: Orientation
    start: Point
    end: Point
    points: Tuple[Point, ...]

    @property
    def endpoints(self) -> Tuple[Point, Point]:
        return self.start, self.end


@dataclass(frozen=True)
class DiskReport:
    disk: DigitalImage
    curve: ClosedCurve
    interior: FrozenSet[Point]
    edges: List[Edge]
    vertices: List[Point]
    angles: Dict[Point, int] = field(default_factory=dict)
    turning: int = 360

    def is_edge(self, points: Iterable[Sequence[int]]) -> bool:
        """True if points are exactly the points of one edge."""
        wanted = {Point(*p) for p in points}
        return any(set(e.points) == wanted for e in self.edges)

    def edges_at(self, v: Point) -> List[Edge]:
        return [e for e in self.edges if v in e.endpoints]


class Classification(Enum):
    SINGLE_POINT = "SinglePoint"
    SEGMENT = "Segment"
    CONVEX_DISK = "ConvexDisk"
    NOT_CONVEX = "NotConvex"


@dataclass(frozen=True)
class ConvexityReport:
    classification: Classification
    hull: List[Point]
    segment: Optional[Segment] = None
    disk: Optional[DiskReport] = None
    reason: str = ""

    @property
    def is_convex(self) -> bool:
        return self.classification is not Classification.NOT_CONVEX

    @property
    def is_convex_disk(self) -> bool:
        return self.classification is Classification.CONVEX_DISK

    def __str__(self) -> str:
        if self.reason:
            return f"{self.classification.value}: {self.reason}"
        return self.classification.value


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def hull_vertices(points: Iterable[Sequence[int]]) -> List[Point]:
    """
    Vertices of the Euclidean convex hull, counterclockwise from the least
    point. Points in the middle of hull edges are not vertices.
    """
    pts = sorted({Point(p[0], p[1]) for p in points})
    if not pts:
        raise EmptyInput("Hull of an empty set")
    if len(pts) == 1:
        return pts

    lower: List[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: List[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _exterior(D: DigitalImage) -> FrozenSet[Point]:
    """
    The unbounded c1-component of the complement, cut to a padded window.

    Raises:
        HoleDetected: If the complement has a bounded component
    """
    window = Window.around(D, Window.DEFAULT_PAD)
    complement = DigitalImage(frozenset(p for p in window if p not in D.points), C1)
    parts = components(complement)
    corner = Point(window.x_min, window.y_min)
    exterior = next(c for c in parts if corner in c)
    holes = [c for c in parts if c is not exterior]
    if holes:
        raise HoleDetected(f"The complement has a bounded component containing {min(holes[0])}")
    return exterior


def _trace(D: DigitalImage, start: Point) -> List[Point]:
    """
    Moore-neighbor tracing of the outer border of D.

    The walk is a deterministic function of the state (point, backtrack), so
    it stops on the first repeated state and returns that cycle.
    """
    state = (start, start + (-1, 0))
    seen: Dict[Tuple[Point, Point], int] = {}
    visited: List[Point] = []
    while state not in seen:
        seen[state] = len(visited)
        p, back = state
        visited.append(p)
        k = _DIRECTION_INDEX[back - p]
        previous = back
        for i in range(1, 9):
            q = p + DIRECTIONS[(k + i) % 8]
            if q in D.points:
                state = (q, previous)
                break
            previous = q
        else:
            raise NotAClosedCurve(f"{p} has no neighbor in the image")
    return visited[seen[state]:]


def decompose_disk(D: DigitalImage) -> DiskReport:
    """
    Split a digital disk into its minimal bounding curve and interior.

    Returns:
        DiskReport with the counterclockwise curve, interior, edges,
        vertices and interior angles

    Raises:
        EmptyInput: D has no points
        HoleDetected: The complement of D has a bounded component
        NotAClosedCurve: The border points do not form a simple closed curve
    """
    if not D:
        raise EmptyInput("A disk needs at least one point")
    exterior = _exterior(D)
    border = frozenset(p for p in D.points if any(p + d in exterior for d in C1.offsets))
    if len(border) < 3:
        raise NotAClosedCurve(f"A closed curve needs at least 3 points, found {len(border)}")

    trace = _trace(D, min(D.points))
    if len(set(trace)) != len(trace):
        repeated = min(p for p in trace if trace.count(p) > 1)
        raise NotAClosedCurve(f"The border passes through {repeated} twice")
    if set(trace) != border:
        raise NotAClosedCurve("The border does not form a single closed curve")

    curve = ClosedCurve(tuple(trace))
    if curve.signed_area2() < 0:
        trace = trace[::-1]
    first = trace.index(min(trace))
    curve = ClosedCurve(tuple(trace[first:] + trace[:first]))

    edges, vertices, angles, turning = _edges(curve)
    logger.debug("Disk with %d curve points, %d vertices", len(curve), len(vertices))
    return DiskReport(
        disk=D,
        curve=curve,
        interior=D.points - curve.points,
        edges=edges,
        vertices=vertices,
        angles=angles,
        turning=turning,
    )


def _turn(step_in: Point, step_out: Point) -> int:
    """Left turn in degrees, in (-180, 180]."""
    turn = ((_DIRECTION_INDEX[step_out] - _DIRECTION_INDEX[step_in]) % 8) * 45
    return turn - 360 if turn > 180 else turn


def _edges(curve: ClosedCurve) -> Tuple[List[Edge], List[Point], Dict[Point, int], int]:
    steps = curve.steps()
    m = len(curve)
    corners = [i for i in range(m) if steps[i - 1] != steps[i]]
    angles = {curve[i]: 180 - _turn(steps[i - 1], steps[i]) for i in corners}
    turning = sum(_turn(steps[i - 1], steps[i]) for i in corners)

    edges = []
    for j, i in enumerate(corners):
        nxt = corners[(j + 1) % len(corners)]
        length = (nxt - i) % m or m
        pts = tuple(curve[i + t] for t in range(length + 1))
        edges.append(Edge(Orientation.of_step(*steps[i]), pts[0], pts[-1], pts))
    return edges, [curve[i] for i in corners], angles, turning


def interior_angle(report: DiskReport, v: Sequence[int]) -> int:
    """
    Angle inside the disk between the two edges meeting at vertex v.

    Raises:
        NotAVertex: If v is not a vertex of the curve
    """
    v = Point(*v)
    if v not in report.angles:
        raise NotAVertex(f"{v} is not a vertex of the bounding curve")
    return report.angles[v]


def is_convex(Y: DigitalImage) -> ConvexityReport:
    """Classify Y as a single point, a segment, a convex disk, or not convex."""
    if not Y:
        raise EmptyInput("Convexity of an empty image")
    hull = hull_vertices(Y.points)
    if len(Y) == 1:
        return ConvexityReport(Classification.SINGLE_POINT, hull)
    try:
        segment = classify_segment(Y.points)
        return ConvexityReport(Classification.SEGMENT, hull, segment=segment)
    except SegmentError:
        pass

    try:
        disk = decompose_disk(Y)
    except DigiplaneError as e:
        return ConvexityReport(Classification.NOT_CONVEX, hull, reason=str(e))
    if set(disk.vertices) != set(hull):
        extra = sorted(set(disk.vertices) ^ set(hull))
        return ConvexityReport(Classification.NOT_CONVEX, hull, disk=disk,
                               reason=f"Curve vertices differ from hull vertices at {extra[0]}")
    return ConvexityReport(Classification.CONVEX_DISK, hull, disk=disk)


def require_convex_disk(X: DigitalImage) -> DiskReport:
    """
    DiskReport of X, which must be a convex disk equal to the lattice points
    of its bounding octagon.

    Raises:
        NotConvexDisk: Otherwise
    """
    if not X:
        raise NotConvexDisk("Empty image")
    report = is_convex(X)
    if not report.is_convex_disk:
        raise NotConvexDisk(f"Not a convex disk ({report})")
    bounds = octagon_bounds(X)
    if len(bounds.lattice_points()) != len(X):
        raise NotConvexDisk("The disk differs from the lattice points of its bounding octagon")
    return report.disk


@dataclass(frozen=True)
class OctagonBounds:
    """Extreme values of y, x, y-x and x+y over a point set."""

    x_lo: int
    x_hi: int
    y_lo: int
    y_hi: int
    d_lo: int
    d_hi: int
    s_lo: int
    s_hi: int

    def contains(self, p: Sequence[int]) -> bool:
        x, y = p[0], p[1]
        return (self.x_lo <= x <= self.x_hi and self.y_lo <= y <= self.y_hi
                and self.d_lo <= y - x <= self.d_hi and self.s_lo <= x + y <= self.s_hi)

    __contains__ = contains

    def column(self, x: int) -> Optional[Tuple[int, int]]:
        """The y-interval of the octagon at abscissa x, or None."""
        lo = max(self.y_lo, self.s_lo - x, x + self.d_lo)
        hi = min(self.y_hi, self.s_hi - x, x + self.d_hi)
        if not self.x_lo <= x <= self.x_hi or lo > hi:
            return None
        return lo, hi

    def lattice_points(self) -> FrozenSet[Point]:
        pts = set()
        for x in range(self.x_lo, self.x_hi + 1):
            interval = self.column(x)
            if interval:
                pts.update(Point(x, y) for y in range(interval[0], interval[1] + 1))
        return frozenset(pts)


def octagon_bounds(X: DigitalImage) -> OctagonBounds:
    if not X:
        raise DomainError("Octagon of an empty image")
    xs = [p.x for p in X.points]
    ys = [p.y for p in X.points]
    ds = [p.y - p.x for p in X.points]
    ss = [p.x + p.y for p in X.points]
    return OctagonBounds(min(xs), max(xs), min(ys), max(ys), min(ds), max(ds), min(ss), max(ss))
