"""
Lattice points, adjacency relations and digital images in the plane.

Everything else in digiplane is built on the types defined here.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from types import MappingProxyType
from typing import (Callable, FrozenSet, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Sequence,
                    Tuple, Union)

import networkx as nx

from .exceptions import DomainError

logger = logging.getLogger(__name__)


class Point(NamedTuple):
    """A lattice point. Tuple ordering is the canonical (x, then y) order."""

    x: int
    y: int

    @property
    def p1(self) -> int:
        return self.x

    @property
    def p2(self) -> int:
        return self.y

    def __add__(self, other):  # type: ignore[override]
        return Point(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return Point(self.x - other[0], self.y - other[1])

    def __neg__(self):
        return Point(-self.x, -self.y)

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


class AdjacencyKind(Enum):
    """The c_u adjacencies of the digital plane."""

    C1 = 1
    C2 = 2

    @property
    def u(self) -> int:
        return self.value

    @property
    def label(self) -> str:
        return f"c{self.value}"

    @property
    def offsets(self) -> Tuple[Tuple[int, int], ...]:
        return _C1_OFFSETS if self is AdjacencyKind.C1 else _C2_OFFSETS

    @classmethod
    def from_label(cls, label: str) -> "AdjacencyKind":
        for kind in cls:
            if kind.label == str(label).strip().lower():
                return kind
        raise DomainError(f"Unknown adjacency: {label!r} (expected 'c1' or 'c2')")


_C1_OFFSETS = ((-1, 0), (0, -1), (0, 1), (1, 0))
_C2_OFFSETS = ((-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1))

C1 = AdjacencyKind.C1
C2 = AdjacencyKind.C2


def adjacent(p: Sequence[int], q: Sequence[int], kind: AdjacencyKind = C2) -> bool:
    """
    c_u adjacency for integer tuples of any length.

    p and q are adjacent when they differ, at most u coordinates differ, and
    every differing coordinate differs by exactly 1.
    """
    if len(p) != len(q):
        raise DomainError("Points must have the same dimension")
    differing = 0
    for a, b in zip(p, q):
        if a != b:
            if abs(a - b) != 1:
                return False
            differing += 1
    return 0 < differing <= kind.u


def adjacent_or_equal(p: Sequence[int], q: Sequence[int], kind: AdjacencyKind = C2) -> bool:
    return tuple(p) == tuple(q) or adjacent(p, q, kind)


def neighbors(p: Point, kind: AdjacencyKind = C2) -> List[Point]:
    """Lattice neighbors of p in canonical order."""
    return [Point(p[0] + dx, p[1] + dy) for dx, dy in kind.offsets]


def chessboard_distance(p: Sequence[int], q: Sequence[int]) -> int:
    return max(abs(p[0] - q[0]), abs(p[1] - q[1]))


@dataclass(frozen=True)
class DigitalImage:
    """A finite set of lattice points together with an adjacency kind."""

    points: FrozenSet[Point]
    kind: AdjacencyKind = C2

    @classmethod
    def of(cls, points: Iterable[Sequence[int]], kind: AdjacencyKind = C2) -> "DigitalImage":
        return cls(frozenset(Point(int(p[0]), int(p[1])) for p in points), kind)

    def __contains__(self, p) -> bool:
        return tuple(p) in self.points

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.sorted_points())

    def __bool__(self) -> bool:
        return bool(self.points)

    def sorted_points(self) -> List[Point]:
        return sorted(self.points)

    def with_kind(self, kind: AdjacencyKind) -> "DigitalImage":
        return DigitalImage(self.points, kind)

    def bounding_box(self) -> Tuple[int, int, int, int]:
        """(xmin, xmax, ymin, ymax) of a nonempty image."""
        if not self.points:
            raise DomainError("Empty image has no bounding box")
        xs = [p.x for p in self.points]
        ys = [p.y for p in self.points]
        return min(xs), max(xs), min(ys), max(ys)

    def union(self, other: "DigitalImage") -> "DigitalImage":
        return DigitalImage(self.points | other.points, self.kind)

    def intersection(self, other: "DigitalImage") -> "DigitalImage":
        return DigitalImage(self.points & other.points, self.kind)

    def difference(self, other: Iterable[Sequence[int]]) -> "DigitalImage":
        removed = {Point(*p) for p in other}
        return DigitalImage(self.points - removed, self.kind)

    def translate(self, dx: int, dy: int) -> "DigitalImage":
        return DigitalImage(frozenset(Point(p.x + dx, p.y + dy) for p in self.points), self.kind)

    def transform(self, fn: Callable[[Point], Point]) -> "DigitalImage":
        return DigitalImage(frozenset(Point(*fn(p)) for p in self.points), self.kind)

    def neighbors_in(self, p: Point) -> List[Point]:
        return [q for q in neighbors(p, self.kind) if q in self.points]

    def edges(self) -> Iterator[Tuple[Point, Point]]:
        """Each adjacent pair once, ordered (smaller, larger)."""
        for p in self.sorted_points():
            for q in neighbors(p, self.kind):
                if q > p and q in self.points:
                    yield p, q

    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.sorted_points())
        g.add_edges_from(self.edges())
        return g


@dataclass(frozen=True)
class SelfMap:
    """A total map from an image to itself, given as a table."""

    domain: DigitalImage
    table: Mapping[Point, Point]

    def __post_init__(self):
        table = {Point(*k): Point(*v) for k, v in self.table.items()}
        missing = self.domain.points - table.keys()
        if missing:
            raise DomainError(f"Map is not total: no value for {min(missing)}")
        extra = table.keys() - self.domain.points
        if extra:
            raise DomainError(f"Map has a value for {min(extra)}, which is outside the domain")
        outside = [v for v in table.values() if v not in self.domain.points]
        if outside:
            raise DomainError(f"Map value {min(outside)} lies outside the domain")
        object.__setattr__(self, "table", MappingProxyType(table))

    def __hash__(self) -> int:
        return hash((self.domain, frozenset(self.table.items())))

    def __call__(self, p: Sequence[int]) -> Point:
        try:
            return self.table[Point(*p)]
        except KeyError:
            raise DomainError(f"{tuple(p)} is not in the domain") from None

    def items(self) -> List[Tuple[Point, Point]]:
        return sorted(self.table.items())

    @classmethod
    def identity(cls, domain: DigitalImage) -> "SelfMap":
        return cls(domain, {p: p for p in domain.points})

    def compose(self, other: "SelfMap") -> "SelfMap":
        """self after other."""
        if other.domain.points != self.domain.points:
            raise DomainError("Maps have different domains")
        return SelfMap(self.domain, {p: self.table[other.table[p]] for p in self.domain.points})

    def conjugate(self, fn: Callable[[Point], Point]) -> "SelfMap":
        """The map fn . self . fn^-1 on the transformed domain (fn must be injective)."""
        image = self.domain.transform(fn)
        return SelfMap(image, {Point(*fn(p)): Point(*fn(q)) for p, q in self.table.items()})


MapLike = Union[SelfMap, Mapping[Point, Point], Callable[[Point], Point]]


def _evaluator(f: MapLike) -> Callable[[Point], Point]:
    if isinstance(f, Mapping):
        return lambda p: Point(*f[p])
    return lambda p: Point(*f(p))


def closed_neighborhood(X: DigitalImage, p: Sequence[int]) -> FrozenSet[Point]:
    """N*(X, kappa, p): p together with its neighbors inside X."""
    p = Point(*p)
    if p not in X:
        raise DomainError(f"{p} is not a point of the image")
    return frozenset([p, *X.neighbors_in(p)])


def components(X: DigitalImage) -> List[FrozenSet[Point]]:
    """kappa-components of X, ordered by their least point."""
    parts = [frozenset(c) for c in nx.connected_components(X.graph())]
    return sorted(parts, key=min)


def is_connected(X: DigitalImage) -> bool:
    return len(components(X)) <= 1


def is_continuous(f: MapLike, source: DigitalImage, target: Optional[DigitalImage] = None) -> bool:
    """
    Local continuity test: adjacent points of source must map to adjacent or
    equal points of target.

    Raises:
        DomainError: If f sends a point of source outside target
    """
    target = target if target is not None else source
    value = _evaluator(f)
    images = {}
    for p in source.sorted_points():
        q = value(p)
        if q not in target:
            raise DomainError(f"Value {q} of {p} lies outside the target image")
        images[p] = q
    for p, q in source.edges():
        if not adjacent_or_equal(images[p], images[q], target.kind):
            logger.debug("Continuity fails at %s -> %s, %s -> %s", p, images[p], q, images[q])
            return False
    return True


def no_common_neighbor(X: DigitalImage, p: Sequence[int], q: Sequence[int]) -> bool:
    """True if no point of X is adjacent-or-equal to both p and q."""
    return not any(
        adjacent_or_equal(y, p, X.kind) and adjacent_or_equal(y, q, X.kind) for y in X.points
    )


# The eight symmetries of the square lattice, as functions on points.
LATTICE_SYMMETRIES: Tuple[Callable[[Point], Point], ...] = (
    lambda p: Point(p[0], p[1]),
    lambda p: Point(-p[1], p[0]),
    lambda p: Point(-p[0], -p[1]),
    lambda p: Point(p[1], -p[0]),
    lambda p: Point(-p[0], p[1]),
    lambda p: Point(p[0], -p[1]),
    lambda p: Point(p[1], p[0]),
    lambda p: Point(-p[1], -p[0]),
)


@dataclass(frozen=True)
class Window:
    """An inclusive rectangle of lattice points."""

    x_min: int
    x_max: int
    y_min: int
    y_max: int

    DEFAULT_PAD = 2

    def __post_init__(self):
        if self.x_min > self.x_max or self.y_min > self.y_max:
            raise DomainError(f"Empty window {self}")

    @classmethod
    def around(cls, image: DigitalImage, pad: int = DEFAULT_PAD) -> "Window":
        """Bounding box of image grown by pad on every side."""
        x0, x1, y0, y1 = image.bounding_box()
        return cls(x0 - pad, x1 + pad, y0 - pad, y1 + pad)

    @classmethod
    def parse(cls, text: str) -> "Window":
        """Parse 'xmin,xmax,ymin,ymax'."""
        try:
            x0, x1, y0, y1 = (int(v) for v in text.split(","))
        except ValueError:
            raise DomainError(f"Window must be 'xmin,xmax,ymin,ymax', got {text!r}") from None
        return cls(x0, x1, y0, y1)

    def __contains__(self, p) -> bool:
        return self.x_min <= p[0] <= self.x_max and self.y_min <= p[1] <= self.y_max

    def __iter__(self) -> Iterator[Point]:
        for x in range(self.x_min, self.x_max + 1):
            for y in range(self.y_min, self.y_max + 1):
                yield Point(x, y)

    def __len__(self) -> int:
        return self.width * self.height

    @property
    def width(self) -> int:
        return self.x_max - self.x_min + 1

    @property
    def height(self) -> int:
        return self.y_max - self.y_min + 1

    def contains_box(self, box: Tuple[int, int, int, int], pad: int = 0) -> bool:
        x0, x1, y0, y1 = box
        return (self.x_min <= x0 - pad and x1 + pad <= self.x_max
                and self.y_min <= y0 - pad and y1 + pad <= self.y_max)

    def frame(self) -> List[Point]:
        return [p for p in self if p.x in (self.x_min, self.x_max) or p.y in (self.y_min, self.y_max)]

    def as_image(self, kind: AdjacencyKind = C2) -> DigitalImage:
        return DigitalImage(frozenset(self), kind)

    def __str__(self) -> str:
        return f"{self.x_min},{self.x_max},{self.y_min},{self.y_max}"
