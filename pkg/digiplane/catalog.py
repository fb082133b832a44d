"""
Named example images and their retractions.

Every generator is deterministic. CATALOG maps the names accepted by the
command line to zero-argument generators of the images.
"""

import logging
from typing import Callable, Dict, List, NamedTuple, Sequence, Tuple

from .core import C1, C2, AdjacencyKind, DigitalImage, Point, SelfMap
from .exceptions import DomainError, UnsupportedExample
from .retraction import Retraction, TableScheme, build_axis_retraction

logger = logging.getLogger(__name__)


def make_rectangle(x0: int, x1: int, y0: int, y1: int, kind: AdjacencyKind = C2) -> DigitalImage:
    """All lattice points of [x0, x1] x [y0, y1]."""
    if x0 > x1 or y0 > y1:
        raise DomainError(f"Empty rectangle [{x0},{x1}]x[{y0},{y1}]")
    return DigitalImage.of(((x, y) for x in range(x0, x1 + 1) for y in range(y0, y1 + 1)), kind)


def make_lattice_triangle(a: Sequence[int], b: Sequence[int], c: Sequence[int],
                          kind: AdjacencyKind = C2) -> DigitalImage:
    """Lattice points of the closed Euclidean triangle abc."""
    corners = [Point(*a), Point(*b), Point(*c)]
    xs = [p.x for p in corners]
    ys = [p.y for p in corners]

    def side(o: Point, d: Point, p: Tuple[int, int]) -> int:
        return (d.x - o.x) * (p[1] - o.y) - (d.y - o.y) * (p[0] - o.x)

    signs = side(corners[0], corners[1], corners[2])
    if signs == 0:
        raise DomainError("Triangle corners are collinear")
    pts = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            tests = [side(corners[i], corners[(i + 1) % 3], (x, y)) for i in range(3)]
            if all(t * signs >= 0 for t in tests):
                pts.append((x, y))
    return DigitalImage.of(pts, kind)


def make_fig1_triangle() -> DigitalImage:
    """Lattice points of the triangle with corners (0,0), (4,0), (4,3)."""
    return make_lattice_triangle((0, 0), (4, 0), (4, 3))


def make_fig1_disk() -> DigitalImage:
    """The triangle above without its corner (0,0), which is a convex disk."""
    return make_fig1_triangle().difference([(0, 0)])


def make_block_u(n: int) -> DigitalImage:
    """[-n, n]^2 without the slot {0} x [1, n]."""
    if n <= 2:
        raise DomainError(f"Block U needs n > 2, got {n}")
    return make_rectangle(-n, n, -n, n).difference((0, y) for y in range(1, n + 1))


def make_diamond_disk(n: int = 2) -> DigitalImage:
    """{|x| + |y| <= n}."""
    return DigitalImage.of((x, y) for x in range(-n, n + 1) for y in range(-n, n + 1) if abs(x) + abs(y) <= n)


def make_scc_diamond(k: int) -> DigitalImage:
    """A simple closed c2-curve with k points (k = 4 or 8)."""
    if k == 4:
        return DigitalImage.of([(0, 0), (1, 1), (2, 0), (1, -1)])
    if k == 8:
        return make_rectangle(-1, 1, -1, 1).difference([(0, 0)])
    raise UnsupportedExample(f"No simple closed curve with {k} points in the catalog (use 4 or 8)")


def make_c1_block() -> DigitalImage:
    """[0, 1]^2 under c1 adjacency."""
    return make_rectangle(0, 1, 0, 1, C1)


def make_edge_union_triangles() -> Tuple[DigitalImage, DigitalImage]:
    """Two triangles of [0, 2]^2 sharing the diagonal edge from (0,0) to (2,2)."""
    return (
        make_lattice_triangle((0, 0), (2, 2), (0, 2)),
        make_lattice_triangle((0, 0), (2, 2), (2, 0)),
    )


def make_wedge_45_45() -> Tuple[DigitalImage, DigitalImage]:
    """Two triangles meeting only at their 45 degree corners at the origin."""
    return (
        make_lattice_triangle((0, 0), (2, 2), (2, 0)),
        make_lattice_triangle((0, 0), (-2, -2), (-2, 0)),
    )


class Tee(NamedTuple):
    X1: DigitalImage
    X2: DigitalImage
    R: Retraction

    @property
    def image(self) -> DigitalImage:
        return self.X1.union(self.X2)


# Values off the tee image inside [0, 4]^2.
TEE_TABLE: Dict[Point, Point] = {
    Point(0, 1): Point(1, 2),
    Point(0, 0): Point(2, 2),
    Point(1, 1): Point(2, 2),
    Point(1, 0): Point(2, 1),
}


def make_tee() -> Tee:
    """
    X1 = [0,4] x [2,4], X2 = [2,4] x [0,2] and the tabulated map R of
    [0,4]^2 onto their union, extended to the plane through the axis
    retraction of the square.

    R is not continuous at (1,1): it fixes (0,2) and (2,0), which have no
    common neighbor in the tee.
    """
    X1 = make_rectangle(0, 4, 2, 4)
    X2 = make_rectangle(2, 4, 0, 2)
    square = build_axis_retraction(make_rectangle(0, 4, 0, 4))
    R = Retraction(X1.union(X2), TableScheme(TEE_TABLE, inner=square))
    return Tee(X1, X2, R)


class Annulus(NamedTuple):
    X: DigitalImage
    parts: Tuple[DigitalImage, DigitalImage, DigitalImage, DigitalImage]
    U: DigitalImage
    r: Retraction


def _annulus_cases(p: Point, parts: Sequence[DigitalImage]) -> List[Point]:
    """Values of every case of the inner-ring map that applies at p."""
    x, y = p
    X1, X2, X3, X4 = parts
    values = []
    if p in X1:
        if y <= -1:
            values.append(Point(1, -1))
        if -1 <= y <= 1:
            values.append(Point(1, y))
        if y >= 1:
            values.append(Point(1, 1))
    if p in X2:
        if x >= 1:
            values.append(Point(1, 1))
        if -1 <= x <= 1:
            values.append(Point(x, 1))
        if x <= -1:
            values.append(Point(-1, 1))
    if p in X3:
        if y >= 1:
            values.append(Point(-1, 1))
        if -1 <= y <= 1:
            values.append(Point(-1, y))
        if y <= -1:
            values.append(Point(-1, -1))
    if p in X4:
        if x <= -1:
            values.append(Point(-1, -1))
        if -1 <= x <= 1:
            values.append(Point(x, -1))
        if x >= 1:
            values.append(Point(1, -1))
    return values


def make_annulus() -> Annulus:
    """
    X = [-3,3]^2 without the origin, its four triangular quarters, the inner
    ring U = {max(|x|,|y|) = 1} and the piecewise map r of X onto U.

    Raises:
        DomainError: If two applicable cases of r disagree
    """
    X = make_rectangle(-3, 3, -3, 3).difference([(0, 0)])
    parts = (
        DigitalImage.of(p for p in X if 1 <= p.x <= 3 and -p.x <= p.y <= p.x),
        DigitalImage.of(p for p in X if 1 <= p.y <= 3 and -p.y <= p.x <= p.y),
        DigitalImage.of(p for p in X if -3 <= p.x <= -1 and p.x <= p.y <= -p.x),
        DigitalImage.of(p for p in X if -3 <= p.y <= -1 and p.y <= p.x <= -p.y),
    )
    U = make_scc_diamond(8)

    table = {}
    for p in X:
        values = set(_annulus_cases(p, parts))
        if len(values) != 1:
            raise DomainError(f"Inner-ring map at {p} has values {sorted(values)}")
        table[p] = values.pop()
    r = Retraction(U, TableScheme(table, domain=X.points))
    return Annulus(X, parts, U, r)


def antipodal_map(U: DigitalImage) -> SelfMap:
    """p -> -p on an image symmetric about the origin."""
    return SelfMap(U, {p: -p for p in U.points})


def tee_image() -> DigitalImage:
    return make_tee().image


def wedge_image() -> DigitalImage:
    X1, X2 = make_wedge_45_45()
    return X1.union(X2)


def edge_union_image() -> DigitalImage:
    X1, X2 = make_edge_union_triangles()
    return X1.union(X2)


CATALOG: Dict[str, Callable[[], DigitalImage]] = {
    "square": lambda: make_rectangle(0, 3, 0, 3),
    "fig1-triangle": make_fig1_triangle,
    "fig1-disk": make_fig1_disk,
    "block-u": lambda: make_block_u(3),
    "diamond-disk": make_diamond_disk,
    "scc-4": lambda: make_scc_diamond(4),
    "scc-8": lambda: make_scc_diamond(8),
    "c1-block": make_c1_block,
    "tee": tee_image,
    "annulus": lambda: make_annulus().X,
    "wedge-45-45": wedge_image,
    "edge-union-triangles": edge_union_image,
}


def get_example(name: str) -> DigitalImage:
    """
    Raises:
        UnsupportedExample: If name is not in CATALOG
    """
    try:
        factory = CATALOG[name]
    except KeyError:
        raise UnsupportedExample(f"Unknown example {name!r}; choose from {', '.join(sorted(CATALOG))}") from None
    return factory()
