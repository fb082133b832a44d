import random

import pytest

from digiplane.convexity import decompose_disk, is_convex
from digiplane.core import DigitalImage


def random_octagon_disk(rng: random.Random) -> DigitalImage:
    """Lattice points of a random octagon, at least 2 wide and tall."""
    while True:
        x0, y0 = rng.randint(-3, 3), rng.randint(-3, 3)
        w, h = rng.randint(2, 10), rng.randint(2, 10)
        cuts = [rng.randint(0, min(w, h) // 2) for _ in range(4)]
        pts = [
            (x, y)
            for x in range(x0, x0 + w + 1)
            for y in range(y0, y0 + h + 1)
            if (x - x0) + (y - y0) >= cuts[0]
            and (x0 + w - x) + (y - y0) >= cuts[1]
            and (x0 + w - x) + (y0 + h - y) >= cuts[2]
            and (x - x0) + (y0 + h - y) >= cuts[3]
        ]
        X = DigitalImage.of(pts)
        if len(X) >= 4 and is_convex(X).is_convex_disk:
            return X


@pytest.fixture(scope="session")
def octagons():
    """Twenty seeded random convex disks."""
    rng = random.Random(20240611)
    return [random_octagon_disk(rng) for _ in range(20)]


def split_octagon(X: DigitalImage, form, c: int):
    """The parts of X with form(p) <= c and form(p) >= c, sharing the points on the cut."""
    return (DigitalImage.of(p for p in X if form(p) <= c),
            DigitalImage.of(p for p in X if form(p) >= c))


@pytest.fixture(scope="session")
def split_octagons():
    """Random convex disks cut into two convex disks along x + y = c or along x = c."""
    rng = random.Random(20241017)
    cuts = {"antidiagonal": lambda p: p.x + p.y, "vertical": lambda p: p.x}
    found = {name: [] for name in cuts}
    for _ in range(300):
        X = random_octagon_disk(rng)
        for name, form in cuts.items():
            levels = sorted({form(p) for p in X})[1:-1]
            if not levels or len(found[name]) >= 40:
                continue
            X1, X2 = split_octagon(X, form, rng.choice(levels))
            shared = X1.points & X2.points
            if len(shared) < 2 or not (is_convex(X1).is_convex_disk and is_convex(X2).is_convex_disk):
                continue
            if decompose_disk(X1).is_edge(shared) and decompose_disk(X2).is_edge(shared):
                found[name].append((X, X1, X2))
    return found
