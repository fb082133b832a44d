"""
Text formats for images and retraction tables.

JSON: {"adjacency":"c2","points":[[x,y],...]} with points sorted.
GRID: "!origin xmin ymin", an "!adjacency c1" line for c1 images, then rows
from ymax down to ymin with '#' for points and '.' for gaps.
Tables are tab separated with the header x, y, rx, ry.
"""

import json
import logging
from typing import Optional, Union

import numpy as np
import pandas as pd

from .core import C1, C2, AdjacencyKind, DigitalImage
from .exceptions import DomainError, FormatError

logger = logging.getLogger(__name__)

FORMATS = ("json", "grid")


def emit_json(X: DigitalImage) -> str:
    payload = {"adjacency": X.kind.label, "points": [[p.x, p.y] for p in X.sorted_points()]}
    return json.dumps(payload, separators=(",", ":"), sort_keys=True) + "\n"


def parse_json(text: str) -> DigitalImage:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(e.msg, e.lineno, e.colno) from e
    if not isinstance(payload, dict) or "points" not in payload:
        raise FormatError('expected an object with a "points" array')

    try:
        kind = AdjacencyKind.from_label(payload.get("adjacency", "c2"))
    except DomainError as e:
        raise FormatError(str(e)) from e
    points = payload["points"]
    if not isinstance(points, list):
        raise FormatError('"points" must be an array')
    for i, p in enumerate(points):
        if (not isinstance(p, list) or len(p) != 2
                or not all(isinstance(v, int) and not isinstance(v, bool) for v in p)):
            raise FormatError(f"point {i} must be a pair of integers, got {p!r}")
    return DigitalImage.of(points, kind)


def emit_grid(X: DigitalImage) -> str:
    x_min, x_max, y_min, y_max = X.bounding_box()
    grid = np.zeros((y_max - y_min + 1, x_max - x_min + 1), dtype=bool)
    for p in X.points:
        grid[y_max - p.y, p.x - x_min] = True
    lines = [f"!origin {x_min} {y_min}"]
    if X.kind is C1:
        lines.append("!adjacency c1")
    lines.extend("".join(np.where(row, "#", ".")) for row in grid)
    return "\n".join(lines) + "\n"


def parse_grid(text: str) -> DigitalImage:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or not lines[0].startswith("!origin"):
        raise FormatError('first line must be "!origin <xmin> <ymin>"')
    fields = lines[0].split()
    if len(fields) != 3:
        raise FormatError('first line must be "!origin <xmin> <ymin>"')
    try:
        x_min, y_min = int(fields[1]), int(fields[2])
    except ValueError:
        raise FormatError("origin coordinates must be integers", 1, len("!origin ") + 1) from None

    kind = C2
    body = 1
    while body < len(lines) and lines[body].startswith("!"):
        fields = lines[body].split()
        if fields[0] != "!adjacency" or len(fields) != 2:
            raise FormatError(f"unknown directive {fields[0]!r}", body + 1)
        try:
            kind = AdjacencyKind.from_label(fields[1])
        except DomainError as e:
            raise FormatError(str(e), body + 1, len("!adjacency ") + 1) from e
        body += 1

    rows = lines[body:]
    points = []
    for i, row in enumerate(rows):
        y = y_min + len(rows) - 1 - i
        for j, ch in enumerate(row):
            if ch == "#":
                points.append((x_min + j, y))
            elif ch != ".":
                raise FormatError(f"unexpected character {ch!r}", body + i + 1, j + 1)
    return DigitalImage.of(points, kind)


def detect_format(text: str) -> str:
    head = text.lstrip()[:1]
    if head == "{":
        return "json"
    if head == "!":
        return "grid"
    raise FormatError("cannot tell the format: expected '{' (json) or '!' (grid)")


def parse_image(data: Union[str, bytes], fmt: Optional[str] = None) -> DigitalImage:
    """Parse JSON or GRID text; the format is detected when fmt is None."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise FormatError(f"input is not UTF-8: {e.reason}") from e
    fmt = fmt or detect_format(data)
    if fmt == "json":
        return parse_json(data)
    if fmt == "grid":
        return parse_grid(data)
    raise FormatError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")


def emit_image(X: DigitalImage, fmt: str = "json") -> str:
    if fmt == "json":
        return emit_json(X)
    if fmt == "grid":
        return emit_grid(X)
    raise FormatError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")


def emit_table(frame: pd.DataFrame) -> str:
    """Tab separated table sorted by its leading columns."""
    ordered = frame.sort_values(list(frame.columns[:2]), kind="mergesort").reset_index(drop=True)
    return ordered.to_csv(sep="\t", index=False, lineterminator="\n")
