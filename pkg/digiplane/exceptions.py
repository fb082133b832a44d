"""
Error hierarchy for digiplane.

Every failure raised by the library derives from DigiplaneError, which is a
ValueError so callers that only guard against bad input keep working.
"""

from typing import Any, Dict, Optional, Tuple


class DigiplaneError(ValueError):
    """Base class for all library errors."""


class DomainError(DigiplaneError):
    """A point or value lies outside the image it must belong to."""


# Segments and lines

class SegmentError(DigiplaneError):
    """A point set is not a digital segment."""


class NotCollinear(SegmentError):
    pass


class NotConnected(SegmentError):
    pass


class BadSlope(SegmentError):
    pass


class NoSeparation(DigiplaneError):
    """None of the four line orientations separates the two images."""


# Disks and convexity

class DiskError(DigiplaneError):
    """A point set is not a digital disk."""


class EmptyInput(DiskError):
    pass


class NotAClosedCurve(DiskError):
    pass


class HoleDetected(DiskError):
    pass


class NotAVertex(DigiplaneError):
    pass


class NotConvexDisk(DigiplaneError):
    pass


# Retractions

class SharedSetNotEdge(DigiplaneError):
    pass


class GlueMismatch(DigiplaneError):
    pass


class IntersectionNotSingleton(DigiplaneError):
    pass


class CrossAdjacency(DigiplaneError):
    """Two images touch away from their wedge point."""

    def __init__(self, pair: Tuple[Any, Any]):
        self.pair = pair
        super().__init__(f"Cross adjacency between {pair[0]} and {pair[1]}")


class WindowTooSmall(DigiplaneError):
    pass


class ImageCountError(DigiplaneError):
    """A builder got the wrong number of images."""


# Search

class BudgetExceeded(DigiplaneError):
    """The search hit its node limit before reaching a verdict."""

    def __init__(self, budget: int, stats: Optional[Dict[str, int]] = None):
        self.budget = budget
        self.stats = dict(stats or {})
        super().__init__(f"Node budget of {budget} exceeded")


# Input formats and catalog

class FormatError(DigiplaneError):
    """Malformed serialized input."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class UnsupportedExample(DigiplaneError):
    pass
