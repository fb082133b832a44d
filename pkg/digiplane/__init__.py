"""
digiplane - Convexity, retractions and approximate fixed points in the digital plane
"""

__version__ = "0.1.0"

# Import main classes for easier access
from .core import C1, C2, AdjacencyKind, DigitalImage, Point, SelfMap, Window
from .convexity import decompose_disk, hull_vertices, is_convex
from .retraction import Retraction, verify_retraction
from .afpp import search_afpp_violation, search_fixed_point_free

__all__ = [
    'C1', 'C2', 'AdjacencyKind', 'DigitalImage', 'Point', 'SelfMap', 'Window',
    'decompose_disk', 'hull_vertices', 'is_convex',
    'Retraction', 'verify_retraction',
    'search_afpp_violation', 'search_fixed_point_free',
]
