"""Geodesic distance on the star graph and membership tests for DPS_n.

The star graph on ``n`` vertices has centre ``0`` joined to every leaf
``1, ..., n-1``; it is represented only through the degree ``n``.
"""

from __future__ import annotations

from itertools import combinations

from .core_maps import PartialTransformation
from .errors import OutOfRange

__all__ = ["star_distance", "is_partial_isometry", "is_dps_member"]


def star_distance(n: int, x: int, y: int) -> int:
    if not (0 <= x < n and 0 <= y < n):
        raise OutOfRange(f"points {x}, {y} outside 0..{n - 1}")
    if x == y:
        return 0
    if x == 0 or y == 0:
        return 1
    return 2


def _dist(x, y):
    if x == y:
        return 0
    return 1 if x == 0 or y == 0 else 2


def is_partial_isometry(f: PartialTransformation) -> bool:
    """True iff ``f`` preserves star distance between any two domain points.

    Works on arbitrary partial transformations; a non-injective map fails
    because it sends two points at distance > 0 to distance 0.
    """
    pairs = f.pairs()
    for (x, fx), (y, fy) in combinations(pairs, 2):
        if _dist(fx, fy) != _dist(x, y):
            return False
    return True


def is_dps_member(f: PartialTransformation) -> bool:
    """Membership in DPS_n by the four-case description on ``|Dom f|``
    and the position of the centre."""
    images = f.images
    dom_size = f.rank
    if dom_size <= 1:
        return True
    if not f.is_injective():
        return False
    zero_image = images[0]
    if zero_image is None:
        return 0 not in f.image()
    if dom_size == 2:
        return 0 in f.image()
    return zero_image == 0
