"""Construction of DPS_n: counts, enumeration, the centre-fixing lift and units.

Every element of DPS_n (n >= 2) falls in exactly one of four parts:

(a) lifts of partial injections on the leaves, fixing the centre;
(b) partial injections on the leaves themselves;
(c) the rank-2 maps ``0 -> j, i -> 0`` with ``i, j`` leaves;
(d) the rank-1 maps ``0 -> i`` and ``i -> 0``.

:func:`enumerate_dps` lists the parts in that order, each part sorted by
its serialized image array (``null`` before any integer).
"""

from __future__ import annotations

from itertools import combinations, permutations
from math import comb, factorial
from typing import Iterable, Optional

from .core_maps import PartialInjection, identity
from .errors import NotZeroFree, OutOfRange

__all__ = [
    "symmetric_inverse_count",
    "dps_count",
    "enumerate_symmetric_inverse",
    "embed_psi",
    "dps_parts",
    "enumerate_dps",
    "units",
    "ENUMERATION_LIMIT",
]

# enumerate_dps(13) would hold ~1e11 maps
ENUMERATION_LIMIT = 12


def symmetric_inverse_count(m: int) -> int:
    """Number of partial injections on an ``m``-element set."""
    if m < 0:
        raise OutOfRange("m must be non-negative")
    return sum(comb(m, k) ** 2 * factorial(k) for k in range(m + 1))


def dps_count(n: int) -> int:
    """Exact size of DPS_n."""
    if n < 1:
        raise OutOfRange("n must be at least 1")
    return 1 + n * n + 2 * sum(comb(n - 1, k) ** 2 * factorial(k) for k in range(1, n))


def _injections_on(ground: tuple, degree: int) -> list:
    out = []
    for k in range(len(ground) + 1):
        for dom in combinations(ground, k):
            for img in permutations(ground, k):
                images = [None] * degree
                for x, y in zip(dom, img):
                    images[x] = y
                out.append(PartialInjection._trusted(tuple(images)))
    return out


def enumerate_symmetric_inverse(
    m: int, ground: Iterable[int], degree: Optional[int] = None
) -> list:
    """All partial injections of the given degree with domain and image
    inside ``ground`` (``m`` must equal ``len(ground)``), sorted canonically."""
    ground = tuple(sorted(set(ground)))
    if len(ground) != m:
        raise OutOfRange(f"ground set has {len(ground)} points, expected {m}")
    if degree is None:
        degree = max(ground, default=0) + 1
    if ground and not (0 <= ground[0] and ground[-1] < degree):
        raise OutOfRange(f"ground set {ground} outside 0..{degree - 1}")
    return sorted(_injections_on(ground, degree), key=PartialInjection.sort_key)


def embed_psi(xi: PartialInjection) -> PartialInjection:
    """Extend a map on the leaves by fixing the centre 0."""
    if xi.images[0] is not None or 0 in xi.image():
        raise NotZeroFree(f"{xi!r} touches 0")
    return PartialInjection._trusted((0,) + xi.images[1:])


def dps_parts(n: int) -> tuple:
    """The four disjoint parts (a)-(d) of DPS_n, each canonically sorted.

    Defined for ``n >= 2``.
    """
    if n < 2:
        raise OutOfRange("the four-part decomposition needs n >= 2")
    if n > ENUMERATION_LIMIT:
        raise OutOfRange(f"enumeration limited to n <= {ENUMERATION_LIMIT}")
    leaves = tuple(range(1, n))
    part_b = enumerate_symmetric_inverse(n - 1, leaves, n)
    part_a = sorted((embed_psi(xi) for xi in part_b), key=PartialInjection.sort_key)
    part_c = []
    for i in leaves:
        for j in leaves:
            images = [None] * n
            images[0] = j
            images[i] = 0
            part_c.append(PartialInjection._trusted(tuple(images)))
    part_c.sort(key=PartialInjection.sort_key)
    part_d = []
    for i in leaves:
        images = [None] * n
        images[0] = i
        part_d.append(PartialInjection._trusted(tuple(images)))
        images = [None] * n
        images[i] = 0
        part_d.append(PartialInjection._trusted(tuple(images)))
    part_d.sort(key=PartialInjection.sort_key)
    return part_a, part_b, part_c, part_d


def enumerate_dps(n: int) -> list:
    """All elements of DPS_n in canonical order."""
    if n < 1:
        raise OutOfRange("n must be at least 1")
    if n == 1:
        return [PartialInjection._trusted((None,)), PartialInjection._trusted((0,))]
    out = []
    for part in dps_parts(n):
        out.extend(part)
    return out


def units(n: int) -> list:
    """The group of units: elements of DPS_n with full domain."""
    if n < 1:
        raise OutOfRange("n must be at least 1")
    if n == 1:
        return [identity(1)]
    if n == 2:
        return [identity(2), PartialInjection._trusted((1, 0))]
    out = [
        PartialInjection._trusted((0,) + perm)
        for perm in permutations(range(1, n))
    ]
    return sorted(out, key=PartialInjection.sort_key)
