"""Partial transformations and partial injections of ``{0, ..., n-1}``.

Maps act on the right and compose left to right: ``x(fg) = (xf)g``.
A map of degree ``n`` is stored densely as a tuple of ``n`` images, with
``None`` marking points outside the domain.
"""

from __future__ import annotations

import json
from typing import Iterable, Optional, Sequence

from .errors import DegreeMismatch, DuplicateDomain, NotInjective, OutOfRange

__all__ = [
    "PartialTransformation",
    "PartialInjection",
    "make_partial_injection",
    "compose",
    "invert",
    "identity",
    "empty_map",
    "parse_map",
]

Image = Optional[int]


class PartialTransformation:
    """A partial self-map of ``{0, ..., degree-1}``.

    Equality and hashing depend only on the image tuple (which fixes the
    degree), so a :class:`PartialInjection` equals the plain transformation
    with the same images.
    """

    __slots__ = ("images",)

    def __init__(self, images: Sequence[Image]):
        images = tuple(images)
        if not images:
            raise OutOfRange("degree must be at least 1")
        n = len(images)
        for y in images:
            if y is not None and (isinstance(y, bool) or not isinstance(y, int) or not 0 <= y < n):
                raise OutOfRange(f"image {y!r} outside 0..{n - 1}")
        self.images = images
        self._check()

    def _check(self):
        pass

    @classmethod
    def _trusted(cls, images: tuple):
        # skips validation; callers guarantee a well-formed image tuple
        obj = object.__new__(cls)
        obj.images = images
        return obj

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> Image:
        return self.images[x]

    def domain(self) -> frozenset:
        return frozenset(x for x, y in enumerate(self.images) if y is not None)

    def image(self) -> frozenset:
        return frozenset(y for y in self.images if y is not None)

    def image_multiset(self) -> list:
        return sorted(y for y in self.images if y is not None)

    @property
    def rank(self) -> int:
        """Size of the domain."""
        return sum(1 for y in self.images if y is not None)

    def is_injective(self) -> bool:
        defined = [y for y in self.images if y is not None]
        return len(defined) == len(set(defined))

    def pairs(self) -> list:
        return [(x, y) for x, y in enumerate(self.images) if y is not None]

    def __mul__(self, other: "PartialTransformation") -> "PartialTransformation":
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, PartialTransformation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def sort_key(self) -> tuple:
        """Lexicographic key on the serialized array, ``null`` first."""
        return tuple(-1 if y is None else y for y in self.images)

    def __lt__(self, other):
        if not isinstance(other, PartialTransformation):
            return NotImplemented
        return (self.degree, self.sort_key()) < (other.degree, other.sort_key())

    def to_list(self) -> list:
        return list(self.images)

    def to_json(self) -> str:
        return json.dumps(self.to_list(), separators=(",", ":"))

    def __repr__(self):
        if not self.pairs():
            return f"{type(self).__name__}(empty, n={self.degree})"
        top = " ".join(str(x) for x, _ in self.pairs())
        bottom = " ".join(str(y) for _, y in self.pairs())
        return f"{type(self).__name__}({top} / {bottom}, n={self.degree})"


class PartialInjection(PartialTransformation):
    """A partial transformation whose defined images are pairwise distinct."""

    __slots__ = ()

    def _check(self):
        if not self.is_injective():
            raise NotInjective(f"repeated image in {list(self.images)}")


def make_partial_injection(degree: int, pairs: Iterable[tuple]) -> PartialInjection:
    """Build the partial injection of the given degree sending ``x`` to ``y``
    for each ``(x, y)`` in ``pairs``."""
    if degree < 1:
        raise OutOfRange("degree must be at least 1")
    images: list = [None] * degree
    seen = set()
    for x, y in pairs:
        if not (0 <= x < degree and 0 <= y < degree):
            raise OutOfRange(f"pair {(x, y)} outside 0..{degree - 1}")
        if images[x] is not None:
            raise DuplicateDomain(f"point {x} given two images")
        if y in seen:
            raise NotInjective(f"image {y} used twice")
        images[x] = y
        seen.add(y)
    return PartialInjection._trusted(tuple(images))


def compose(f: PartialTransformation, g: PartialTransformation) -> PartialTransformation:
    """Return ``fg``, i.e. first ``f`` then ``g``."""
    if f.degree != g.degree:
        raise DegreeMismatch(f"degrees {f.degree} and {g.degree}")
    gi = g.images
    images = tuple(None if y is None else gi[y] for y in f.images)
    if isinstance(f, PartialInjection) and isinstance(g, PartialInjection):
        return PartialInjection._trusted(images)
    return PartialTransformation._trusted(images)


def invert(f: PartialInjection) -> PartialInjection:
    """The inverse partial injection: ``Dom`` and ``Im`` swap roles."""
    if not isinstance(f, PartialInjection) and not f.is_injective():
        raise NotInjective(f"{f!r} has no inverse")
    images: list = [None] * f.degree
    for x, y in enumerate(f.images):
        if y is not None:
            images[y] = x
    return PartialInjection._trusted(tuple(images))


def identity(degree: int) -> PartialInjection:
    return PartialInjection._trusted(tuple(range(degree)))


def empty_map(degree: int) -> PartialInjection:
    return PartialInjection._trusted((None,) * degree)


def parse_map(text: str, injective: bool = True) -> PartialTransformation:
    """Read the canonical JSON array form, e.g. ``"[1,0,null]"``."""
    data = json.loads(text)
    if not isinstance(data, list) or not data:
        raise OutOfRange(f"expected a non-empty JSON array, got {text!r}")
    for y in data:
        if y is not None and (isinstance(y, bool) or not isinstance(y, int)):
            raise OutOfRange(f"bad image {y!r}")
    cls = PartialInjection if injective else PartialTransformation
    return cls(data)
