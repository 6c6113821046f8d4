import itertools

import pytest
from hypothesis import strategies as st

from dpsmonoid.core_maps import PartialInjection, PartialTransformation


def all_transformations(n):
    for images in itertools.product([None, *range(n)], repeat=n):
        yield PartialTransformation(images)


def all_injections(n):
    return [PartialInjection(t.images) for t in all_transformations(n) if t.is_injective()]


@st.composite
def transformations(draw, n=None, max_degree=6):
    if n is None:
        n = draw(st.integers(1, max_degree))
    images = draw(st.lists(st.one_of(st.none(), st.integers(0, n - 1)), min_size=n, max_size=n))
    return PartialTransformation(images)


@st.composite
def injections(draw, n=None, max_degree=7):
    if n is None:
        n = draw(st.integers(1, max_degree))
    perm = draw(st.permutations(range(n)))
    keep = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    return PartialInjection([y if k else None for y, k in zip(perm, keep)])


def same_degree(strategy_factory, count):
    """``count`` maps of one shared random degree."""
    return st.integers(1, 6).flatmap(
        lambda n: st.tuples(*[strategy_factory(n=n) for _ in range(count)])
    )


@pytest.fixture(scope="session")
def dps_small():
    from dpsmonoid.monoid import enumerate_dps

    return {n: enumerate_dps(n) for n in range(1, 6)}
