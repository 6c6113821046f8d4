import pytest
from hypothesis import given

from dpsmonoid.core_maps import PartialInjection, PartialTransformation, identity, invert
from dpsmonoid.errors import OutOfRange
from dpsmonoid.star_metric import is_dps_member, is_partial_isometry, star_distance

from conftest import all_injections, all_transformations, injections, same_degree, transformations


@pytest.mark.parametrize(
    "x, y, d", [(3, 3, 0), (0, 5, 1), (5, 0, 1), (2, 3, 2), (0, 0, 0)]
)
def test_distance(x, y, d):
    assert star_distance(6, x, y) == d


def test_distance_range():
    with pytest.raises(OutOfRange):
        star_distance(3, 0, 3)
    with pytest.raises(OutOfRange):
        star_distance(3, -1, 0)


def test_distance_is_metric():
    n = 5
    pts = range(n)
    for x in pts:
        for y in pts:
            assert star_distance(n, x, y) == star_distance(n, y, x)
            for z in pts:
                assert star_distance(n, x, z) <= star_distance(n, x, y) + star_distance(n, y, z)


def test_swap_centre_with_fixed_leaf_not_isometry():
    f = PartialInjection([1, 0, 2])
    assert not is_partial_isometry(f)
    assert not is_dps_member(f)


@pytest.mark.parametrize("n", [1, 3, 6])
def test_small_and_identity(n):
    for x in range(n):
        for y in range(n):
            f = PartialInjection([y if i == x else None for i in range(n)])
            assert is_partial_isometry(f) and is_dps_member(f)
    assert is_partial_isometry(identity(n)) and is_dps_member(identity(n))


@pytest.mark.parametrize(
    "images, expected",
    [
        ([3, None, 0, None], True),  # 0 in Dom and Im, rank 2
        ([1, 2, 0], False),  # rank 3 moving the centre
        ([None, 2, 1], True),  # leaves only
        ([None, 0, 2], False),  # leaves only but hitting 0
        ([0, 2, 1], True),
    ],
)
def test_membership_cases(images, expected):
    f = PartialInjection(images)
    assert is_dps_member(f) is expected
    assert is_partial_isometry(f) is expected


def test_non_injective_rejected():
    f = PartialTransformation([1, 1, None])
    assert not is_dps_member(f)
    assert not is_partial_isometry(f)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_oracle_equivalence_exhaustive(n):
    count = 0
    for f in all_transformations(n):
        assert is_dps_member(f) == is_partial_isometry(f), f
        count += 1
    assert count == (n + 1) ** n


@given(transformations(max_degree=8))
def test_oracle_equivalence_random(f):
    assert is_dps_member(f) == is_partial_isometry(f)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_product_closure_exhaustive(n):
    members = [f for f in all_injections(n) if is_partial_isometry(f)]
    for f in members:
        assert is_dps_member(invert(f))
        for g in members:
            assert is_dps_member(f * g)


@given(same_degree(injections, 2))
def test_product_closure_random(fg):
    f, g = fg
    if is_dps_member(f) and is_dps_member(g):
        assert is_dps_member(f * g)
        assert is_partial_isometry(f * g)
        assert is_dps_member(invert(f))
