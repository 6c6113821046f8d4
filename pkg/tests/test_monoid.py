from itertools import combinations
from math import factorial

import pytest

from dpsmonoid.core_maps import PartialInjection, compose, identity, invert
from dpsmonoid.errors import NotZeroFree, OutOfRange
from dpsmonoid.monoid import (
    dps_count,
    dps_parts,
    embed_psi,
    enumerate_dps,
    enumerate_symmetric_inverse,
    symmetric_inverse_count,
    units,
)
from dpsmonoid.star_metric import is_dps_member, is_partial_isometry

from conftest import all_injections

TABLE = {
    1: 2, 2: 7, 3: 22, 4: 83, 5: 442, 6: 3127, 7: 26702, 8: 261907,
    9: 2883538, 10: 35144327, 20: 139949655415806098707,
}


def brute_count(n):
    # independent oracle: filter every partial injection by the metric
    return sum(1 for f in all_injections(n) if is_partial_isometry(f))


@pytest.mark.parametrize("m, expected", [(0, 1), (1, 2), (2, 7), (3, 34), (4, 209)])
def test_symmetric_inverse_count(m, expected):
    assert symmetric_inverse_count(m) == expected


def test_symmetric_inverse_count_terms():
    assert symmetric_inverse_count(4) == 1 + 16 + 72 + 96 + 24


@pytest.mark.parametrize("n, expected", sorted(TABLE.items()))
def test_dps_count_table(n, expected):
    assert dps_count(n) == expected


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_dps_count_against_brute_force(n):
    assert dps_count(n) == brute_count(n)


def test_dps_count_decomposition():
    # parts (a) and (b) are copies of I_{n-1}, (c) has (n-1)^2 maps, (d) 2(n-1)
    for n in range(2, 15):
        parts = 2 * symmetric_inverse_count(n - 1) + (n - 1) ** 2 + 2 * (n - 1)
        assert dps_count(n) == parts


def test_bad_arguments():
    with pytest.raises(OutOfRange):
        dps_count(0)
    with pytest.raises(OutOfRange):
        symmetric_inverse_count(-1)
    with pytest.raises(OutOfRange):
        enumerate_dps(0)


class TestSymmetricInverse:
    def test_empty_ground(self):
        assert enumerate_symmetric_inverse(0, [], 3) == [PartialInjection([None] * 3)]

    def test_two_leaves(self):
        maps = enumerate_symmetric_inverse(2, {1, 2}, 3)
        assert len(maps) == 7
        assert all(f.images[0] is None for f in maps)

    def test_three_leaves(self):
        assert len(enumerate_symmetric_inverse(3, {1, 2, 3}, 4)) == 34

    def test_size_mismatch(self):
        with pytest.raises(OutOfRange):
            enumerate_symmetric_inverse(2, {1, 2, 3}, 4)

    @pytest.mark.parametrize("m", range(1, 5))
    def test_full_ground_is_everything(self, m):
        got = enumerate_symmetric_inverse(m, range(m), m)
        assert len(got) == len(set(got)) == symmetric_inverse_count(m)
        assert set(got) == set(all_injections(m))


class TestPsi:
    def test_empty(self):
        assert embed_psi(PartialInjection([None] * 3)) == PartialInjection([0, None, None])

    def test_cycle_is_a1(self):
        assert embed_psi(PartialInjection([None, 2, 3, 1])) == PartialInjection([0, 2, 3, 1])

    def test_identity(self):
        assert embed_psi(PartialInjection([None, 1, 2])) == identity(3)

    @pytest.mark.parametrize("images", [[0, None], [None, 0], [1, None]])
    def test_touching_zero(self, images):
        with pytest.raises(NotZeroFree):
            embed_psi(PartialInjection(images))

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_injective_and_multiplicative(self, n):
        leaves = enumerate_symmetric_inverse(n - 1, range(1, n), n)
        lifted = [embed_psi(x) for x in leaves]
        assert len(set(lifted)) == len(leaves)
        for x in leaves:
            for y in leaves:
                assert embed_psi(compose(x, y)) == compose(embed_psi(x), embed_psi(y))


class TestEnumeration:
    def test_degree_two(self):
        expected = {
            (None, None), (0, None), (1, None), (None, 0), (None, 1), (0, 1), (1, 0)
        }
        assert {f.images for f in enumerate_dps(2)} == expected

    def test_degree_one(self):
        assert [f.to_list() for f in enumerate_dps(1)] == [[None], [0]]

    def test_degree_four(self):
        assert len(enumerate_dps(4)) == 83

    def test_degree_three_members(self):
        elems = enumerate_dps(3)
        assert len(elems) == 22
        assert all(is_dps_member(f) for f in elems)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_filter_agreement(self, n):
        expected = {f for f in all_injections(n) if is_dps_member(f)}
        got = enumerate_dps(n)
        assert len(got) == len(set(got))
        assert set(got) == expected

    @pytest.mark.parametrize("n", range(2, 8))
    def test_formula_agreement(self, n):
        assert len(enumerate_dps(n)) == dps_count(n)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_parts_are_disjoint(self, n):
        parts = [set(p) for p in dps_parts(n)]
        assert sum(len(p) for p in parts) == len(set().union(*parts))
        for p, q in combinations(parts, 2):
            assert not p & q

    def test_parts_shape(self):
        a, b, c, d = dps_parts(4)
        assert all(f.images[0] == 0 for f in a)
        assert all(f.images[0] is None and 0 not in f.image() for f in b)
        assert all(f.rank == 2 and f.images[0] not in (None, 0) for f in c)
        assert all(f.rank == 1 and 0 in f.domain() | f.image() for f in d)
        assert (len(a), len(b), len(c), len(d)) == (34, 34, 9, 6)

    def test_canonical_order(self):
        for part in dps_parts(5):
            keys = [f.sort_key() for f in part]
            assert keys == sorted(keys)
        assert enumerate_dps(4) == enumerate_dps(4)

    @pytest.mark.parametrize("n", [3, 4])
    def test_closed_under_product_and_inverse(self, n):
        elems = set(enumerate_dps(n))
        for f in elems:
            assert invert(f) in elems
            for g in elems:
                assert f * g in elems


class TestUnits:
    def test_degree_four(self):
        assert len(units(4)) == 6

    def test_degree_one(self):
        assert units(1) == [identity(1)]

    def test_degree_three(self):
        assert set(units(3)) == {identity(3), PartialInjection([0, 2, 1])}
        assert set(units(3)) == {f for f in enumerate_dps(3) if f.rank == 3}

    def test_degree_two_contains_swap(self):
        assert set(units(2)) == {f for f in enumerate_dps(2) if f.rank == 2}

    @pytest.mark.parametrize("n", range(1, 7))
    def test_group(self, n):
        group = set(units(n))
        assert len(group) == (factorial(n - 1) if n > 2 else n)
        for f in group:
            assert f.rank == n
            assert invert(f) in group
            for g in group:
                assert f * g in group
