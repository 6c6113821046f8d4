import pytest
from hypothesis import given

from dpsmonoid.core_maps import (
    PartialInjection,
    PartialTransformation,
    compose,
    empty_map,
    identity,
    invert,
    make_partial_injection,
    parse_map,
)
from dpsmonoid.errors import DegreeMismatch, DuplicateDomain, NotInjective, OutOfRange

from conftest import all_injections, all_transformations, injections, same_degree, transformations


def pi(*images):
    return PartialInjection(images)


class TestConstruction:
    def test_gamma_from_pairs(self):
        g = make_partial_injection(2, {(0, 1), (1, 0)})
        assert g.to_list() == [1, 0]
        assert g(0) == 1 and g(1) == 0

    def test_empty(self):
        e = make_partial_injection(3, set())
        assert e == empty_map(3)
        assert e.to_list() == [None, None, None]
        assert e.rank == 0 and e.domain() == frozenset()

    def test_repeated_image(self):
        with pytest.raises(NotInjective):
            make_partial_injection(3, {(0, 1), (1, 1)})

    def test_repeated_domain_point(self):
        with pytest.raises(DuplicateDomain):
            make_partial_injection(3, [(0, 1), (0, 2)])

    @pytest.mark.parametrize("pairs", [[(3, 0)], [(0, 3)], [(-1, 0)]])
    def test_out_of_range(self, pairs):
        with pytest.raises(OutOfRange):
            make_partial_injection(3, pairs)

    @pytest.mark.parametrize("images", [[], [2, 0], [True], ["1"], [0.0]])
    def test_bad_images(self, images):
        with pytest.raises(OutOfRange):
            PartialTransformation(images)

    def test_injection_checked(self):
        with pytest.raises(NotInjective):
            pi(1, 1, None)
        assert PartialTransformation([1, 1, None]).rank == 2

    def test_domain_image_rank(self):
        f = pi(None, 2, 0, None)
        assert f.domain() == {1, 2}
        assert f.image() == {0, 2}
        assert f.rank == 2
        assert f.pairs() == [(1, 2), (2, 0)]

    def test_equality_across_classes(self):
        assert PartialTransformation([1, 0]) == pi(1, 0)
        assert hash(PartialTransformation([1, 0])) == hash(pi(1, 0))
        assert pi(0) != pi(0, 1)

    def test_canonical_order_puts_null_first(self):
        maps = [pi(0, 1), pi(None, 0), pi(1, None), pi(None, None)]
        assert [f.to_list() for f in sorted(maps)] == [
            [None, None], [None, 0], [0, 1], [1, None]
        ]

    def test_serialization(self):
        f = pi(1, 0, None)
        assert f.to_json() == "[1,0,null]"
        assert parse_map("[1, 0, null]") == f
        assert "1 0" in repr(f)

    @pytest.mark.parametrize("text", ["{}", "[]", "[1.5]", "[true]"])
    def test_parse_rejects(self, text):
        with pytest.raises(OutOfRange):
            parse_map(text)


class TestCompose:
    def test_identity_left_and_right(self):
        f = pi(None, 2, 0)
        assert compose(identity(3), f) == f
        assert compose(f, identity(3)) == f

    def test_single_point_chase(self):
        f = make_partial_injection(2, {(0, 1)})
        g = make_partial_injection(2, {(1, 0)})
        assert compose(f, g) == make_partial_injection(2, {(0, 0)})

    def test_three_factor_swap_product(self):
        # (0 i / 0 1)(0 1 / 1 0)(0 1 / 0 j) = (0 i / j 0)
        n, i, j = 4, 2, 3
        u = make_partial_injection(n, {(0, 0), (i, 1)})
        g = make_partial_injection(n, {(0, 1), (1, 0)})
        v = make_partial_injection(n, {(0, 0), (1, j)})
        assert compose(compose(u, g), v) == make_partial_injection(n, {(0, j), (i, 0)})

    def test_left_to_right(self):
        f, g = pi(1, 2, 0), pi(0, 2, 1)
        assert compose(f, g).to_list() == [2, 1, 0]
        assert compose(g, f).to_list() == [1, 0, 2]

    def test_mul_operator(self):
        f, g = pi(1, 2, 0), pi(0, 2, None)
        assert f * g == compose(f, g)

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatch):
            compose(identity(2), identity(3))

    def test_result_type(self):
        assert type(compose(pi(1, 0), pi(0, 1))) is PartialInjection
        assert type(compose(PartialTransformation([0, 0]), pi(0, 1))) is PartialTransformation


class TestInvert:
    def test_gamma(self):
        assert invert(pi(1, 0)) == pi(1, 0)

    def test_single_pair(self):
        assert invert(make_partial_injection(3, {(0, 2)})) == make_partial_injection(3, {(2, 0)})

    def test_cycle(self):
        a1 = pi(0, 2, 3, 1)
        assert invert(a1) == make_partial_injection(4, {(0, 0), (1, 3), (2, 1), (3, 2)})

    def test_not_injective(self):
        with pytest.raises(NotInjective):
            invert(PartialTransformation([0, 0]))


@given(same_degree(transformations, 3))
def test_associativity_random(fgh):
    f, g, h = fgh
    assert compose(compose(f, g), h) == compose(f, compose(g, h))


@pytest.mark.parametrize("n", [1, 2])
def test_associativity_exhaustive(n):
    maps = list(all_transformations(n))
    for f in maps:
        for g in maps:
            fg = compose(f, g)
            for h in maps:
                assert compose(fg, h) == compose(f, compose(g, h))


def test_associativity_exhaustive_degree3():
    maps = list(all_transformations(3))
    products = {(f, g): compose(f, g) for f in maps for g in maps}
    for (f, g), fg in products.items():
        for h in maps:
            assert products[(fg, h)] == products[(f, products[(g, h)])]


@given(injections())
def test_inverse_axioms(f):
    fi = invert(f)
    assert f * fi * f == f
    assert fi * f * fi == fi
    assert invert(fi) == f
    assert (f * fi).domain() == f.domain()


@given(same_degree(injections, 2))
def test_inverse_of_product(fg):
    f, g = fg
    assert invert(f * g) == invert(g) * invert(f)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_idempotents_commute_exhaustive(n):
    maps = all_injections(n)
    idem = [e for e in maps if e * e == e]
    # idempotents of a symmetric inverse monoid are the partial identities
    assert len(idem) == 2 ** n
    for e in idem:
        for f in idem:
            assert e * f == f * e


@pytest.mark.parametrize("n", [1, 2, 3])
def test_inverse_axioms_exhaustive(n):
    for f in all_injections(n):
        assert f * invert(f) * f == f
        assert invert(invert(f)) == f
