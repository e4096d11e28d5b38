import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import ideal_pairs, ideals, vectors
from diffpow.core import (EXPONENT_CAP, DimensionError, ExponentOverflowError,
                          MonomialIdeal, PurePowerIdeal, add, contains_ideal,
                          contains_monomial, intersect, is_principal,
                          minimalize, ordinary_power, radical, scale)


def ideal(*gens):
    return MonomialIdeal(len(gens[0]), gens)


def test_contains_monomial_examples():
    I = ideal((2, 0), (0, 3))
    assert contains_monomial(I, (3, 1))
    assert not contains_monomial(I, (1, 2))
    assert contains_monomial(ideal((1, 2), (3, 0)), (2, 2))


def test_contains_monomial_dimension_mismatch():
    with pytest.raises(DimensionError):
        contains_monomial(ideal((2, 0)), (1, 1, 1))


def test_minimalize_examples():
    assert minimalize([(2, 0), (3, 0), (0, 3)]) == ideal((2, 0), (0, 3))
    assert minimalize([], d=2) == MonomialIdeal.zero(2)
    assert minimalize([(2, 3), (3, 3), (2, 4)]).gens == ((2, 3),)


def test_canonical_order_is_lex():
    I = ideal((5, 1), (2, 5), (4, 3))
    assert I.gens == ((2, 5), (4, 3), (5, 1))


def test_intersect_examples():
    assert intersect(ideal((2, 0)), ideal((0, 3))) == ideal((2, 3))
    left = ideal((1, 0, 0), (0, 0, 2))
    right = ideal((0, 1, 0), (0, 0, 2))
    assert intersect(left, right) == ideal((1, 1, 0), (0, 0, 2))
    a = ideal((3, 0, 0), (2, 0, 2), (1, 0, 3), (0, 0, 4))
    b = ideal((0, 3, 0), (0, 2, 2), (0, 1, 3), (0, 0, 4))
    assert intersect(a, b) == ideal((3, 3, 0), (2, 2, 2), (1, 1, 3), (0, 0, 4))


def test_intersect_dimension_mismatch():
    with pytest.raises(DimensionError):
        intersect(ideal((1, 0)), ideal((1, 0, 0)))


def test_ordinary_power_examples():
    assert ordinary_power(ideal((2, 0), (0, 3)), 2) == ideal((4, 0), (2, 3), (0, 6))
    assert ordinary_power(ideal((1, 0)), 3) == ideal((3, 0))
    # minimal elements of the six pairwise sums, by hand enumeration
    I = ideal((2, 5), (4, 3), (5, 1))
    assert ordinary_power(I, 2).gens == ((4, 10), (6, 8), (7, 6), (9, 4), (10, 2))
    with pytest.raises(ValueError):
        ordinary_power(I, 0)


def test_radical_examples():
    assert radical(ideal((2, 5), (4, 3), (5, 1))) == ideal((1, 1))
    assert radical(ideal((2, 0), (0, 3))) == ideal((1, 0), (0, 1))
    assert radical(ideal((1, 1, 0), (0, 0, 2))) == ideal((1, 1, 0), (0, 0, 1))


def test_contains_ideal_examples():
    I = ideal((2, 0), (0, 3))
    J = ideal((4, 0), (0, 5), (3, 3), (2, 4))
    assert contains_ideal(I, J)
    assert not contains_ideal(ideal((2, 0)), ideal((1, 0)))
    assert contains_ideal(I, I)


def test_is_principal_examples():
    assert is_principal(ideal((7, 6))) == (7, 6)
    assert is_principal(ideal((2, 0), (0, 3))) is None
    assert is_principal(MonomialIdeal.zero(2)) is None


def test_zero_and_unit():
    assert MonomialIdeal.zero(3).is_zero
    assert MonomialIdeal.unit(2).is_unit
    # unit absorbs everything
    assert ideal((0, 0), (3, 1)) == MonomialIdeal.unit(2)


def test_overflow_is_reported():
    with pytest.raises(ExponentOverflowError):
        MonomialIdeal(1, ((EXPONENT_CAP + 1,),))
    with pytest.raises(ExponentOverflowError):
        add((EXPONENT_CAP,), (1,))
    with pytest.raises(ExponentOverflowError):
        scale((2**30,), 4)


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        MonomialIdeal(2, ((1, -1),))


def test_pure_power_roundtrip():
    q = PurePowerIdeal.from_alpha((2, 0, 3))
    assert q.powers == ((0, 2), (2, 3))
    assert q.to_ideal() == ideal((2, 0, 0), (0, 0, 3))
    assert PurePowerIdeal.from_ideal(q.to_ideal()) == q
    assert str(q) == "(x^2, z^3)"
    with pytest.raises(ValueError):
        PurePowerIdeal(2, ((0, 0),))


@given(ideal_pairs())
def test_intersect_commutes_and_is_contained(pair):
    I, J = pair
    K = intersect(I, J)
    assert K == intersect(J, I)
    assert contains_ideal(I, K) and contains_ideal(J, K)


@given(st.data())
def test_membership_matches_principal_containment(data):
    I = data.draw(ideals())
    g = data.draw(vectors(I.d, max_exp=6))
    assert contains_monomial(I, g) == contains_ideal(I, MonomialIdeal(I.d, (g,)))


@settings(max_examples=50)
@given(ideals(max_exp=3), st.integers(1, 3), st.integers(1, 3))
def test_power_associativity(I, n, m):
    prod = minimalize([add(u, v) for u in ordinary_power(I, n).gens
                       for v in ordinary_power(I, m).gens], d=I.d)
    assert ordinary_power(I, n + m) == prod


@given(ideals(), st.integers(1, 4))
def test_radical_idempotent_and_power_stable(I, n):
    assert radical(radical(I)) == radical(I)
    assert radical(ordinary_power(I, n)) == radical(I)


@given(st.data())
def test_minimalize_idempotent_and_order_free(data):
    d = data.draw(st.integers(1, 3))
    gens = data.draw(st.lists(vectors(d), max_size=6))
    a = minimalize(gens, d=d)
    assert minimalize(a.gens, d=d) == a
    assert minimalize(list(reversed(gens)), d=d) == a
    assert all(not (u != v and all(x <= y for x, y in zip(u, v)))
               for u in a.gens for v in a.gens)
