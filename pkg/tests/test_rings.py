from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sl2comod.rings import BaseRing, QQ, ZZ, contains, is_unit, prime_factors

RINGS = [ZZ, QQ, BaseRing.localized(2), BaseRing.localized(5), BaseRing.inverted(2), BaseRing.inverted(6)]


def test_contains_examples():
    assert contains(ZZ, Fraction(3, 1))
    assert contains(BaseRing.inverted(6), Fraction(5, 12))
    assert not contains(BaseRing.localized(5), Fraction(1, 5))


def test_is_unit_examples():
    assert is_unit(ZZ, -1)
    assert is_unit(BaseRing.inverted(2), 4)
    assert not is_unit(BaseRing.localized(3), 3)
    assert not is_unit(QQ, 0)


def test_constructor_validation():
    with pytest.raises(ValueError):
        BaseRing.localized(4)
    with pytest.raises(ValueError):
        BaseRing.inverted(1)
    with pytest.raises(ValueError):
        BaseRing("Z", 3)


def test_parse_roundtrip():
    for r in RINGS:
        assert BaseRing.parse(str(r)) == r
        assert BaseRing.from_json(r.to_json()) == r


def test_subring_relation():
    Z2 = BaseRing.localized(2)
    assert ZZ.is_subring_of(Z2)
    assert BaseRing.inverted(3).is_subring_of(Z2)
    assert not BaseRing.inverted(2).is_subring_of(Z2)
    assert BaseRing.inverted(2).is_subring_of(BaseRing.inverted(6))
    assert not QQ.is_subring_of(ZZ)
    assert Z2.is_subring_of(QQ)


def test_nonunit_part():
    assert BaseRing.inverted(2).nonunit_part(12) == 3
    assert BaseRing.localized(3).nonunit_part(12) == 3
    assert ZZ.nonunit_part(-12) == 12
    assert QQ.nonunit_part(12) == 1


fractions = st.builds(Fraction, st.integers(-60, 60), st.integers(1, 60))


@given(fractions, st.sampled_from(RINGS))
def test_unit_implies_inverse_contained(q, ring):
    if is_unit(ring, q):
        assert contains(ring, q) and contains(ring, 1 / q)


@given(fractions, fractions, st.sampled_from(RINGS))
def test_rings_closed_under_arithmetic(a, b, ring):
    if contains(ring, a) and contains(ring, b):
        assert contains(ring, a + b) and contains(ring, a * b) and contains(ring, -a)


@given(st.integers(2, 5000))
def test_prime_factors_multiply_back(n):
    ps = prime_factors(n)
    m = n
    for p in ps:
        assert m % p == 0
        while m % p == 0:
            m //= p
    assert m == 1
