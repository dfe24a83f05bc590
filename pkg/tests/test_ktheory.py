import pytest
from hypothesis import given, strategies as st

from sl2comod.comodule import (
    contragredient, dual_comodule, standard_comodule, sym_power, sym_tensors, tensor,
    transpose_comodule,
)
from sl2comod.ktheory import (
    KClass, character_peel, k_class, render_laurent, sym_character, tensor_class,
    virtual_cg_check, virtual_cg_expected,
)


def test_peel_examples():
    assert character_peel({1: 1, -1: 1}) == {1: 1}
    assert character_peel({0: 2}) == {0: 2}
    assert character_peel({2: 1, 0: 2, -2: 1}) == {2: 1, 0: 1}
    assert character_peel({}) == KClass()
    assert character_peel({2: 1, -2: 1}) == {2: 1, 0: -1}


def test_peel_rejects_non_symmetric():
    with pytest.raises(ValueError):
        character_peel({1: 1})
    with pytest.raises(ValueError):
        character_peel({2: 1, 0: 1, -2: 2})


def test_k_class_of_v_tensor_v():
    V = standard_comodule()
    assert k_class(tensor(V, V)) == {2: 1, 0: 1}
    assert k_class(sym_tensors(V, 3)) == {3: 1}


@pytest.mark.parametrize("n,m", [(1, 1), (1, 4), (2, 3), (3, 3), (4, 2)])
def test_virtual_clebsch_gordan(n, m):
    assert virtual_cg_check(n, m)
    assert KClass({n: 1}) * KClass({m: 1}) == virtual_cg_expected(n, m)
    assert tensor_class(sym_power(n), sym_power(m)) == virtual_cg_expected(n, m)


@pytest.mark.parametrize("d", range(0, 6))
def test_class_invariant_under_dual_and_transpose(d):
    S = sym_power(d)
    assert k_class(dual_comodule(S)) == k_class(transpose_comodule(S)) == k_class(contragredient(S)) == {d: 1}


classes = st.dictionaries(st.integers(0, 6), st.integers(-3, 3), max_size=4).map(KClass)


@given(classes)
def test_character_roundtrip(c):
    assert character_peel(c.character()) == c
    assert sum(c.character().values()) == c.rank()


@given(classes, classes, classes)
def test_ring_laws(a, b, c):
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert (a - a) == KClass()
    assert (a * b).rank() == a.rank() * b.rank()


def test_rendering():
    assert render_laurent(sym_character(2)) == "q^-2 + 1 + q^2"
    assert render_laurent({1: -1, -1: 3}) == "3·q^-1 - q"
    assert str(KClass({2: 1, 0: -2})) == "[Sym^2] - 2[Sym^0]"
    assert KClass({3: 1, 1: 2}).to_json() == {"1": 2, "3": 1}
    with pytest.raises(ValueError):
        KClass({-1: 1})
