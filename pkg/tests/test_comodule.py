import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from conftest import random_sl2
from sl2comod.comodule import (
    Comodule, ComoduleError, ComoduleMorphism, Side, base_change, change_basis, character,
    classical_dual, contragredient, direct_sum, dist_action, dual_comodule, exterior_square,
    flip_side, induced_comodules, is_isomorphism_matrix, is_subcomodule, make_comodule,
    morphism_check, standard_comodule, sym_coefficient, sym_power, sym_tensors,
    sym_transpose_witness, symmetric_power, tensor, tensor_power, transpose_comodule,
    trivial_comodule, verify_comodule, weight_decomposition,
)
from sl2comod.hopf import ONE, X11, X12, X21, X22, HopfVariant
from sl2comod.lattice import Lattice, det, identity, inverse
from sl2comod.rings import QQ, ZZ, BaseRing


def evaluate(c: Comodule, g):
    return [[p.evaluate(g) for p in row] for row in c.matrix]


def mm(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))]
            for i in range(len(A))]


def assert_representation(c: Comodule, points):
    """Evaluated at SL2 points the structure matrix is a (anti)homomorphism."""
    for g, h in zip(points, points[1:]):
        gh = mm(g, h) if c.effective_variant is HopfVariant.STD else mm(h, g)
        assert evaluate(c, gh) == mm(evaluate(c, g), evaluate(c, h))


def sym_oracle(n, g):
    """Matrix of g on Sym^n: v_i = e1^(n-i) e2^i goes to (g11 e1 + g12 e2)^(n-i) (g21 e1 + g22 e2)^i."""
    (a, b), (c, d) = g
    rows = []
    for i in range(n + 1):
        # coefficient list indexed by the power of e2
        poly = [1]
        for lin, times in (((a, b), n - i), ((c, d), i)):
            for _ in range(times):
                nxt = [0] * (len(poly) + 1)
                for k, x in enumerate(poly):
                    nxt[k] += x * lin[0]
                    nxt[k + 1] += x * lin[1]
                poly = nxt
        rows.append(poly)
    return rows


def constructions():
    V = standard_comodule()
    S2 = sym_power(2)
    return {
        "V": V,
        "left V": standard_comodule(side=Side.LEFT),
        "trivial": trivial_comodule(),
        "V(x)V": tensor(V, V),
        "V(x)3": tensor_power(V, 3),
        "V+Sym2": direct_sum(V, S2),
        "Sym3": sym_power(3),
        "Sym2 left": sym_power(2, side=Side.LEFT),
        "Sym_2": sym_tensors(V, 2),
        "Sym_3": sym_tensors(V, 3),
        "dual Sym2": dual_comodule(S2),
        "contragredient Sym2": contragredient(S2),
        "transpose Sym3": transpose_comodule(sym_power(3)),
        "flip Sym2": flip_side(S2),
        "exterior V(x)V": exterior_square(tensor(V, V)),
        "classical dual": classical_dual()[0],
        "Sym2 of Sym2": symmetric_power(S2, 2),
    }


@pytest.mark.parametrize("name", list(constructions()))
def test_constructions_satisfy_axioms(name, sl2_points):
    c = constructions()[name]
    report = verify_comodule(c)
    assert report.passed, report.detail
    assert_representation(c, sl2_points)


def test_verify_rejects_broken_matrices():
    bad = make_comodule([[X11, X12], [X21, X11]])
    rep = verify_comodule(bad)
    assert not rep.passed and rep.axiom == "coassociativity"
    rep = verify_comodule(make_comodule([[X11 + 1, X12], [X21, X22]]))
    assert not rep.passed and rep.axiom == "counit"


def test_tensor_square_entry():
    V = standard_comodule()
    assert tensor(V, V).matrix[0][0] == X11 * X11


def test_tensor_needs_matching_sides():
    with pytest.raises(ComoduleError):
        tensor(standard_comodule(side=Side.RIGHT), standard_comodule(side=Side.LEFT))
    with pytest.raises(ComoduleError):
        tensor(standard_comodule(ZZ), standard_comodule(QQ))


def test_sym2_matrix():
    S2 = sym_power(2)
    assert S2.matrix[0] == (X11 ** 2, 2 * X11 * X12, X12 ** 2)
    assert S2.matrix[1] == (X11 * X21, X11 * X22 + X12 * X21, X12 * X22)
    assert S2.matrix[2] == (X21 ** 2, 2 * X21 * X22, X22 ** 2)


@pytest.mark.parametrize("n", range(0, 7))
def test_sym_power_matches_group_action(n, sl2_points):
    S = sym_power(n)
    for g in sl2_points[:4]:
        assert evaluate(S, g) == sym_oracle(n, g)


@pytest.mark.parametrize("n", range(0, 8))
def test_sym_coefficient_closed_form_matches(n):
    S = sym_power(n)
    for i in range(n + 1):
        for l in range(n + 1):
            assert sym_coefficient(n, i, l) == S.matrix[i][l]


def test_symmetric_tensor_matrices():
    X = sym_tensors(standard_comodule(side=Side.LEFT), 2)
    expected_Mtr = [
        [X11 ** 2, X11 * X21, X21 ** 2],
        [2 * X11 * X12, X11 * X22 + X12 * X21, 2 * X21 * X22],
        [X12 ** 2, X12 * X22, X22 ** 2],
    ]
    assert [list(r) for r in X.matrix] == expected_Mtr
    expected_Mstar = [
        [X22 ** 2, -2 * X12 * X22, X12 ** 2],
        [-X21 * X22, X11 * X22 + X12 * X21, -X11 * X12],
        [X21 ** 2, -2 * X11 * X21, X11 ** 2],
    ]
    D = dual_comodule(X)
    assert [list(r) for r in D.matrix] == expected_Mstar
    assert D.side is Side.RIGHT and D.variant is HopfVariant.OP


def test_contragredient_of_sym2_in_column_convention():
    C = contragredient(sym_power(2))
    M3 = [
        [X22 ** 2, -2 * X12 * X22, X12 ** 2],
        [-X21 * X22, X11 * X22 + X12 * X21, -X11 * X12],
        [X21 ** 2, -2 * X11 * X21, X11 ** 2],
    ]
    # the row-convention matrix is the transpose of the column-convention one
    assert [[C.matrix[j][i] for j in range(3)] for i in range(3)] == M3


def test_exterior_square_of_standard_is_trivial():
    assert exterior_square(standard_comodule()).matrix == ((ONE,),)


def test_classical_dual_map():
    Vstar, phi = classical_dual()
    assert morphism_check(phi, standard_comodule(), Vstar)
    assert is_isomorphism_matrix(phi, ZZ)


@pytest.mark.parametrize("c", [sym_power(3), tensor(standard_comodule(), sym_power(2)), sym_tensors(standard_comodule(), 3)])
def test_double_dual_and_double_transpose(c):
    dd = dual_comodule(dual_comodule(c))
    assert dd.matrix == c.matrix and dd.tags() == c.tags()
    assert transpose_comodule(transpose_comodule(c)).matrix == c.matrix
    ff = flip_side(flip_side(c))
    assert ff == c
    cc = contragredient(contragredient(c))
    assert cc.matrix == c.matrix and cc.tags() == c.tags()


def test_transpose_needs_right_standard():
    with pytest.raises(ComoduleError):
        transpose_comodule(sym_power(2, side=Side.LEFT))


@pytest.mark.parametrize("n", range(0, 7))
def test_sym_power_isomorphic_to_its_transpose(n):
    S = sym_power(n)
    Q = sym_transpose_witness(n)
    assert morphism_check(Q, S, transpose_comodule(S))
    assert is_isomorphism_matrix(Q, ZZ)


def test_base_change_direction():
    S = sym_power(2)
    assert base_change(S, QQ).ring == QQ
    assert base_change(S, BaseRing.inverted(3)).ring == BaseRing.inverted(3)
    with pytest.raises(ComoduleError):
        base_change(base_change(S, QQ), ZZ)


def test_identity_is_not_a_morphism_sym2_to_dual():
    X = sym_tensors(standard_comodule(side=Side.LEFT), 2)
    assert not morphism_check(identity(3), flip_side(X), dual_comodule(X))


def test_morphism_checks_sides_and_shapes():
    with pytest.raises(ComoduleError):
        morphism_check(identity(2), standard_comodule(), standard_comodule(side=Side.LEFT))
    with pytest.raises(ComoduleError):
        ComoduleMorphism(standard_comodule(), sym_power(2), identity(2))
    with pytest.raises(ComoduleError):
        morphism_check([[Fraction(1, 2), 0], [0, 1]], standard_comodule(), standard_comodule())


def test_is_subcomodule_examples():
    S = sym_power(2)
    assert is_subcomodule(S, Lattice.full(3))
    assert is_subcomodule(S, Lattice.full(3).scaled(5))
    assert not is_subcomodule(S, Lattice(3, ((1, 0, 0),)))
    V = standard_comodule()
    sym_lattice = Lattice(4, ((1, 0, 0, 0), (0, 1, 1, 0), (0, 0, 0, 1)))
    assert is_subcomodule(tensor(V, V), sym_lattice)
    alt = Lattice(4, ((0, 1, -1, 0),))
    assert is_subcomodule(tensor(V, V), alt)


def test_induced_comodules_of_v_tensor_v():
    V = standard_comodule()
    sub, quot, B = induced_comodules(tensor(V, V), Lattice(4, ((0, 1, -1, 0),)))
    assert sub.matrix == ((ONE,),)
    assert verify_comodule(quot).passed
    with pytest.raises(ComoduleError):
        induced_comodules(tensor(V, V), Lattice(4, ((1, 0, 0, 0),)))
    with pytest.raises(ComoduleError):
        induced_comodules(tensor(V, V), Lattice(4, ((0, 2, -2, 0),)))


unimodular = st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(-2, 2)), max_size=6)


@given(unimodular)
def test_change_of_basis_gives_isomorphic_comodule(ops):
    B = identity(3)
    for i, j, t in ops:
        if i != j:
            B[i] = [a + t * b for a, b in zip(B[i], B[j])]
    S = sym_power(2)
    cb = change_basis(S, B)
    assert verify_comodule(cb).passed
    assert morphism_check(B, cb, S)
    assert morphism_check(inverse(B), S, cb)


# weights -------------------------------------------------------------------


def test_lie_action_on_standard():
    V = standard_comodule()
    assert dist_action(V, "H") == [[1, 0], [0, -1]]
    assert dist_action(V, "x") == [[0, 0], [1, 0]]
    assert dist_action(V, "y") == [[0, 1], [0, 0]]
    with pytest.raises(ValueError):
        dist_action(V, "z")


def kron(A, B):
    return [[a * b for a in ra for b in rb] for ra in A for rb in B]


@pytest.mark.parametrize("X", ["H", "x", "y"])
def test_lie_action_satisfies_leibniz(X):
    A, B = sym_power(2), sym_power(3)
    a, b = dist_action(A, X), dist_action(B, X)
    lhs = dist_action(tensor(A, B), X)
    rhs = [[u + v for u, v in zip(r1, r2)]
           for r1, r2 in zip(kron(a, identity(4)), kron(identity(3), b))]
    assert lhs == rhs


@pytest.mark.parametrize("d", range(0, 9))
def test_sym_power_character(d):
    assert character(sym_power(d)) == {-d + 2 * i: 1 for i in range(d + 1)}
    assert character(transpose_comodule(sym_power(d))) == character(sym_power(d))
    assert character(contragredient(sym_power(d))) == character(sym_power(d))


@pytest.mark.parametrize("n,m", [(1, 1), (2, 3), (3, 3), (1, 4)])
def test_character_is_multiplicative(n, m):
    a, b = character(sym_power(n)), character(sym_power(m))
    prod = {}
    for i, x in a.items():
        for j, y in b.items():
            prod[i + j] = prod.get(i + j, 0) + x * y
    assert character(tensor(sym_power(n), sym_power(m))) == prod


def test_weight_decomposition_needs_unit_index():
    V = standard_comodule()
    # basis e1 + e2, e2: H is not diagonalizable over Z
    cb = change_basis(V, [[1, 1], [0, 1]])
    assert character(cb) == {1: 1, -1: 1}
    W = weight_decomposition(sym_power(2))
    assert W.table == {-2: 1, 0: 1, 2: 1}


def test_weights_of_left_and_opposite_forms_agree():
    assert character(sym_power(3, side=Side.LEFT)) == character(sym_power(3))
    assert character(flip_side(sym_power(3))) == character(sym_power(3))
    assert character(dual_comodule(sym_power(3))) == character(sym_power(3))
