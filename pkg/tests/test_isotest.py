import random
from fractions import Fraction

import pytest

from conftest import random_sl2
from sl2comod.comodule import (
    Side, base_change, classical_dual, contragredient, dual_comodule, flip_side, morphism_check,
    standard_comodule, sym_power, sym_tensors, tensor, transpose_comodule,
)
from sl2comod.hopf import HopfVariant
from sl2comod.isotest import (
    find_isomorphism, intertwiner_lattice, intertwining_equations, pairwise_classification,
    recheck_verdict,
)
from sl2comod.lattice import det
from sl2comod.rings import QQ, ZZ, BaseRing


def rank_over_q(rows, ncols):
    """Rank of a rational matrix by plain Gaussian elimination."""
    rows = [[Fraction(x) for x in r] for r in rows]
    rank, col = 0, 0
    while rank < len(rows) and col < ncols:
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


def hom_rank_by_evaluation(c1, c2, npoints=10, seed=5):
    """dim Hom over Q from rho1(g) Phi = Phi rho2(g) at random SL2 points."""
    assert c1.effective_variant is c2.effective_variant
    rng = random.Random(seed)
    n1, n2 = c1.rank, c2.rank
    nvars = n1 * n2
    rows = []
    for _ in range(npoints):
        g = random_sl2(rng)
        A = [[p.evaluate(g) for p in r] for r in c1.matrix]
        B = [[p.evaluate(g) for p in r] for r in c2.matrix]
        for i in range(n1):
            for k in range(n2):
                row = [0] * nvars
                for j in range(n1):
                    row[j * n2 + k] += A[i][j]
                for j in range(n2):
                    row[i * n2 + j] -= B[j][k]
                rows.append(row)
    return nvars - rank_over_q(rows, nvars)


def sym2_pair():
    X = sym_tensors(standard_comodule(side=Side.LEFT), 2)
    return flip_side(X), dual_comodule(X)


PAIRS = {
    "V,V": (standard_comodule(), standard_comodule()),
    "V,V*": (standard_comodule(), classical_dual()[0]),
    "Sym1,Sym2": (sym_power(1), sym_power(2)),
    "Sym2,Sym2T": (sym_power(2), transpose_comodule(sym_power(2))),
    "Sym2,Sym2*": (sym_power(2), contragredient(sym_power(2))),
    "VV,VV": (tensor(standard_comodule(), standard_comodule()),) * 2,
    "Sym2Sym1,Sym1Sym2": (tensor(sym_power(2), sym_power(1)), tensor(sym_power(1), sym_power(2))),
}


@pytest.mark.parametrize("name", list(PAIRS))
def test_hom_rank_matches_evaluation_oracle(name):
    c1, c2 = PAIRS[name]
    hom = intertwiner_lattice(c1, c2)
    for B in hom.basis:
        assert morphism_check(B, c1, c2)
    if c1.rank == c2.rank:
        assert hom.rank == hom_rank_by_evaluation(c1, c2)


def test_pruning_does_not_lose_solutions():
    c1, c2 = PAIRS["VV,VV"]
    eq_pruned, vars_pruned = intertwining_equations(c1, c2, prune=True)
    eq_full, vars_full = intertwining_equations(c1, c2, prune=False)
    assert len(vars_pruned) < len(vars_full)
    assert intertwiner_lattice(c1, c2).rank == hom_rank_by_evaluation(c1, c2) == 2


def test_sym2_hom_generators():
    fwd, dual = sym2_pair()
    hom = intertwiner_lattice(fwd, dual)
    assert hom.rank == 1
    assert hom.basis[0] in ([[0, 0, 1], [0, -2, 0], [1, 0, 0]], [[0, 0, -1], [0, 2, 0], [-1, 0, 0]])
    back = intertwiner_lattice(dual, fwd)
    A = [[0, 0, -2], [0, 1, 0], [-2, 0, 0]]
    assert back.rank == 1
    assert back.basis[0] in (A, [[-x for x in r] for r in A])
    assert morphism_check(A, dual, fwd)
    assert abs(det(A)) == 4


def test_sym2_and_its_dual_are_not_isomorphic_over_z():
    fwd, dual = sym2_pair()
    v = find_isomorphism(fwd, dual)
    assert v.kind == "not_isomorphic"
    assert abs(v.certificate["determinant"]) == 2
    assert recheck_verdict(v, fwd, dual)
    assert find_isomorphism(base_change(fwd, BaseRing.inverted(2)),
                            base_change(dual, BaseRing.inverted(2))).isomorphic
    assert not find_isomorphism(base_change(fwd, BaseRing.localized(2)),
                                base_change(dual, BaseRing.localized(2))).isomorphic
    assert find_isomorphism(base_change(fwd, BaseRing.localized(3)),
                            base_change(dual, BaseRing.localized(3))).isomorphic


def test_examples():
    V, (Vs, phi) = standard_comodule(), classical_dual()
    v = find_isomorphism(V, Vs)
    assert v.isomorphic and recheck_verdict(v, V, Vs)
    assert intertwiner_lattice(V, Vs).basis in ([phi], [[[-x for x in r] for r in phi]])
    v = find_isomorphism(sym_power(1), sym_power(2))
    assert v.kind == "not_isomorphic" and v.certificate["reason"] == "ranks differ"
    assert intertwiner_lattice(sym_power(1), sym_power(2)).rank == 0
    S3 = sym_power(3)
    v = find_isomorphism(S3, S3)
    assert v.isomorphic and recheck_verdict(v, S3, S3)


def test_rank_two_hom_uses_search():
    c = PAIRS["VV,VV"][0]
    v = find_isomorphism(c, c)
    assert v.isomorphic and v.certificate["hom_rank"] == 2
    assert recheck_verdict(v, c, c)


def test_tampered_certificate_fails_recheck():
    fwd, dual = sym2_pair()
    v = find_isomorphism(fwd, dual)
    v.certificate["generator"] = [[0, 0, 2], [0, -4, 0], [2, 0, 0]]
    assert not recheck_verdict(v, fwd, dual)


@pytest.mark.parametrize("ring", [QQ, BaseRing.inverted(2), BaseRing.localized(2), BaseRing.localized(3)])
def test_hom_rank_over_z_bounds_rank_over_localizations(ring):
    c1, c2 = PAIRS["Sym2,Sym2*"]
    assert intertwiner_lattice(c1, c2).rank <= intertwiner_lattice(
        base_change(c1, ring), base_change(c2, ring)).rank


def test_classification_over_q_collapses():
    S2, T2 = sym_power(2), sym_tensors(standard_comodule(), 2)
    names = ["Sym2", "Sym2*", "Sym_2", "Sym_2*"]
    fam = [S2, contragredient(S2), T2, contragredient(T2)]
    over_q = pairwise_classification(fam, QQ, names)
    assert over_q.all_isomorphic()
    over_z = pairwise_classification(fam, None, names)
    assert [[names[i] for i in c] for c in over_z.classes()] == [["Sym2", "Sym_2*"], ["Sym2*", "Sym_2"]]
    for i in range(4):
        for j in range(4):
            assert recheck_verdict(over_z.table[i][j], fam[i], fam[j])
