"""Comodules: free modules with a structure matrix over the Hopf algebra.

Convention: for a right-coefficient comodule the coaction is
``Delta(e_i) = sum_j M[i][j] (x) e_j``; a left-coefficient comodule puts the
coefficient on the other side, ``Delta(e_i) = sum_j e_j (x) M[i][j]``.
A left comodule over one variant satisfies exactly the matrix identities of a
right comodule over the flipped variant, which is what ``effective_variant``
records. Morphisms act on row vectors: ``phi(e_i) = sum_j Phi[i][j] f_j``,
and intertwine iff ``M_source @ Phi == Phi @ M_target``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .hopf import (
    HopfPoly, HopfVariant, Mono, ONE, X11, X12, X21, X22, ZERO, _add_into, _delta_mono,
)
from .lattice import Lattice, det, integer_kernel, inverse, identity, matmul
from .rings import BaseRing, ZZ, clean


class Side(Enum):
    RIGHT = "right"
    LEFT = "left"

    @property
    def flipped(self) -> Side:
        return Side.LEFT if self is Side.RIGHT else Side.RIGHT

    @classmethod
    def parse(cls, text) -> Side:
        if isinstance(text, Side):
            return text
        return cls(str(text).lower())


PolyMatrix = tuple[tuple[HopfPoly, ...], ...]


class ComoduleError(ValueError):
    """Raised for contract violations between comodules (tags, rings, shapes)."""


@dataclass(frozen=True)
class Comodule:
    ring: BaseRing
    rank: int
    side: Side
    variant: HopfVariant
    matrix: PolyMatrix
    labels: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "matrix", tuple(tuple(r) for r in self.matrix))
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(self.matrix) != self.rank or any(len(r) != self.rank for r in self.matrix):
            raise ComoduleError(f"structure matrix is not {self.rank}x{self.rank}")
        if len(self.labels) != self.rank:
            raise ComoduleError("need one label per basis vector")
        for row in self.matrix:
            for p in row:
                for c in p.terms.values():
                    if not self.ring.contains(c):
                        raise ComoduleError(f"coefficient {c} is not in {self.ring}")

    @property
    def effective_variant(self) -> HopfVariant:
        return self.variant if self.side is Side.RIGHT else self.variant.flipped

    def tags(self) -> tuple:
        return (self.ring, self.side, self.variant)

    def entry(self, i: int, j: int) -> HopfPoly:
        return self.matrix[i][j]

    def relabel(self, labels: Sequence[str]) -> Comodule:
        return Comodule(self.ring, self.rank, self.side, self.variant, self.matrix, tuple(labels))

    def with_matrix(self, matrix, labels=None) -> Comodule:
        return Comodule(self.ring, len(matrix), self.side, self.variant, matrix,
                        tuple(labels) if labels is not None else self.labels)

    def __str__(self) -> str:
        rows = "\n".join("  [" + ", ".join(str(p) for p in r) + "]" for r in self.matrix)
        return (f"Comodule(rank={self.rank}, ring={self.ring}, side={self.side.value}, "
                f"variant={self.variant.value})\n{rows}")


def _check_same_tags(*cs: Comodule) -> None:
    first = cs[0]
    for c in cs[1:]:
        if c.ring != first.ring:
            raise ComoduleError(f"ring mismatch: {first.ring} vs {c.ring}")
        if c.side is not first.side:
            raise ComoduleError(f"side mismatch: {first.side.value} vs {c.side.value}")
        if c.variant is not first.variant:
            raise ComoduleError(f"variant mismatch: {first.variant.value} vs {c.variant.value}")


# ---------------------------------------------------------------------------
# matrix helpers


def poly_times_scalar(M: Sequence[Sequence[HopfPoly]], Phi: Sequence[Sequence]) -> list[list[HopfPoly]]:
    """``M @ Phi`` for a polynomial matrix M and a scalar matrix Phi."""
    ncols = len(Phi[0]) if Phi else 0
    out = []
    for row in M:
        accs = [dict() for _ in range(ncols)]
        for j, p in enumerate(row):
            if not p.terms:
                continue
            for k, s in enumerate(Phi[j]):
                if s:
                    acc = accs[k]
                    for m, c in p.terms.items():
                        _add_into(acc, m, c * s)
        out.append([HopfPoly({m: clean(c) for m, c in a.items()}, raw=False) for a in accs])
    return out


def scalar_times_poly(Phi: Sequence[Sequence], M: Sequence[Sequence[HopfPoly]]) -> list[list[HopfPoly]]:
    """``Phi @ M`` for a scalar matrix Phi and a polynomial matrix M."""
    ncols = len(M[0]) if M else 0
    out = []
    for row in Phi:
        accs = [dict() for _ in range(ncols)]
        for j, s in enumerate(row):
            if not s:
                continue
            for k, p in enumerate(M[j]):
                acc = accs[k]
                for m, c in p.terms.items():
                    _add_into(acc, m, c * s)
        out.append([HopfPoly({m: clean(c) for m, c in a.items()}, raw=False) for a in accs])
    return out


def poly_transpose(M: Sequence[Sequence[HopfPoly]]) -> list[list[HopfPoly]]:
    return [list(col) for col in zip(*M)] if M else []


def change_basis(c: Comodule, B: Sequence[Sequence], labels=None) -> Comodule:
    """Comodule in the basis given by the rows of the invertible matrix B.

    The new structure matrix is ``B @ M @ B^-1``.
    """
    Binv = inverse(B)
    M = scalar_times_poly(B, poly_times_scalar(c.matrix, Binv))
    if labels is None:
        labels = [f"b{i + 1}" for i in range(c.rank)]
    return c.with_matrix(M, labels)


# ---------------------------------------------------------------------------
# verification


@dataclass
class ComoduleReport:
    passed: bool
    axiom: str | None = None
    entry: tuple[int, int] | None = None
    detail: str | None = None

    def to_json(self) -> dict:
        out: dict = {"passed": self.passed}
        if not self.passed:
            out.update({"axiom": self.axiom, "entry": list(self.entry) if self.entry else None,
                        "detail": self.detail})
        return out


def verify_comodule(c: Comodule) -> ComoduleReport:
    """Check counit and coassociativity of the structure matrix exactly."""
    n = c.rank
    for i in range(n):
        for j in range(n):
            e = c.matrix[i][j].counit()
            if e != (1 if i == j else 0):
                return ComoduleReport(False, "counit", (i, j), f"counit of entry is {e}")
    v = c.effective_variant
    M = c.matrix
    for i in range(n):
        row = M[i]
        for k in range(n):
            rhs: dict = {}
            for j in range(n):
                a, b = row[j].terms, M[j][k].terms
                if not a or not b:
                    continue
                for m1, c1 in a.items():
                    for m2, c2 in b.items():
                        _add_into(rhs, (m1, m2), c1 * c2)
            lhs: dict = {}
            for m, cf in M[i][k].terms.items():
                for key, e in _delta_mono(m, v):
                    _add_into(lhs, key, cf * e)
            if lhs != rhs:
                diff = next(key for key in sorted(set(lhs) | set(rhs)) if lhs.get(key, 0) != rhs.get(key, 0))
                return ComoduleReport(
                    False, "coassociativity", (i, k),
                    f"term {diff}: comultiplied entry has {lhs.get(diff, 0)}, "
                    f"matrix product has {rhs.get(diff, 0)}")
    return ComoduleReport(True)


# ---------------------------------------------------------------------------
# constructors


def _as_poly(x) -> HopfPoly:
    return x if isinstance(x, HopfPoly) else HopfPoly.const(x)


def make_comodule(matrix, *, ring: BaseRing = ZZ, side=Side.RIGHT, variant=HopfVariant.STD,
                  labels=None) -> Comodule:
    matrix = tuple(tuple(_as_poly(x) for x in row) for row in matrix)
    n = len(matrix)
    if labels is None:
        labels = [f"e{i + 1}" for i in range(n)]
    return Comodule(ring, n, Side.parse(side), HopfVariant.parse(variant), matrix, tuple(labels))


def standard_comodule(ring: BaseRing = ZZ, side=Side.RIGHT) -> Comodule:
    """The rank-2 comodule V with the generic matrix as coaction."""
    side = Side.parse(side)
    if side is Side.RIGHT:
        matrix = ((X11, X12), (X21, X22))
    else:
        matrix = ((X11, X21), (X12, X22))
    return Comodule(ring, 2, side, HopfVariant.STD, matrix, ("e1", "e2"))


def trivial_comodule(ring: BaseRing = ZZ, side=Side.RIGHT, variant=HopfVariant.STD) -> Comodule:
    return Comodule(ring, 1, Side.parse(side), HopfVariant.parse(variant), ((ONE,),), ("1",))


def tensor(c1: Comodule, c2: Comodule) -> Comodule:
    _check_same_tags(c1, c2)
    n1, n2 = c1.rank, c2.rank
    rows = []
    for i1 in range(n1):
        for i2 in range(n2):
            row = []
            for j1 in range(n1):
                a = c1.matrix[i1][j1]
                for j2 in range(n2):
                    row.append(a * c2.matrix[i2][j2] if a else ZERO)
            rows.append(row)
    labels = [f"{a}⊗{b}" for a in c1.labels for b in c2.labels]
    return Comodule(c1.ring, n1 * n2, c1.side, c1.variant, rows, labels)


def tensor_power(c: Comodule, d: int) -> Comodule:
    if d < 1:
        raise ValueError("tensor power needs d >= 1")
    out = c
    for _ in range(d - 1):
        out = tensor(out, c)
    return out


def direct_sum(*cs: Comodule) -> Comodule:
    _check_same_tags(*cs)
    n = sum(c.rank for c in cs)
    rows = []
    offset = 0
    labels = []
    for c in cs:
        for i in range(c.rank):
            row = [ZERO] * n
            row[offset:offset + c.rank] = c.matrix[i]
            rows.append(row)
        labels.extend(c.labels)
        offset += c.rank
    return Comodule(cs[0].ring, n, cs[0].side, cs[0].variant, rows, labels)


def monomial_basis(r: int, n: int) -> list[tuple[int, ...]]:
    """Exponent vectors of degree n in r variables, first variable's exponent descending."""
    if r == 0:
        return [()] if n == 0 else []
    if r == 1:
        return [(n,)]
    out = []
    for a in range(n, -1, -1):
        out.extend((a,) + rest for rest in monomial_basis(r - 1, n - a))
    return out


def _monomial_label(labels: Sequence[str], alpha: Sequence[int]) -> str:
    parts = [lab if e == 1 else f"{lab}^{e}" for lab, e in zip(labels, alpha) if e]
    return " ".join(parts) if parts else "1"


def symmetric_power(c: Comodule, n: int) -> Comodule:
    """n-th symmetric power of c, basis the degree-n monomials in c's basis.

    The coaction of a monomial is the product of the coactions of its
    factors, expanded multinomially.
    """
    if n < 0:
        raise ValueError("symmetric power needs n >= 0")
    r = c.rank
    basis = monomial_basis(r, n)
    index = {alpha: i for i, alpha in enumerate(basis)}
    rows = []
    for alpha in basis:
        # Delta(e^alpha) as {beta: poly}
        acc: dict[tuple[int, ...], HopfPoly] = {(0,) * r: ONE}
        for k, e in enumerate(alpha):
            for _ in range(e):
                nxt: dict[tuple[int, ...], HopfPoly] = {}
                for beta, p in acc.items():
                    for j in range(r):
                        coeff = c.matrix[k][j]
                        if not coeff:
                            continue
                        gamma = beta[:j] + (beta[j] + 1,) + beta[j + 1:]
                        nxt[gamma] = nxt.get(gamma, ZERO) + p * coeff
                acc = nxt
        row = [ZERO] * len(basis)
        for beta, p in acc.items():
            row[index[beta]] = p
        rows.append(row)
    labels = [_monomial_label(c.labels, alpha) for alpha in basis]
    return Comodule(c.ring, len(basis), c.side, c.variant, rows, labels)


def sym_power(n: int, ring: BaseRing = ZZ, side=Side.RIGHT) -> Comodule:
    """Sym^n of the standard comodule, basis v_i = e1^(n-i) e2^i."""
    return symmetric_power(standard_comodule(ring, side), n)


def sym_coefficient(n: int, i: int, l: int) -> HopfPoly:
    """Coefficient a(i)_l of v_l in the coaction of v_i on Sym^n, computed in closed form.

    Expands (x11 e1 + x12 e2)^(n-i) (x21 e1 + x22 e2)^i directly; used as an
    independent cross-check of ``sym_power``.
    """
    total = ZERO
    for s in range(0, n - i + 1):
        t = l - s
        if t < 0 or t > i:
            continue
        raw = {(n - i - s, s, i - t, t): comb(n - i, s) * comb(i, t)}
        total = total + HopfPoly(raw)
    return total


def exterior_square(c: Comodule) -> Comodule:
    """Second exterior power, basis e_k ^ e_l for k < l."""
    pairs = list(itertools.combinations(range(c.rank), 2))
    M = c.matrix
    rows = []
    for i, j in pairs:
        rows.append([M[i][k] * M[j][l] - M[i][l] * M[j][k] for k, l in pairs])
    labels = [f"{c.labels[k]}∧{c.labels[l]}" for k, l in pairs]
    return Comodule(c.ring, len(pairs), c.side, c.variant, rows, labels)


# left/right and duality ------------------------------------------------


def flip_side(c: Comodule) -> Comodule:
    """Swap the coefficient side and the Hopf variant; the matrix is unchanged.

    Applying it twice returns the same value.
    """
    return Comodule(c.ring, c.rank, c.side.flipped, c.variant.flipped, c.matrix, c.labels)


def _dual_label(label: str) -> str:
    return label[:-1] if label.endswith("*") else label + "*"


def dual_comodule(c: Comodule) -> Comodule:
    """Dual on the dual basis: antipode applied to the transposed matrix.

    Both the side and the variant flip, so a right comodule over R gives a
    left comodule over the opposite Hopf algebra and vice versa.
    """
    n = c.rank
    rows = [[c.matrix[k][i].antipode() for k in range(n)] for i in range(n)]
    return Comodule(c.ring, n, c.side.flipped, c.variant.flipped, rows,
                    tuple(_dual_label(lab) for lab in c.labels))


def contragredient(c: Comodule) -> Comodule:
    """Dual moved back to the original side and variant."""
    return flip_side(dual_comodule(c))


def classical_dual(ring: BaseRing = ZZ) -> tuple[Comodule, list[list[int]]]:
    """The dual V* of the standard comodule with basis x1, x2, and phi: V -> V*.

    phi(e1) = x2 and phi(e2) = -x1.
    """
    matrix = ((X22, -X21), (-X12, X11))
    dual = Comodule(ring, 2, Side.RIGHT, HopfVariant.STD, matrix, ("x1", "x2"))
    phi = [[0, 1], [-1, 0]]
    return dual, phi


def transpose_comodule(c: Comodule) -> Comodule:
    """Transpose comodule: T-tilde = T o S applied to every structure coefficient."""
    if c.side is not Side.RIGHT or c.variant is not HopfVariant.STD:
        raise ComoduleError("transpose comodule needs a right comodule over the standard variant")
    rows = [[p.ttilde() for p in row] for row in c.matrix]
    return Comodule(c.ring, c.rank, c.side, c.variant, rows,
                    tuple(_dual_label(lab) for lab in c.labels))


def dual_basis_comodule(c: Comodule) -> Comodule:
    """The structure on the dual basis that reuses c's coefficients unchanged."""
    return c.relabel(tuple(_dual_label(lab) for lab in c.labels))


def sym_transpose_witness(n: int) -> list[list[int]]:
    """Isomorphism Sym^n(V) -> transpose of Sym^n(V), v_i -> (-1)^i x_(n-i)."""
    Q = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        Q[i][n - i] = (-1) ** i
    return Q


def base_change(c: Comodule, target: BaseRing) -> Comodule:
    if not c.ring.is_subring_of(target):
        raise ComoduleError(f"no canonical map {c.ring} -> {target}")
    return Comodule(target, c.rank, c.side, c.variant, c.matrix, c.labels)


# symmetric tensors ------------------------------------------------------


def _orbit_label(labels: Sequence[str], rank: int, d: int, vec: Sequence[int]) -> str:
    support = [t for t, x in enumerate(vec) if x]
    first = support[0]
    digits = []
    for _ in range(d):
        digits.append(first % rank)
        first //= rank
    digits.reverse()
    name = "⊗".join(labels[k] for k in digits)
    return name if len(support) == 1 else f"Σ{name}"


def sym_tensors(c: Comodule, d: int) -> Comodule:
    """Symmetric tensors: the sublattice of c^(x)d fixed by all permutations of factors."""
    if d < 2:
        raise ValueError("symmetric tensors need d >= 2")
    r = c.rank
    if r == 1:
        return c
    big = tensor_power(c, d)
    N = big.rank
    equations = []
    for t in range(N):
        digits = []
        x = t
        for _ in range(d):
            digits.append(x % r)
            x //= r
        digits.reverse()
        for k in range(d - 1):
            if digits[k] == digits[k + 1]:
                continue
            sw = digits[:]
            sw[k], sw[k + 1] = sw[k + 1], sw[k]
            u = 0
            for dg in sw:
                u = u * r + dg
            if t < u:
                equations.append({t: 1, u: -1})
    L = Lattice(N, tuple(tuple(v) for v in integer_kernel(equations, N)))
    sub, _quot, _B = induced_comodules(big, L)
    labels = [_orbit_label(c.labels, r, d, v) for v in L.generators]
    return sub.relabel(labels)


def induced_comodules(c: Comodule, L: Lattice) -> tuple[Comodule, Comodule, list[list[int]]]:
    """Sub- and quotient comodule for a saturated sublattice L.

    Returns ``(sub, quot, B)`` where the rows of B are L's canonical basis
    followed by a unimodular complement; the structure matrix in that basis
    is block lower triangular exactly when L is a subcomodule.
    """
    if L.ambient_rank != c.rank:
        raise ComoduleError(f"lattice lives in rank {L.ambient_rank}, comodule has rank {c.rank}")
    if not L.is_saturated():
        raise ComoduleError("sublattice is not saturated; the quotient would have torsion")
    B = L.basis + L.complement()
    r = L.rank
    cb = change_basis(c, B)
    for a in range(r):
        for b in range(r, c.rank):
            if cb.matrix[a][b]:
                raise ComoduleError(
                    f"lattice is not a subcomodule: basis vector {a} picks up {cb.matrix[a][b]} "
                    f"on complement vector {b - r}")
    sub_rows = [row[:r] for row in cb.matrix[:r]]
    quot_rows = [row[r:] for row in cb.matrix[r:]]
    sub = c.with_matrix(sub_rows, [f"s{i + 1}" for i in range(r)])
    quot = c.with_matrix(quot_rows, [f"q{i + 1}" for i in range(c.rank - r)])
    return sub, quot, B


def is_subcomodule(c: Comodule, L: Lattice) -> bool:
    """Does the coaction send L into R (x) L?  L need not be saturated."""
    if L.ambient_rank != c.rank:
        raise ComoduleError(f"lattice lives in rank {L.ambient_rank}, comodule has rank {c.rank}")
    for v in L.generators:
        # coefficient vectors of v @ M, one per monomial
        by_mono: dict[Mono, list] = {}
        for k, p in enumerate(scalar_times_poly([list(v)], c.matrix)[0]):
            for m, cf in p.terms.items():
                by_mono.setdefault(m, [0] * c.rank)[k] = cf
        for vec in by_mono.values():
            if not L.contains(vec, c.ring):
                return False
    return True


# ---------------------------------------------------------------------------
# morphisms


@dataclass
class ComoduleMorphism:
    source: Comodule
    target: Comodule
    matrix: list[list]

    def __post_init__(self):
        _check_shape(self.matrix, self.source, self.target)

    def then(self, other: ComoduleMorphism) -> ComoduleMorphism:
        return ComoduleMorphism(self.source, other.target, matmul(self.matrix, other.matrix))

    def check(self) -> MorphismReport:
        return morphism_check(self.matrix, self.source, self.target)


def _check_shape(Phi, c1: Comodule, c2: Comodule) -> None:
    if len(Phi) != c1.rank or any(len(r) != c2.rank for r in Phi):
        raise ComoduleError(f"morphism matrix must be {c1.rank}x{c2.rank}")


@dataclass
class MorphismReport:
    passed: bool
    row: int | None = None
    column: int | None = None
    monomial: Mono | None = None
    lhs: object = None
    rhs: object = None

    def to_json(self) -> dict:
        out: dict = {"passed": self.passed}
        if not self.passed:
            out.update({"row": self.row, "column": self.column, "monomial": list(self.monomial),
                        "source_side": str(self.lhs), "target_side": str(self.rhs)})
        return out

    def __bool__(self) -> bool:
        return self.passed


def morphism_check(Phi: Sequence[Sequence], c1: Comodule, c2: Comodule) -> MorphismReport:
    """Exact check of ``M1 @ Phi == Phi @ M2`` monomial by monomial."""
    if c1.side is not c2.side or c1.variant is not c2.variant:
        raise ComoduleError("morphisms need equal side and variant")
    _check_shape(Phi, c1, c2)
    for row in Phi:
        for x in row:
            if not c1.ring.contains(x):
                raise ComoduleError(f"morphism entry {x} is not in {c1.ring}")
    left = poly_times_scalar(c1.matrix, Phi)
    right = scalar_times_poly(Phi, c2.matrix)
    for i, (lr, rr) in enumerate(zip(left, right)):
        for k, (p, q) in enumerate(zip(lr, rr)):
            if p != q:
                mono = next(m for m in sorted(set(p.terms) | set(q.terms))
                            if p.terms.get(m, 0) != q.terms.get(m, 0))
                return MorphismReport(False, i, k, mono, p.terms.get(mono, 0), q.terms.get(mono, 0))
    return MorphismReport(True)


def is_isomorphism_matrix(Phi: Sequence[Sequence], ring: BaseRing) -> bool:
    if len(Phi) != (len(Phi[0]) if Phi else 0):
        return False
    if not Phi:
        return True
    return ring.is_unit(det(Phi))


# ---------------------------------------------------------------------------
# Lie algebra action, weights, characters


def right_standard_matrix(c: Comodule) -> list[list[HopfPoly]]:
    """Structure matrix seen as a right comodule over the standard variant.

    When the effective variant is the opposite one, transposing the matrix
    gives a right comodule over the standard variant on the same basis.
    """
    if c.effective_variant is HopfVariant.STD:
        return [list(r) for r in c.matrix]
    return poly_transpose(c.matrix)


_DIRECTIONS = {
    # direction of differentiation at the identity for each Lie generator
    "H": {(1, 0, 0, 0): 1, (0, 0, 0, 1): -1},
    "x": {(0, 0, 1, 0): 1},
    "y": {(0, 1, 0, 0): 1},
}


def _derivative(p: HopfPoly, direction: dict[Mono, int]):
    total = 0
    for (a, b, c, d), cf in p.terms.items():
        if b == 0 and c == 0:
            total += cf * (a * direction.get((1, 0, 0, 0), 0) + d * direction.get((0, 0, 0, 1), 0))
        elif b == 1 and c == 0:
            total += cf * direction.get((0, 1, 0, 0), 0)
        elif b == 0 and c == 1:
            total += cf * direction.get((0, 0, 1, 0), 0)
    return clean(Fraction(total)) if isinstance(total, Fraction) else total


def dist_action(c: Comodule, X: str) -> list[list]:
    """Matrix A of a Lie generator: ``X . e_i = sum_j A[i][j] e_j``.

    On the standard comodule H = diag(1, -1), x.e2 = e1 and y.e1 = e2.
    """
    if X not in _DIRECTIONS:
        raise ValueError(f"unknown Lie generator {X!r}; expected x, H or y")
    M = right_standard_matrix(c)
    direction = _DIRECTIONS[X]
    return [[_derivative(p, direction) for p in row] for row in M]


class NoWeightDecomposition(ValueError):
    pass


@dataclass
class WeightDecomposition:
    table: dict[int, int]
    eigenbasis: dict[int, list[list[int]]] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {str(k): v for k, v in sorted(self.table.items())}


def weight_decomposition(c: Comodule) -> WeightDecomposition:
    """Integer eigen-sublattices of H; they must form a basis of the whole lattice."""
    A = dist_action(c, "H")
    n = c.rank
    bound = max((sum(abs(x) for x in row) for row in A), default=0)
    table: dict[int, int] = {}
    eig: dict[int, list[list[int]]] = {}
    stacked: list[list[int]] = []
    for lam in range(-int(bound) - 1, int(bound) + 2):
        # v is an eigenvector iff v @ (A - lam I) = 0
        columns = [[A[i][j] - (lam if i == j else 0) for i in range(n)] for j in range(n)]
        K = integer_kernel(columns, n)
        if K:
            table[lam] = len(K)
            eig[lam] = K
            stacked.extend(K)
    if len(stacked) != n:
        raise NoWeightDecomposition(
            f"no weight decomposition: eigenlattices have total rank {len(stacked)} out of {n}")
    if n and not c.ring.is_unit(det(stacked)):
        raise NoWeightDecomposition(
            f"no weight decomposition: eigenlattices have index {abs(det(stacked))}")
    return WeightDecomposition(table, eig)


def character(c: Comodule) -> dict[int, int]:
    """Laurent polynomial sum rank(W_j) q^j as ``{j: rank}``."""
    return dict(weight_decomposition(c).table)


def torus_weights(c: Comodule) -> list[int] | None:
    """Weights of the basis vectors when the basis is diagonal for the torus.

    Setting x12 = x21 = 0 must leave a diagonal matrix of pure monomials
    x11^a or x22^d; the basis vector then has weight a - d. Otherwise None.
    """
    M = right_standard_matrix(c)
    out = []
    for i, row in enumerate(M):
        for j, p in enumerate(row):
            torus = {m: cf for m, cf in p.terms.items() if m[1] == 0 and m[2] == 0}
            if i != j and torus:
                return None
            if i == j:
                if len(torus) != 1:
                    return None
                (m, cf), = torus.items()
                if cf != 1:
                    return None
                out.append(m[0] - m[3])
    return out
