"""Exact integer linear algebra: Smith/Hermite forms, kernels, lattices and
solving linear systems over localizations of Z.

Matrices are lists of rows; entries are ``int`` or ``Fraction``. Nothing here
touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

from .rings import BaseRing, ZZ, clean


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(m: int, n: int) -> list[list[int]]:
    return [[0] * n for _ in range(m)]


def transpose(M: Sequence[Sequence], ncols: int | None = None) -> list[list]:
    if not M:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*M)]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list]:
    if not A:
        return []
    inner = len(B)
    ncols = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [0] * ncols
        for k in range(inner):
            a = row[k]
            if a:
                bk = B[k]
                for j in range(ncols):
                    if bk[j]:
                        acc[j] += a * bk[j]
        out.append([clean(x) for x in acc])
    return out


def vecmat(v: Sequence, B: Sequence[Sequence]) -> list:
    return matmul([list(v)], B)[0] if B else []


def det(M: Sequence[Sequence]) -> int | Fraction:
    """Exact determinant by fraction-valued Gaussian elimination."""
    n = len(M)
    A = [[Fraction(x) for x in row] for row in M]
    sign = 1
    result = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if A[r][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            A[c], A[p] = A[p], A[c]
            sign = -sign
        piv = A[c][c]
        result *= piv
        for r in range(c + 1, n):
            if A[r][c] != 0:
                f = A[r][c] / piv
                A[r] = [a - f * b for a, b in zip(A[r], A[c])]
    return clean(sign * result)


def inverse(M: Sequence[Sequence]) -> list[list]:
    """Exact inverse over Q; raises ``ValueError`` on singular input."""
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(M)]
    for c in range(n):
        p = next((r for r in range(c, n) if A[r][c] != 0), None)
        if p is None:
            raise ValueError("singular matrix")
        A[c], A[p] = A[p], A[c]
        piv = A[c][c]
        A[c] = [x / piv for x in A[c]]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [a - f * b for a, b in zip(A[r], A[c])]
    return [[clean(x) for x in row[n:]] for row in A]


def integer_row(row: Iterable) -> list[int]:
    """Scale a rational row by the lcm of its denominators."""
    row = list(row)
    den = 1
    for x in row:
        if isinstance(x, Fraction):
            den = lcm(den, x.denominator)
    return [int(x * den) for x in row]


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SnfResult:
    U: list[list[int]]
    D: list[list[int]]
    V: list[list[int]]

    @property
    def diagonal(self) -> list[int]:
        return [self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0))]

    @property
    def elementary_divisors(self) -> list[int]:
        return [d for d in self.diagonal if d != 0]


def smith_normal_form(M: Sequence[Sequence[int]]) -> SnfResult:
    """Return unimodular U, V and diagonal D with ``U @ M @ V == D``.

    The diagonal is non-negative and satisfies d_1 | d_2 | ... .
    """
    m = len(M)
    n = len(M[0]) if m else 0
    A = [[int(x) for x in row] for row in M]
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst -= q * row_src
        A[dst] = [a - q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a - q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col_dst -= q * col_src
        for row in A:
            row[dst] -= q * row[src]
        for row in V:
            row[dst] -= q * row[src]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, A[i][t] // A[t][t])
                    if A[i][t]:
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, A[t][j] // A[t][t])
                    if A[t][j]:
                        done = False
            if not done:
                best = None
                for i in range(t, m):
                    if A[i][t] and (best is None or abs(A[i][t]) < abs(A[best][t])):
                        best = i
                swap_rows(t, best)
                bestc = None
                for j in range(t, n):
                    if A[t][j] and (bestc is None or abs(A[t][j]) < abs(A[t][bestc])):
                        bestc = j
                swap_cols(t, bestc)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % A[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], -1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
    return SnfResult(U, A, V)


# ---------------------------------------------------------------------------
# Hermite normal form and kernels


def hermite_rows(rows: Iterable[Sequence[int]], ncols: int) -> list[list[int]]:
    """Canonical row-echelon basis over Z of the row span.

    Pivots are positive and entries above each pivot lie in ``[0, pivot)``,
    so two generator sets span the same lattice iff their forms coincide.
    """
    piv: dict[int, list[int]] = {}
    for r in rows:
        r = [int(x) for x in r]
        if len(r) != ncols:
            raise ValueError(f"row of length {len(r)} in ambient rank {ncols}")
        while True:
            c = next((i for i, x in enumerate(r) if x), None)
            if c is None:
                break
            b = piv.get(c)
            if b is None:
                piv[c] = r if r[c] > 0 else [-x for x in r]
                break
            if r[c] % b[c] == 0:
                q = r[c] // b[c]
                r = [x - q * y for x, y in zip(r, b)]
                continue
            g, s, t = xgcd(b[c], r[c])
            rb, rr = b[c] // g, r[c] // g
            piv[c] = [s * x + t * y for x, y in zip(b, r)]
            r = [rr * x - rb * y for x, y in zip(b, r)]
    order = sorted(piv)
    out = [piv[c] for c in order]
    for i, c in enumerate(order):
        p = out[i][c]
        for j in range(i):
            q = out[j][c] // p
            if q:
                out[j] = [x - q * y for x, y in zip(out[j], out[i])]
    return out


def _reduce_to_single(vectors: list[list[int]], values: list[int]) -> int:
    """Unimodular Euclid on ``vectors`` so that at most one ``values`` entry is nonzero.

    Operates in place; returns the index of the surviving nonzero value (or -1).
    """
    active = [j for j, w in enumerate(values) if w]
    while len(active) > 1:
        j0 = min(active, key=lambda j: abs(values[j]))
        w0 = values[j0]
        v0 = vectors[j0]
        nxt = [j0]
        for j in active:
            if j == j0:
                continue
            q = values[j] // w0
            # nearest quotient keeps entries small
            if 2 * abs(values[j] - q * w0) > abs(w0):
                q += 1
            if q:
                vectors[j] = [a - q * b for a, b in zip(vectors[j], v0)]
                values[j] -= q * w0
            if values[j]:
                nxt.append(j)
        active = nxt
    return active[0] if active else -1


def _as_sparse(row) -> dict[int, int | Fraction]:
    if isinstance(row, Mapping):
        return {c: v for c, v in row.items() if v}
    return {c: v for c, v in enumerate(row) if v}


def _integer_sparse(row: dict) -> dict[int, int]:
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    return {c: int(v * den) for c, v in row.items()}


def integer_kernel(rows: Iterable, ncols: int) -> list[list[int]]:
    """Z-basis of ``{x in Z^ncols : r . x = 0 for every row r}``.

    Rows may be dense sequences or sparse ``{column: value}`` maps with
    rational entries. Equations are absorbed one at a time, so tall sparse
    systems stay cheap once the kernel has shrunk. The result is saturated and
    returned in canonical Hermite form.
    """
    basis = identity(ncols)
    for row in rows:
        if not basis:
            break
        e = _integer_sparse(_as_sparse(row))
        if not e:
            continue
        values = [sum(v * b[c] for c, v in e.items()) for b in basis]
        if not any(values):
            continue
        j = _reduce_to_single(basis, values)
        del basis[j]
    return hermite_rows(basis, ncols)


# ---------------------------------------------------------------------------
# Lattices


@dataclass(frozen=True)
class Lattice:
    """Finitely generated subgroup of Z^n, stored by its canonical Hermite basis."""

    ambient_rank: int
    generators: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        basis = hermite_rows(self.generators, self.ambient_rank)
        object.__setattr__(self, "generators", tuple(tuple(r) for r in basis))

    @classmethod
    def full(cls, n: int) -> Lattice:
        return cls(n, tuple(tuple(r) for r in identity(n)))

    @classmethod
    def zero(cls, n: int) -> Lattice:
        return cls(n, ())

    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def basis(self) -> list[list[int]]:
        return [list(r) for r in self.generators]

    def _check(self, other: Lattice):
        if other.ambient_rank != self.ambient_rank:
            raise ValueError(f"ambient rank mismatch: {self.ambient_rank} vs {other.ambient_rank}")

    def coordinates(self, v: Sequence, ring: BaseRing = ZZ) -> list | None:
        """Coordinates of ``v`` in the canonical basis, or None if ``v`` is not in L (x) ring."""
        if len(v) != self.ambient_rank:
            raise ValueError("vector length does not match ambient rank")
        r = [Fraction(x) for x in v]
        coords = []
        for b in self.generators:
            c = next(i for i, x in enumerate(b) if x)
            q = r[c] / b[c]
            if not ring.contains(q):
                return None
            coords.append(clean(q))
            if q:
                r = [x - q * y for x, y in zip(r, b)]
        if any(r):
            return None
        return coords

    def contains(self, v: Sequence, ring: BaseRing = ZZ) -> bool:
        return self.coordinates(v, ring) is not None

    def contains_lattice(self, other: Lattice, ring: BaseRing = ZZ) -> bool:
        self._check(other)
        return all(self.contains(g, ring) for g in other.generators)

    def equals_over(self, other: Lattice, ring: BaseRing = ZZ) -> bool:
        if ring == ZZ:
            return self == other
        return self.contains_lattice(other, ring) and other.contains_lattice(self, ring)

    def _snf(self) -> SnfResult:
        return smith_normal_form(self.basis)

    def saturate(self) -> Lattice:
        if not self.generators:
            return self
        res = self._snf()
        Vinv = inverse(res.V)
        k = len(res.elementary_divisors)
        return Lattice(self.ambient_rank, tuple(tuple(int(x) for x in Vinv[i]) for i in range(k)))

    def index_in_saturation(self) -> int:
        out = 1
        for d in self._snf().elementary_divisors:
            out *= d
        return out

    def is_saturated(self) -> bool:
        return self.index_in_saturation() == 1

    def complement(self) -> list[list[int]]:
        """Rows completing the basis of a saturated lattice to a basis of Z^n."""
        if not self.is_saturated():
            raise ValueError("lattice is not saturated; no unimodular completion")
        n = self.ambient_rank
        if not self.generators:
            return identity(n)
        Vinv = inverse(self._snf().V)
        return [[int(x) for x in Vinv[i]] for i in range(self.rank, n)]

    def __add__(self, other: Lattice) -> Lattice:
        self._check(other)
        return Lattice(self.ambient_rank, self.generators + other.generators)

    def scaled(self, m: int) -> Lattice:
        return Lattice(self.ambient_rank, tuple(tuple(m * x for x in r) for r in self.generators))

    def image(self, Phi: Sequence[Sequence]) -> Lattice:
        """Image under the row-vector map ``v -> v @ Phi`` (integral Phi)."""
        ncols = len(Phi[0]) if Phi else 0
        rows = matmul(self.basis, Phi) if self.generators else []
        return Lattice(ncols, tuple(tuple(int(x) for x in r) for r in rows))


def lattice_kernel(M: Sequence[Sequence]) -> Lattice:
    """``{x in Z^n : M x = 0}``; saturated by construction."""
    n = len(M[0]) if M else 0
    return Lattice(n, tuple(tuple(r) for r in integer_kernel(M, n)))


def lattice_saturate(L: Lattice) -> Lattice:
    return L.saturate()


def lattice_equal(L1: Lattice, L2: Lattice) -> bool:
    L1._check(L2)
    return L1 == L2


def lattice_contains(L: Lattice, v: Sequence) -> bool:
    return L.contains(v)


def row_lattice(M: Sequence[Sequence[int]], ncols: int | None = None) -> Lattice:
    if ncols is None:
        ncols = len(M[0]) if M else 0
    return Lattice(ncols, tuple(tuple(int(x) for x in r) for r in M))


# ---------------------------------------------------------------------------
# Solving over a base ring


@dataclass(frozen=True)
class NoSolution:
    """The system has no solution over the ring.

    ``obstruction`` is the gcd of the constant coordinate over the integer
    solution lattice of the homogenized system: 0 means inconsistent over Q,
    otherwise it is an integer that is not a unit in the ring.
    """

    ring: BaseRing
    obstruction: int

    def reason(self) -> str:
        if self.obstruction == 0:
            return "inconsistent over Q"
        return f"needs 1/{self.obstruction}, which is not in {self.ring}"


@dataclass(frozen=True)
class AffineSet:
    x0: list
    basis: list[list[int]] = field(default_factory=list)


def solve_over(ring: BaseRing, M: Sequence, b: Sequence, ncols: int | None = None):
    """Full solution set of ``M x = b`` with ``x`` in ``ring^ncols``.

    Rows of M are dense sequences or sparse ``{col: value}`` maps. The system
    is homogenized to ``[M | -b]`` and its integer kernel lattice computed; the
    gcd ``g`` of the constant coordinate across that lattice is the single
    elementary divisor deciding solvability: a solution exists iff ``g`` is a
    unit of the ring, and then ``x0 = (lattice vector with constant g) / g``.
    Homogeneous solutions are generated by the integer kernel of ``M``, which
    spans the ring-solutions because every localization of Z is flat.
    """
    rows = list(M)
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for an empty system")
        first = rows[0]
        if isinstance(first, Mapping):
            raise ValueError("ncols required for sparse rows")
        ncols = len(first)
    if len(rows) != len(b):
        raise ValueError(f"{len(rows)} equations but {len(b)} right-hand sides")
    hom = []
    for row, rhs in zip(rows, b):
        r = _as_sparse(row)
        if any(c < 0 or c >= ncols for c in r):
            raise ValueError("column index out of range")
        if rhs:
            r[ncols] = -Fraction(rhs)
        hom.append(r)
    K = integer_kernel(hom, ncols + 1)
    t = [k[ncols] for k in K]
    j = _reduce_to_single(K, t)
    if j < 0:
        return NoSolution(ring, 0)
    g = t[j]
    if g < 0:
        K[j] = [-x for x in K[j]]
        g = -g
    if not ring.is_unit(g):
        return NoSolution(ring, g)
    x0 = [clean(Fraction(x, g)) for x in K[j][:ncols]]
    homog = hermite_rows([k[:ncols] for i, k in enumerate(K) if i != j], ncols)
    return AffineSet(x0, homog)
