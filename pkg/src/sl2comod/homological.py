"""Exact sequences, sub/quotient comodules, Clebsch-Gordan filtrations and sections."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .comodule import (
    Comodule, ComoduleError, ComoduleMorphism, base_change, classical_dual, direct_sum,
    induced_comodules, is_subcomodule, morphism_check, standard_comodule, sym_power,
    sym_transpose_witness, symmetric_power, tensor, transpose_comodule, verify_comodule,
)
from .isotest import find_isomorphism, intertwining_equations
from .lattice import (
    Lattice, NoSolution, det, identity, integer_kernel, inverse, matmul, row_lattice, solve_over,
)
from .rings import BaseRing, ZZ, QQ, clean


class FiltrationError(RuntimeError):
    """A step that the theory guarantees has failed."""


@lru_cache(maxsize=None)
def sym(n: int, ring: BaseRing = ZZ) -> Comodule:
    return sym_power(n, ring)


@lru_cache(maxsize=None)
def sym_tensor_product(n: int, m: int, ring: BaseRing = ZZ) -> Comodule:
    return tensor(sym(n, ring), sym(m, ring))


# ---------------------------------------------------------------------------
# the two maps of the exact sequence


def mult_map(n: int, m: int, ring: BaseRing = ZZ) -> ComoduleMorphism:
    """Multiplication Sym^n (x) Sym^m -> Sym^(n+m) in monomial bases."""
    if n < 0 or m < 0:
        raise ValueError("degrees must be non-negative")
    Phi = [[0] * (n + m + 1) for _ in range((n + 1) * (m + 1))]
    for i in range(n + 1):
        for j in range(m + 1):
            Phi[i * (m + 1) + j][i + j] = 1
    return ComoduleMorphism(sym_tensor_product(n, m, ring), sym(n + m, ring), Phi)


def z_map(n: int, m: int, ring: BaseRing = ZZ) -> ComoduleMorphism:
    """Multiplication by z = e1 (x) e2 - e2 (x) e1 from Sym^(n-1) (x) Sym^(m-1) to Sym^n (x) Sym^m."""
    if n < 1 or m < 1:
        raise ValueError("z_map needs n, m >= 1")
    Phi = [[0] * ((n + 1) * (m + 1)) for _ in range(n * m)]
    # basis index = exponent of e2 in each factor
    for q in range(n):
        for t in range(m):
            row = Phi[q * m + t]
            row[q * (m + 1) + t + 1] += 1
            row[(q + 1) * (m + 1) + t] -= 1
    return ComoduleMorphism(sym_tensor_product(n - 1, m - 1, ring), sym_tensor_product(n, m, ring), Phi)


# ---------------------------------------------------------------------------
# exactness


def row_kernel(Phi: Sequence[Sequence], nrows: int) -> Lattice:
    """``{v : v @ Phi = 0}`` as a saturated lattice."""
    columns = [[Phi[i][j] for i in range(nrows)] for j in range(len(Phi[0]) if Phi else 0)]
    return Lattice(nrows, tuple(tuple(v) for v in integer_kernel(columns, nrows)))


def image_lattice(Phi: Sequence[Sequence], ncols: int) -> Lattice:
    return row_lattice([[int(x) for x in row] for row in Phi], ncols)


@dataclass
class ExactnessReport:
    ring: BaseRing
    morphisms_ok: bool
    injective: bool
    surjective: bool
    junctions: list[dict] = field(default_factory=list)

    @property
    def exact(self) -> bool:
        return (self.morphisms_ok and self.injective and self.surjective
                and all(j["image_equals_kernel"] for j in self.junctions))

    def to_json(self) -> dict:
        return {
            "ring": str(self.ring),
            "exact": self.exact,
            "morphisms_ok": self.morphisms_ok,
            "injective": self.injective,
            "surjective": self.surjective,
            "junctions": self.junctions,
        }


def _surjective_over(Phi, n_target: int, ring: BaseRing) -> bool:
    im = image_lattice(Phi, n_target)
    return im.equals_over(Lattice.full(n_target), ring)


def check_exact(maps: Sequence[ComoduleMorphism]) -> ExactnessReport:
    """Exactness of ``0 -> A0 -> A1 -> ... -> Ak -> 0`` given the k maps."""
    if not maps:
        raise ValueError("need at least one map")
    for f, g in zip(maps, maps[1:]):
        if f.target.rank != g.source.rank or f.target.tags() != g.source.tags():
            raise ComoduleError("maps are not composable")
    ring = maps[0].source.ring
    morphisms_ok = all(f.check().passed for f in maps)
    first = maps[0]
    injective = row_kernel(first.matrix, first.source.rank).rank == 0
    last = maps[-1]
    surjective = _surjective_over(last.matrix, last.target.rank, ring)
    junctions = []
    for k, (f, g) in enumerate(zip(maps, maps[1:])):
        n = f.target.rank
        im = image_lattice(f.matrix, n)
        ker = row_kernel(g.matrix, n)
        junctions.append({
            "position": k + 1,
            "image_rank": im.rank,
            "kernel_rank": ker.rank,
            "image_saturation_index": im.index_in_saturation(),
            "image_equals_kernel": im.equals_over(ker, ring),
        })
    return ExactnessReport(ring, morphisms_ok, injective, surjective, junctions)


def cg_exact_sequence(n: int, m: int, ring: BaseRing = ZZ) -> ExactnessReport:
    return check_exact([z_map(n, m, ring), mult_map(n, m, ring)])


# ---------------------------------------------------------------------------
# sub and quotient comodules


@dataclass
class SubQuotient:
    sub: Comodule
    quot: Comodule
    basis: list[list[int]]

    @property
    def inclusion(self) -> list[list[int]]:
        """Rows: the sublattice basis inside the ambient comodule."""
        return self.basis[: self.sub.rank]

    @property
    def projection(self) -> list[list]:
        """Matrix of ambient -> quotient."""
        Binv = inverse(self.basis)
        return [row[self.sub.rank:] for row in Binv]


def sub_quotient(c: Comodule, L: Lattice) -> SubQuotient:
    if not L.is_saturated():
        raise ComoduleError("sublattice is not saturated; the quotient would have torsion")
    if not is_subcomodule(c, L):
        raise ComoduleError("lattice is not a subcomodule")
    sub, quot, B = induced_comodules(c, L)
    for part in (sub, quot):
        rep = verify_comodule(part)
        if not rep.passed:
            raise FiltrationError(f"induced comodule fails {rep.axiom} at {rep.entry}")
    return SubQuotient(sub, quot, B)


# ---------------------------------------------------------------------------
# filtrations


@dataclass
class FiltrationStep:
    lattice: Lattice
    quotient: Comodule
    degree: int
    witness: list[list]  # quotient -> Sym^degree


@dataclass
class Filtration:
    """Chain full = F_0 >= F_1 >= ... >= F_k > 0 with quotients F_i / F_(i+1)."""

    comodule: Comodule
    steps: list[FiltrationStep]
    splitting: list[list] | None = None  # direct sum of Sym^(d_i) -> comodule

    @property
    def degrees(self) -> list[int]:
        return [s.degree for s in self.steps]

    @property
    def lattices(self) -> list[Lattice]:
        return [s.lattice for s in self.steps] + [Lattice.zero(self.comodule.rank)]

    def verify(self) -> bool:
        c = self.comodule
        ring = c.ring
        lats = self.lattices
        if lats[0] != Lattice.full(c.rank):
            return False
        for i, step in enumerate(self.steps):
            L, nxt = lats[i], lats[i + 1]
            if not (L.is_saturated() and is_subcomodule(c, L) and L.contains_lattice(nxt)):
                return False
            target = sym(step.degree, ring)
            if not morphism_check(step.witness, step.quotient, target).passed:
                return False
            if not ring.is_unit(det(step.witness)):
                return False
        if sum(s.quotient.rank for s in self.steps) != c.rank:
            return False
        if self.splitting is not None:
            total = direct_sum(*[sym(d, ring) for d in self.degrees])
            if not morphism_check(self.splitting, total, c).passed:
                return False
            if not ring.is_unit(det(self.splitting)):
                return False
        return True

    def to_json(self) -> dict:
        return {
            "ring": str(self.comodule.ring),
            "rank": self.comodule.rank,
            "degrees": self.degrees,
            "lattices": [[list(g) for g in L.generators] for L in self.lattices],
            "witnesses": [[[str(x) for x in row] for row in s.witness] for s in self.steps],
            "split": self.splitting is not None,
        }


def _relative_lattice(outer: Lattice, inner: Lattice) -> Lattice:
    """Coordinates of ``inner`` in the canonical basis of ``outer``."""
    rows = []
    for g in inner.generators:
        coords = outer.coordinates(g)
        if coords is None:
            raise FiltrationError("filtration is not nested")
        rows.append(tuple(int(x) for x in coords))
    return Lattice(outer.rank, tuple(rows))


def filtration_from_lattices(W: Comodule, lattices: Sequence[Lattice], degrees: Sequence[int],
                             split: bool | None = None) -> Filtration:
    """Quotients and witnesses for a decreasing chain ``lattices`` (F_0 first, 0 omitted)."""
    ring = W.ring
    chain = list(lattices) + [Lattice.zero(W.rank)]
    steps = []
    for i, (L, deg) in enumerate(zip(lattices, degrees)):
        if not L.is_saturated():
            raise FiltrationError(f"F_{i} is not saturated (index {L.index_in_saturation()})")
        sq = sub_quotient(W, L)
        rel = _relative_lattice(L, chain[i + 1])
        inner = sub_quotient(sq.sub, rel)
        quot = inner.quot
        verdict = find_isomorphism(quot, sym(deg, ring))
        if not verdict.isomorphic:
            raise FiltrationError(f"quotient F_{i}/F_{i + 1} is not isomorphic to Sym^{deg}: {verdict.kind}")
        steps.append(FiltrationStep(L, quot, deg, verdict.witness))
    filt = Filtration(W, steps)
    if split if split is not None else ring.is_field:
        filt.splitting = _split(filt)
    return filt


def _split(filt: Filtration) -> list[list]:
    """Direct-sum isomorphism from sections of each F_i -> F_i / F_(i+1)."""
    W = filt.comodule
    ring = W.ring
    chain = filt.lattices
    rows = []
    for i, step in enumerate(filt.steps):
        L = chain[i]
        sq = sub_quotient(W, L)
        inner = sub_quotient(sq.sub, _relative_lattice(L, chain[i + 1]))
        p = ComoduleMorphism(sq.sub, inner.quot, inner.projection)
        sec = find_section(p)
        if not isinstance(sec, Section):
            raise FiltrationError(f"no section for step {i}: {sec.reason()}")
        # Sym^d -> quotient -> F_i -> W
        to_quot = [[clean(x) for x in r] for r in inverse(step.witness)]
        rows.extend(matmul(matmul(to_quot, sec.matrix), L.basis))
    total = direct_sum(*[sym(d, ring) for d in filt.degrees])
    if not morphism_check(rows, total, W).passed or not ring.is_unit(det(rows)):
        raise FiltrationError("assembled splitting is not an isomorphism")
    return rows


def cg_filtration(n: int, m: int, ring: BaseRing = ZZ, split: bool | None = None) -> Filtration:
    """Universal Clebsch-Gordan filtration of Sym^n (x) Sym^m (requires n <= m).

    F_i is the image of the i-fold composite of z-maps out of
    Sym^(n-i) (x) Sym^(m-i); F_i / F_(i+1) is isomorphic to Sym^(n+m-2i).
    """
    if not 0 <= n <= m:
        raise ValueError("cg_filtration needs 0 <= n <= m")
    W = sym_tensor_product(n, m, ring)
    lattices = [Lattice.full(W.rank)]
    composite = None
    for i in range(1, n + 1):
        f = z_map(n - i + 1, m - i + 1, ring).matrix
        composite = f if composite is None else matmul(f, composite)
        lattices.append(image_lattice(composite, W.rank))
    degrees = [n + m - 2 * i for i in range(n + 1)]
    return filtration_from_lattices(W, lattices, degrees, split)


# ---------------------------------------------------------------------------
# sections


@dataclass
class Section:
    matrix: list[list]

    def to_json(self) -> dict:
        return {"section": [[str(x) for x in row] for row in self.matrix]}


@dataclass
class NoSection:
    ring: BaseRing
    obstruction: int

    def reason(self) -> str:
        if self.obstruction == 0:
            return "no section even over Q"
        return f"a section needs 1/{self.obstruction}, which is not in {self.ring}"

    def to_json(self) -> dict:
        return {"no_section": True, "obstruction": self.obstruction, "reason": self.reason()}


def find_section(p: ComoduleMorphism) -> Section | NoSection:
    """Comodule map s with ``s then p = id`` over p's ring, or the obstruction.

    Unknowns are the entries of S (target rank x source rank). The identity
    S @ P = I and the intertwining identity M_W @ S = S @ M_V are stacked
    into one linear system and handed to ``solve_over``.
    """
    V, W = p.source, p.target
    ring = V.ring
    P = p.matrix
    nV, nW = V.rank, W.rank
    for k in range(nW):
        # e_k must be in the image of p over the ring
        rows = [[P[i][k2] for i in range(nV)] for k2 in range(nW)]
        rhs = [1 if k2 == k else 0 for k2 in range(nW)]
        if isinstance(solve_over(ring, rows, rhs, nV), NoSolution):
            raise ComoduleError("map is not surjective over its ring")
    equations, variables = intertwining_equations(W, V)
    index = {v: t for t, v in enumerate(variables)}
    rhs = [0] * len(equations)
    for a in range(nW):
        for c in range(nW):
            eq = {}
            for b in range(nV):
                t = index.get((a, b))
                if t is not None and P[b][c]:
                    eq[t] = eq.get(t, 0) + P[b][c]
            equations.append(eq)
            rhs.append(1 if a == c else 0)
    sol = solve_over(ring, equations, rhs, len(variables))
    if isinstance(sol, NoSolution):
        return NoSection(ring, sol.obstruction)
    S = [[0] * nV for _ in range(nW)]
    for x, (a, b) in zip(sol.x0, variables):
        S[a][b] = x
    if matmul(S, P) != identity(nW) or not morphism_check(S, W, V).passed:
        raise FiltrationError("section failed re-verification")
    return Section(S)


def pi_map(n: int, ring: BaseRing = ZZ) -> ComoduleMorphism:
    """The surjection V (x) Sym^n -> Sym^(n+1)."""
    return mult_map(1, n, ring)


def expected_section(n: int, ring: BaseRing) -> bool:
    """Whether V (x) Sym^n -> Sym^(n+1) splits over ``ring``: iff n+1 is a unit."""
    return ring.is_unit(n + 1)


# ---------------------------------------------------------------------------
# good filtrations of tensor products


FACTOR_KINDS = ("sym", "symdual", "symt")


def symmetric_power_map(Phi: Sequence[Sequence], n: int) -> list[list]:
    """Matrix of Sym^n(phi) on monomial bases, for a square matrix Phi."""
    from .comodule import monomial_basis

    r = len(Phi)
    basis = monomial_basis(r, n)
    index = {a: i for i, a in enumerate(basis)}
    out = []
    for alpha in basis:
        acc = {(0,) * r: 1}
        for k, e in enumerate(alpha):
            for _ in range(e):
                nxt: dict = {}
                for beta, cf in acc.items():
                    for j in range(r):
                        if Phi[k][j]:
                            gamma = beta[:j] + (beta[j] + 1,) + beta[j + 1:]
                            nxt[gamma] = nxt.get(gamma, 0) + cf * Phi[k][j]
                acc = nxt
        row = [0] * len(basis)
        for beta, cf in acc.items():
            row[index[beta]] = cf
        out.append(row)
    return out


def factor_comodule(kind: str, degree: int, ring: BaseRing = ZZ) -> tuple[Comodule, list[list]]:
    """One tensor factor and an isomorphism Sym^degree -> it.

    ``sym`` is Sym^n(V); ``symdual`` is Sym^n(V*) reached through Sym^n(phi);
    ``symt`` is the transpose comodule of Sym^n(V), reached by
    v_i -> (-1)^i x_(n-i).
    """
    if degree < 0:
        raise ValueError("degree must be non-negative")
    if kind == "sym":
        return sym(degree, ring), identity(degree + 1)
    if kind == "symdual":
        dual, phi = classical_dual(ring)
        return symmetric_power(dual, degree), symmetric_power_map(phi, degree)
    if kind == "symt":
        return transpose_comodule(sym(degree, ring)), sym_transpose_witness(degree)
    raise ValueError(f"unsupported tensor factor {kind!r}; expected one of {FACTOR_KINDS}")


def kron(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list]:
    return [[a * b for a in ra for b in rb] for ra in A for rb in B]


def swap_matrix(n1: int, n2: int) -> list[list[int]]:
    """Permutation taking e_i (x) f_j in X (x) Y to f_j (x) e_i in Y (x) X."""
    N = n1 * n2
    P = [[0] * N for _ in range(N)]
    for i in range(n1):
        for j in range(n2):
            P[i * n2 + j][j * n1 + i] = 1
    return P


def good_filtration_of_tensor(factor1: tuple[str, int], factor2: tuple[str, int],
                              ring: BaseRing = ZZ) -> Filtration:
    """Good filtration of W1 (x) W2 transported from the universal CG filtration."""
    (k1, a), (k2, b) = factor1, factor2
    C1, psi1 = factor_comodule(k1, a, ring)
    C2, psi2 = factor_comodule(k2, b, ring)
    W = tensor(C1, C2)
    iso = kron(psi1, psi2)  # Sym^a (x) Sym^b -> W
    base = sym_tensor_product(a, b, ring)
    if not morphism_check(iso, base, W).passed or not ring.is_unit(det(iso)):
        raise FiltrationError("factor isomorphisms do not assemble to a comodule isomorphism")
    lo, hi = min(a, b), max(a, b)
    cg = cg_filtration(lo, hi, ring, split=False)
    if a > b:
        # Sym^b (x) Sym^a -> Sym^a (x) Sym^b -> W
        iso = matmul(swap_matrix(b + 1, a + 1), iso)
    lattices = [L.image(iso) for L in cg.lattices[:-1]]
    return filtration_from_lattices(W, lattices, cg.degrees, split=False)
