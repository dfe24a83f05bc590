"""Homomorphism lattices between comodules and exact isomorphism decisions."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .comodule import (
    Comodule, ComoduleError, _check_same_tags, base_change, morphism_check, torus_weights,
)
from .hopf import _add_into
from .lattice import det, integer_kernel, inverse
from .rings import BaseRing, clean


def intertwining_equations(c1: Comodule, c2: Comodule, prune: bool = True):
    """Sparse linear equations in the entries of Phi for ``M1 @ Phi == Phi @ M2``.

    Returns ``(equations, variables)`` where ``variables`` lists the
    ``(row, col)`` entries of Phi kept as unknowns. When both comodules have
    torus-diagonal bases, entries joining different weights are forced to be
    zero (compare the restriction of the identity to the diagonal torus), so
    they are left out.
    """
    n1, n2 = c1.rank, c2.rank
    w1 = torus_weights(c1) if prune else None
    w2 = torus_weights(c2) if prune else None
    if w1 is not None and w2 is not None:
        variables = [(j, k) for j in range(n1) for k in range(n2) if w1[j] == w2[k]]
    else:
        variables = [(j, k) for j in range(n1) for k in range(n2)]
    index = {v: t for t, v in enumerate(variables)}
    by_col: dict[int, list[int]] = {}
    by_row: dict[int, list[int]] = {}
    for (j, k) in variables:
        by_col.setdefault(k, []).append(j)
        by_row.setdefault(j, []).append(k)
    M1, M2 = c1.matrix, c2.matrix
    equations = []
    for i in range(n1):
        for k in range(n2):
            eq: dict = {}
            # (M1 Phi)_ik = sum_j M1[i][j] Phi[j][k]
            for j in by_col.get(k, ()):
                var = index[(j, k)]
                for m, cf in M1[i][j].terms.items():
                    _add_into(eq.setdefault(m, {}), var, cf)
            # (Phi M2)_ik = sum_j Phi[i][j] M2[j][k]
            for j in by_row.get(i, ()):
                var = index[(i, j)]
                for m, cf in M2[j][k].terms.items():
                    _add_into(eq.setdefault(m, {}), var, -cf)
            equations.extend(e for e in eq.values() if e)
    return equations, variables


def _unflatten(vec: Sequence, variables, n1: int, n2: int) -> list[list]:
    Phi = [[0] * n2 for _ in range(n1)]
    for x, (j, k) in zip(vec, variables):
        Phi[j][k] = clean(x)
    return Phi


@dataclass
class HomLattice:
    source: Comodule
    target: Comodule
    basis: list[list[list[int]]]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def combination(self, coeffs: Sequence) -> list[list]:
        n1, n2 = self.source.rank, self.target.rank
        out = [[0] * n2 for _ in range(n1)]
        for t, B in zip(coeffs, self.basis):
            if t:
                for i in range(n1):
                    for j in range(n2):
                        out[i][j] += t * B[i][j]
        return [[clean(x) for x in row] for row in out]

    def to_json(self) -> dict:
        return {"rank": self.rank, "basis": self.basis}


def intertwiner_lattice(c1: Comodule, c2: Comodule) -> HomLattice:
    """Integer lattice of intertwiners, in canonical Hermite form.

    The integer solutions of the homogeneous system also generate the
    solutions over any localization of Z, since localization is flat.
    """
    _check_same_tags(c1, c2)
    equations, variables = intertwining_equations(c1, c2)
    K = integer_kernel(equations, len(variables))
    basis = [_unflatten(v, variables, c1.rank, c2.rank) for v in K]
    return HomLattice(c1, c2, basis)


@dataclass
class IsoVerdict:
    kind: str  # "isomorphic", "not_isomorphic" or "unknown"
    ring: BaseRing
    witness: list[list] | None = None
    certificate: dict = field(default_factory=dict)

    @property
    def isomorphic(self) -> bool:
        return self.kind == "isomorphic"

    def to_json(self) -> dict:
        out: dict = {"verdict": self.kind, "ring": str(self.ring)}
        if self.witness is not None:
            out["witness"] = [[str(x) for x in row] for row in self.witness]
        if self.certificate:
            out["certificate"] = _jsonable(self.certificate)
        return out


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (int, str, bool)) or obj is None:
        return obj
    return str(obj)


def _isomorphic(c1: Comodule, c2: Comodule, Phi, **cert) -> IsoVerdict:
    report = morphism_check(Phi, c1, c2)
    d = det(Phi)
    if not report.passed or not c1.ring.is_unit(d):
        raise AssertionError("isomorphism witness failed re-verification")
    cert = {"determinant": d, **cert}
    return IsoVerdict("isomorphic", c1.ring, Phi, cert)


def find_isomorphism(c1: Comodule, c2: Comodule, bound: int = 3) -> IsoVerdict:
    """Decide whether c1 and c2 are isomorphic over their common ring.

    Exact when the Hom lattice has rank 0 or 1; with a larger Hom lattice
    integer combinations of max-norm at most ``bound`` are tried and
    ``unknown`` is returned if none is invertible.
    """
    _check_same_tags(c1, c2)
    ring = c1.ring
    if c1.rank != c2.rank:
        return IsoVerdict("not_isomorphic", ring, None,
                          {"reason": "ranks differ", "ranks": [c1.rank, c2.rank]})
    if c1.rank == 0:
        return IsoVerdict("isomorphic", ring, [], {"determinant": 1})
    hom = intertwiner_lattice(c1, c2)
    if hom.rank == 0:
        return IsoVerdict("not_isomorphic", ring, None,
                          {"reason": "no nonzero intertwiner", "hom_rank": 0})
    if hom.rank == 1:
        S = hom.basis[0]
        d = det(S)
        if ring.is_unit(d):
            return _isomorphic(c1, c2, S, hom_rank=1)
        # every intertwiner is t*S with t in the ring; det(t*S) = t^n det(S)
        # is a unit only if det(S) already is
        return IsoVerdict("not_isomorphic", ring, None, {
            "reason": "generator determinant is not a unit",
            "hom_rank": 1,
            "generator": S,
            "determinant": d,
            "non_unit_part": ring.nonunit_part(d) if d else 0,
        })
    for coeffs in itertools.product(range(-bound, bound + 1), repeat=hom.rank):
        if not any(coeffs):
            continue
        Phi = hom.combination(coeffs)
        if ring.is_unit(det(Phi)):
            return _isomorphic(c1, c2, Phi, hom_rank=hom.rank, coefficients=list(coeffs))
    return IsoVerdict("unknown", ring, None, {
        "reason": f"no invertible combination with coefficients bounded by {bound}",
        "hom_rank": hom.rank,
    })


def recheck_verdict(verdict: IsoVerdict, c1: Comodule, c2: Comodule) -> bool:
    """Independently re-validate a verdict's witness or certificate."""
    if verdict.kind == "isomorphic":
        if c1.rank == 0:
            return c2.rank == 0
        return (morphism_check(verdict.witness, c1, c2).passed
                and c1.ring.is_unit(det(verdict.witness)))
    if verdict.kind == "not_isomorphic":
        cert = verdict.certificate
        if cert.get("reason") == "ranks differ":
            return c1.rank != c2.rank
        hom = intertwiner_lattice(c1, c2)
        if hom.rank != cert.get("hom_rank"):
            return False
        if hom.rank == 0:
            return True
        S = cert["generator"]
        return (hom.rank == 1 and hom.basis[0] == S
                and morphism_check(S, c1, c2).passed
                and not c1.ring.is_unit(det(S)))
    return True


@dataclass
class Classification:
    ring: BaseRing
    names: list[str]
    table: list[list[IsoVerdict]]

    def classes(self) -> list[list[int]]:
        """Connected components of the ``isomorphic`` relation."""
        n = len(self.names)
        parent = list(range(n))

        def find(a):
            while parent[a] != a:
                a = parent[a]
            return a

        for i in range(n):
            for j in range(n):
                if self.table[i][j].isomorphic:
                    parent[find(i)] = find(j)
        groups: dict[int, list[int]] = {}
        for i in range(n):
            groups.setdefault(find(i), []).append(i)
        return sorted(groups.values())

    def all_distinct(self) -> bool:
        n = len(self.names)
        return all(self.table[i][j].kind == "not_isomorphic"
                   for i in range(n) for j in range(n) if i != j)

    def all_isomorphic(self) -> bool:
        return all(v.isomorphic for row in self.table for v in row)

    def to_json(self) -> dict:
        return {
            "ring": str(self.ring),
            "names": self.names,
            "table": [[v.to_json() for v in row] for row in self.table],
            "classes": [[self.names[i] for i in cls] for cls in self.classes()],
        }


def pairwise_classification(cs: Sequence[Comodule], ring: BaseRing | None = None,
                            names: Sequence[str] | None = None, bound: int = 3) -> Classification:
    """Symmetric table of isomorphism verdicts, optionally after base change."""
    if ring is not None:
        cs = [c if c.ring == ring else base_change(c, ring) for c in cs]
    else:
        ring = cs[0].ring
    names = list(names) if names is not None else [f"c{i}" for i in range(len(cs))]
    n = len(cs)
    table: list[list[IsoVerdict | None]] = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = find_isomorphism(cs[i], cs[j], bound)
            table[i][j] = v
            if i == j:
                continue
            if v.isomorphic:
                back = [[clean(x) for x in row] for row in inverse(v.witness)]
                table[j][i] = _isomorphic(cs[j], cs[i], back, **{
                    k: val for k, val in v.certificate.items() if k != "determinant"})
            else:
                table[j][i] = find_isomorphism(cs[j], cs[i], bound)
    return Classification(ring, names, table)  # type: ignore[arg-type]
