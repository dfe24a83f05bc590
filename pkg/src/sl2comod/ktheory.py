"""Grothendieck-group classes in the basis [Sym^d], computed from characters."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .comodule import Comodule, character, tensor
from .homological import sym_tensor_product

Laurent = dict[int, int]


def laurent_mul(a: Mapping[int, int], b: Mapping[int, int]) -> Laurent:
    out: Laurent = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return {k: v for k, v in out.items() if v}


def laurent_add(a: Mapping[int, int], b: Mapping[int, int], scale: int = 1) -> Laurent:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + scale * v
    return {k: v for k, v in out.items() if v}


def sym_character(d: int) -> Laurent:
    """q^-d + q^(-d+2) + ... + q^d."""
    return {-d + 2 * i: 1 for i in range(d + 1)}


def render_laurent(chi: Mapping[int, int]) -> str:
    if not chi:
        return "0"
    parts = []
    for k in sorted(chi):
        c = chi[k]
        if k == 0:
            parts.append(str(c))
            continue
        mono = "q" if k == 1 else f"q^{k}"
        prefix = "" if c == 1 else "-" if c == -1 else f"{c}·"
        parts.append(prefix + mono)
    return " + ".join(parts).replace("+ -", "- ")


@dataclass(frozen=True)
class KClass:
    """Signed combination of the classes [Sym^d]."""

    terms: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", {int(d): int(c) for d, c in self.terms.items() if c})
        if any(d < 0 for d in self.terms):
            raise ValueError("degrees must be non-negative")

    def __eq__(self, other) -> bool:
        if isinstance(other, Mapping):
            return self.terms == {d: c for d, c in other.items() if c}
        if not isinstance(other, KClass):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: KClass) -> KClass:
        return KClass(laurent_add(self.terms, other.terms))

    def __sub__(self, other: KClass) -> KClass:
        return KClass(laurent_add(self.terms, other.terms, -1))

    def __mul__(self, other: KClass) -> KClass:
        return character_peel(laurent_mul(self.character(), other.character()))

    def rank(self) -> int:
        return sum(c * (d + 1) for d, c in self.terms.items())

    def character(self) -> Laurent:
        out: Laurent = {}
        for d, c in self.terms.items():
            out = laurent_add(out, sym_character(d), c)
        return out

    def to_json(self) -> dict:
        return {str(d): self.terms[d] for d in sorted(self.terms)}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        text = " + ".join(f"{c}[Sym^{d}]" if c != 1 else f"[Sym^{d}]"
                          for d, c in sorted(self.terms.items(), reverse=True))
        return text.replace("+ -", "- ")


def character_peel(chi: Mapping[int, int]) -> KClass:
    """Write a symmetric character in the basis of characters of Sym^d."""
    chi = {k: v for k, v in chi.items() if v}
    for k, v in chi.items():
        if chi.get(-k, 0) != v:
            raise ValueError(f"character is not symmetric under q <-> 1/q (degree {k})")
    out: dict[int, int] = {}
    while chi:
        top = max(chi)
        if top < 0:
            raise ValueError("character is not symmetric")
        c = chi[top]
        out[top] = out.get(top, 0) + c
        chi = laurent_add(chi, sym_character(top), -c)
    return KClass(out)


def k_class(c: Comodule) -> KClass:
    return character_peel(character(c))


def virtual_cg_expected(n: int, m: int) -> KClass:
    lo = min(n, m)
    return KClass({n + m - 2 * i: 1 for i in range(lo + 1)})


def virtual_cg_check(n: int, m: int) -> bool:
    """[Sym^n][Sym^m] equals the sum of [Sym^(n+m-2i)] for i = 0..min(n, m)."""
    return k_class(sym_tensor_product(n, m)) == virtual_cg_expected(n, m)


def tensor_class(c1: Comodule, c2: Comodule) -> KClass:
    return k_class(tensor(c1, c2))
