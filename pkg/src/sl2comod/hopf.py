"""The coordinate Hopf algebra of SL2: A[x11, x12, x21, x22] / (x11 x22 - x12 x21 - 1).

Polynomials are kept in the normal form where no monomial is divisible by
x11*x22; the single relation x11 x22 -> x12 x21 + 1 makes this unique.
A monomial is an exponent tuple ``(a, b, c, d)`` for x11^a x12^b x21^c x22^d.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Iterable, Mapping

from .rings import clean

Mono = tuple[int, int, int, int]
ONE_MONO: Mono = (0, 0, 0, 0)
GENERATORS: dict[str, Mono] = {
    "x11": (1, 0, 0, 0),
    "x12": (0, 1, 0, 0),
    "x21": (0, 0, 1, 0),
    "x22": (0, 0, 0, 1),
}


class HopfVariant(Enum):
    STD = "std"
    OP = "op"

    @property
    def flipped(self) -> HopfVariant:
        return HopfVariant.OP if self is HopfVariant.STD else HopfVariant.STD

    @classmethod
    def parse(cls, text) -> HopfVariant:
        if isinstance(text, HopfVariant):
            return text
        return cls(str(text).lower())


# ---------------------------------------------------------------------------
# monomial level


@lru_cache(maxsize=None)
def normalize_mono(m: Mono) -> tuple[tuple[Mono, int], ...]:
    """Normal form of an arbitrary monomial as ``((mono, coeff), ...)``."""
    a, b, c, d = m
    k = min(a, d)
    if k == 0:
        return ((m, 1),)
    return tuple(((a - k, b + j, c + j, d - k), comb(k, j)) for j in range(k + 1))


@lru_cache(maxsize=None)
def mul_mono(m: Mono, n: Mono) -> tuple[tuple[Mono, int], ...]:
    return normalize_mono((m[0] + n[0], m[1] + n[1], m[2] + n[2], m[3] + n[3]))


def is_normal(m: Mono) -> bool:
    return m[0] == 0 or m[3] == 0


def antipode_mono(m: Mono) -> tuple[Mono, int]:
    a, b, c, d = m
    return (d, b, c, a), (-1) ** (b + c)


def transpose_mono(m: Mono) -> tuple[Mono, int]:
    a, b, c, d = m
    return (a, c, b, d), 1


def ttilde_mono(m: Mono) -> tuple[Mono, int]:
    a, b, c, d = m
    return (d, c, b, a), (-1) ** (b + c)


def counit_mono(m: Mono) -> int:
    return 1 if m[1] == 0 and m[2] == 0 else 0


def mono_degree(m: Mono) -> int:
    return sum(m)


def render_mono(m: Mono) -> str:
    parts = []
    for name, e in zip(("x11", "x12", "x21", "x22"), m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# polynomials


def _add_into(acc: dict, key, coeff) -> None:
    v = acc.get(key, 0) + coeff
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


class HopfPoly:
    """Element of R in normal form. Treat instances as immutable."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Mono, object] | None = None, *, raw: bool = True):
        if terms is None:
            self.terms: dict[Mono, object] = {}
        elif raw:
            acc: dict = {}
            for m, cf in terms.items():
                if not cf:
                    continue
                m = tuple(int(e) for e in m)
                if len(m) != 4 or min(m) < 0:
                    raise ValueError(f"bad exponent tuple {m}")
                for nm, k in normalize_mono(m):
                    _add_into(acc, nm, cf * k)
            self.terms = {m: clean(c) for m, c in acc.items()}
        else:
            self.terms = dict(terms)
        self._hash = None

    # constructors ------------------------------------------------------
    @classmethod
    def const(cls, c) -> HopfPoly:
        return cls({ONE_MONO: c}) if c else cls()

    @classmethod
    def gen(cls, name: str) -> HopfPoly:
        return cls({GENERATORS[name]: 1}, raw=False)

    @classmethod
    def monomial(cls, m: Mono, c=1) -> HopfPoly:
        return cls({m: c})

    # arithmetic --------------------------------------------------------
    def __add__(self, other) -> HopfPoly:
        other = _lift(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            _add_into(acc, m, c)
        return HopfPoly(acc, raw=False)

    __radd__ = __add__

    def __neg__(self) -> HopfPoly:
        return HopfPoly({m: -c for m, c in self.terms.items()}, raw=False)

    def __sub__(self, other) -> HopfPoly:
        return self + (-_lift(other))

    def __rsub__(self, other) -> HopfPoly:
        return _lift(other) - self

    def __mul__(self, other) -> HopfPoly:
        if not isinstance(other, HopfPoly):
            if not other:
                return HopfPoly()
            return HopfPoly({m: clean(c * other) for m, c in self.terms.items()}, raw=False)
        acc: dict = {}
        for m, c in self.terms.items():
            for n, e in other.terms.items():
                ce = c * e
                for p, k in mul_mono(m, n):
                    _add_into(acc, p, ce * k)
        return HopfPoly({m: clean(c) for m, c in acc.items()}, raw=False)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> HopfPoly:
        out = HopfPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    # comparisons -------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, HopfPoly):
            try:
                other = _lift(other)
            except TypeError:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # maps --------------------------------------------------------------
    def map_monomials(self, f: Callable[[Mono], tuple[Mono, int]]) -> HopfPoly:
        acc: dict = {}
        for m, c in self.terms.items():
            nm, s = f(m)
            _add_into(acc, nm, s * c)
        return HopfPoly(acc, raw=False)

    def antipode(self) -> HopfPoly:
        return self.map_monomials(antipode_mono)

    def transpose(self) -> HopfPoly:
        return self.map_monomials(transpose_mono)

    def ttilde(self) -> HopfPoly:
        return self.map_monomials(ttilde_mono)

    def counit(self):
        return clean(sum((c for m, c in self.terms.items() if counit_mono(m)), 0))

    def evaluate(self, g) -> object:
        """Value at the matrix ``g = [[g11, g12], [g21, g22]]``."""
        (g11, g12), (g21, g22) = g
        total = 0
        for (a, b, c, d), cf in self.terms.items():
            total += cf * g11 ** a * g12 ** b * g21 ** c * g22 ** d
        return clean(Fraction(total)) if isinstance(total, Fraction) else total

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def sorted_terms(self) -> list[tuple[Mono, object]]:
        return sorted(self.terms.items())

    def coefficients(self) -> list:
        return list(self.terms.values())

    def __repr__(self) -> str:
        return f"HopfPoly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for m, c in sorted(self.terms.items(), reverse=True):
            body = render_mono(m)
            if not body:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(body)
            elif c == -1:
                pieces.append("-" + body)
            else:
                pieces.append(f"{c}·{body}")
        return " + ".join(pieces).replace("+ -", "- ")


def _lift(x) -> HopfPoly:
    if isinstance(x, HopfPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return HopfPoly.const(x)
    raise TypeError(f"cannot treat {type(x).__name__} as a HopfPoly")


X11 = HopfPoly.gen("x11")
X12 = HopfPoly.gen("x12")
X21 = HopfPoly.gen("x21")
X22 = HopfPoly.gen("x22")
ONE = HopfPoly.const(1)
ZERO = HopfPoly()


def normalize(raw: Mapping[Mono, object]) -> HopfPoly:
    """Reduce a raw exponent->coefficient map to normal form."""
    return HopfPoly(raw)


def antipode(p: HopfPoly) -> HopfPoly:
    return p.antipode()


def counit(p: HopfPoly):
    return p.counit()


def transpose(p: HopfPoly) -> HopfPoly:
    return p.transpose()


def ttilde(p: HopfPoly) -> HopfPoly:
    return p.ttilde()


def hopf_map(kind: str, p: HopfPoly):
    kinds = {
        "antipode": antipode,
        "counit": counit,
        "transpose": transpose,
        "ttilde": ttilde,
    }
    try:
        return kinds[kind.lower()](p)
    except KeyError:
        raise ValueError(f"unknown Hopf map {kind!r}") from None


# ---------------------------------------------------------------------------
# tensors


class TensorPoly:
    """Element of R (x) R (or a higher tensor power) with every leg normalized."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, object] | None = None):
        self.terms: dict[tuple, object] = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def pure(cls, *legs: HopfPoly) -> TensorPoly:
        acc: dict = {(): 1}
        for leg in legs:
            nxt: dict = {}
            for k, c in acc.items():
                for m, e in leg.terms.items():
                    _add_into(nxt, k + (m,), c * e)
            acc = nxt
        return cls(acc)

    def __add__(self, other: TensorPoly) -> TensorPoly:
        acc = dict(self.terms)
        for k, c in other.terms.items():
            _add_into(acc, k, c)
        return TensorPoly(acc)

    def __sub__(self, other: TensorPoly) -> TensorPoly:
        acc = dict(self.terms)
        for k, c in other.terms.items():
            _add_into(acc, k, -c)
        return TensorPoly(acc)

    def __mul__(self, other: TensorPoly) -> TensorPoly:
        acc: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                partial = [((), c1 * c2)]
                for m, n in zip(k1, k2):
                    partial = [(key + (p,), c * e) for key, c in partial for p, e in mul_mono(m, n)]
                for key, c in partial:
                    _add_into(acc, key, c)
        return TensorPoly(acc)

    def flip(self) -> TensorPoly:
        return TensorPoly({k[::-1]: c for k, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return {k: clean(v) for k, v in self.terms.items()} == {k: clean(v) for k, v in other.terms.items()}

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        inner = " + ".join(
            f"{c}·" + " ⊗ ".join(render_mono(m) or "1" for m in k)
            for k, c in sorted(self.terms.items())
        )
        return f"TensorPoly({inner or '0'})"


def _gen_coproducts(variant: HopfVariant) -> dict[Mono, TensorPoly]:
    x11, x12, x21, x22 = (GENERATORS[n] for n in ("x11", "x12", "x21", "x22"))
    std = {
        x11: {(x11, x11): 1, (x12, x21): 1},
        x12: {(x11, x12): 1, (x12, x22): 1},
        x21: {(x21, x11): 1, (x22, x21): 1},
        x22: {(x21, x12): 1, (x22, x22): 1},
    }
    out = {g: TensorPoly(t) for g, t in std.items()}
    if variant is HopfVariant.OP:
        out = {g: t.flip() for g, t in out.items()}
    return out


_GEN_DELTA = {v: _gen_coproducts(v) for v in HopfVariant}


@lru_cache(maxsize=None)
def _delta_mono(m: Mono, variant: HopfVariant) -> tuple[tuple[tuple[Mono, Mono], int], ...]:
    if m == ONE_MONO:
        return (((ONE_MONO, ONE_MONO), 1),)
    k = next(i for i in range(4) if m[i])
    rest = list(m)
    rest[k] -= 1
    gen = [0, 0, 0, 0]
    gen[k] = 1
    prev = TensorPoly(dict(_delta_mono(tuple(rest), variant)))
    prod = prev * _GEN_DELTA[variant][tuple(gen)]
    return tuple(sorted(prod.terms.items()))


def comultiply(p: HopfPoly, variant: HopfVariant = HopfVariant.STD) -> TensorPoly:
    variant = HopfVariant.parse(variant)
    acc: dict = {}
    for m, c in p.terms.items():
        for k, e in _delta_mono(m, variant):
            _add_into(acc, k, c * e)
    return TensorPoly(acc)


def tensor_map_leg(t: TensorPoly, leg: int, f: Callable[[HopfPoly], HopfPoly]) -> TensorPoly:
    acc: dict = {}
    for k, c in t.terms.items():
        image = f(HopfPoly({k[leg]: 1}, raw=False))
        for m, e in image.terms.items():
            _add_into(acc, k[:leg] + (m,) + k[leg + 1:], c * e)
    return TensorPoly(acc)


def tensor_comultiply_leg(t: TensorPoly, leg: int, variant: HopfVariant) -> TensorPoly:
    acc: dict = {}
    for k, c in t.terms.items():
        for pair, e in _delta_mono(k[leg], variant):
            _add_into(acc, k[:leg] + pair + k[leg + 1:], c * e)
    return TensorPoly(acc)


def tensor_counit_leg(t: TensorPoly, leg: int) -> TensorPoly:
    acc: dict = {}
    for k, c in t.terms.items():
        if counit_mono(k[leg]):
            _add_into(acc, k[:leg] + k[leg + 1:], c)
    return TensorPoly(acc)


def tensor_multiply(t: TensorPoly) -> HopfPoly:
    """Multiplication map R (x) R -> R."""
    acc: dict = {}
    for (m, n), c in t.terms.items():
        for p, e in mul_mono(m, n):
            _add_into(acc, p, c * e)
    return HopfPoly(acc, raw=False)


def as_tensor1(p: HopfPoly) -> TensorPoly:
    return TensorPoly({(m,): c for m, c in p.terms.items()})


# ---------------------------------------------------------------------------
# axiom checks


def random_poly(rng: random.Random, max_degree: int = 4, coeff: int = 3) -> HopfPoly:
    """Product of up to ``max_degree`` random affine combinations of generators."""
    gens = [ONE, X11, X12, X21, X22]
    out = ONE
    for _ in range(rng.randint(1, max_degree)):
        factor = ZERO
        for g in gens:
            factor = factor + g * rng.randint(-coeff, coeff)
        out = out * factor
    return out


def random_products(seed: int, count: int = 100, max_degree: int = 4) -> list[HopfPoly]:
    rng = random.Random(seed)
    return [random_poly(rng, max_degree) for _ in range(count)]


@dataclass
class HopfCheck:
    name: str
    passed: bool
    checked: int
    counterexample: str | None = None

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "checked": self.checked}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass
class HopfReport:
    variant: HopfVariant
    checks: list[HopfCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_failure(self) -> HopfCheck | None:
        return next((c for c in self.checks if not c.passed), None)

    def to_json(self) -> dict:
        return {
            "variant": self.variant.value,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
        }


def _run(name: str, samples: Iterable[HopfPoly], pred: Callable[[HopfPoly], bool]) -> HopfCheck:
    n = 0
    for p in samples:
        n += 1
        if not pred(p):
            return HopfCheck(name, False, n, str(p))
    return HopfCheck(name, True, n)


def verify_hopf(variant=HopfVariant.STD, *, seed: int = 0, count: int = 100,
                max_degree: int = 4) -> HopfReport:
    """Check the Hopf algebra axioms on generators plus seeded random products."""
    variant = HopfVariant.parse(variant)
    samples = [ONE, X11, X12, X21, X22] + random_products(seed, count, max_degree)
    report = HopfReport(variant)

    def coassoc(p):
        d = comultiply(p, variant)
        return tensor_comultiply_leg(d, 0, variant) == tensor_comultiply_leg(d, 1, variant)

    def counit_law(p):
        d = comultiply(p, variant)
        ident = as_tensor1(p)
        return tensor_counit_leg(d, 0) == ident and tensor_counit_leg(d, 1) == ident

    def antipode_law(p):
        d = comultiply(p, variant)
        e = HopfPoly.const(p.counit())
        left = tensor_multiply(tensor_map_leg(d, 0, antipode))
        right = tensor_multiply(tensor_map_leg(d, 1, antipode))
        return left == e and right == e

    def ttilde_coalgebra(p):
        d = comultiply(p, variant)
        lhs = tensor_map_leg(tensor_map_leg(d, 0, ttilde), 1, ttilde)
        return lhs == comultiply(p.ttilde(), variant)

    report.checks.append(_run("coassociativity", samples, coassoc))
    report.checks.append(_run("counit", samples, counit_law))
    report.checks.append(_run("antipode", samples, antipode_law))
    report.checks.append(_run("antipode_involution", samples, lambda p: p.antipode().antipode() == p))
    report.checks.append(_run("ttilde_involution", samples, lambda p: p.ttilde().ttilde() == p))
    report.checks.append(_run("transpose_commutes_with_antipode", samples,
                              lambda p: p.transpose().antipode() == p.antipode().transpose()))
    report.checks.append(_run("ttilde_coalgebra_map", samples, ttilde_coalgebra))
    return report
