"""JSON storage for comodules; loading is gated on the comodule axioms."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .comodule import Comodule, ComoduleReport, Side, verify_comodule
from .hopf import HopfPoly, HopfVariant
from .rings import BaseRing, clean


class SchemaError(ValueError):
    pass


class AxiomError(ValueError):
    def __init__(self, report: ComoduleReport):
        self.report = report
        super().__init__(f"comodule rejected: {report.axiom} fails at entry {report.entry}: {report.detail}")


def poly_to_json(p: HopfPoly) -> list:
    out = []
    for m, c in p.sorted_terms():
        q = Fraction(c)
        out.append([[q.numerator, q.denominator], list(m)])
    return out


def poly_from_json(terms) -> HopfPoly:
    if not isinstance(terms, list):
        raise SchemaError("polynomial must be a list of terms")
    raw: dict = {}
    for term in terms:
        try:
            (num, den), mono = term
            mono = tuple(int(e) for e in mono)
            if len(mono) != 4 or min(mono) < 0:
                raise ValueError
            coeff = Fraction(int(num), int(den))
        except (TypeError, ValueError, ZeroDivisionError):
            raise SchemaError(f"bad term {term!r}") from None
        if mono in raw:
            raise SchemaError(f"duplicate monomial {list(mono)}")
        raw[mono] = clean(coeff)
    return HopfPoly(raw)


def comodule_to_json(c: Comodule) -> dict:
    return {
        "ring": c.ring.to_json(),
        "rank": c.rank,
        "side": c.side.value,
        "variant": c.variant.value,
        "labels": list(c.labels),
        "matrix": [[poly_to_json(p) for p in row] for row in c.matrix],
    }


def comodule_from_json(obj, verify: bool = True) -> Comodule:
    try:
        ring = BaseRing.from_json(obj["ring"])
        rank = int(obj["rank"])
        side = Side.parse(obj["side"])
        variant = HopfVariant.parse(obj["variant"])
        labels = [str(x) for x in obj["labels"]]
        rows = obj["matrix"]
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"malformed comodule: {exc}") from None
    if not isinstance(rows, list) or len(rows) != rank or any(
            not isinstance(r, list) or len(r) != rank for r in rows):
        raise SchemaError(f"matrix must be {rank}x{rank}")
    matrix = [[poly_from_json(p) for p in row] for row in rows]
    try:
        c = Comodule(ring, rank, side, variant, matrix, labels)
    except ValueError as exc:
        raise SchemaError(str(exc)) from None
    if verify:
        report = verify_comodule(c)
        if not report.passed:
            raise AxiomError(report)
    return c


def dumps(c: Comodule, pretty: bool = False) -> str:
    return json.dumps(comodule_to_json(c), indent=2 if pretty else None, sort_keys=True)


def loads(text: str, verify: bool = True) -> Comodule:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from None
    return comodule_from_json(obj, verify)


def store_comodule(c: Comodule, path) -> None:
    Path(path).write_text(dumps(c) + "\n")


def load_comodule(path, verify: bool = True) -> Comodule:
    return loads(Path(path).read_text(), verify)
