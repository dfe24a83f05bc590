"""Command-line front end.

Exit codes: 0 when everything checked out, 1 when a check was refuted,
2 for usage errors and unreadable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import serialize
from .comodule import (
    ComoduleError, Side, base_change, classical_dual, contragredient, dual_comodule,
    exterior_square, flip_side, standard_comodule, sym_power, sym_tensors, tensor,
    transpose_comodule, verify_comodule, weight_decomposition, NoWeightDecomposition,
)
from .homological import NoSection, cg_filtration, expected_section, find_section, pi_map
from .hopf import HopfVariant, verify_hopf
from .isotest import find_isomorphism
from .ktheory import k_class, render_laurent, virtual_cg_check, virtual_cg_expected
from .rings import BaseRing, ZZ
from .scenarios import SCENARIOS, default_seed, run_scenario

OK, REFUTED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _ring(text: str) -> BaseRing:
    try:
        return BaseRing.parse(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"bad ring {text!r}: {exc}") from None


def _pretty(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.append(_pretty(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_inline(v)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(f"{pad}- {_inline(v)}" if _flat(v) else f"{pad}-\n{_pretty(v, indent + 1)}"
                         for v in obj)
    return pad + _inline(obj)


def _flat(v) -> bool:
    if isinstance(v, dict):
        return False
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) or (isinstance(x, list) and _flat(x)) for x in v)
    return True


def _inline(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_inline(x) for x in v) + "]"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def _emit(obj: dict, args) -> None:
    if getattr(args, "pretty", False):
        print(_pretty(obj))
    else:
        print(json.dumps(obj, sort_keys=True, default=str))


def _load(path: str):
    try:
        return serialize.load_comodule(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    except serialize.AxiomError as exc:
        raise UsageError(str(exc)) from None
    except serialize.SchemaError as exc:
        raise UsageError(f"{path}: {exc}") from None


# ---------------------------------------------------------------------------
# commands


def cmd_hopf_verify(args) -> int:
    variants = list(HopfVariant) if args.variant == "both" else [HopfVariant(args.variant)]
    seed = args.seed if args.seed is not None else default_seed()
    reports = [verify_hopf(v, seed=seed, count=args.count) for v in variants]
    _emit({"seed": seed, "reports": [r.to_json() for r in reports]}, args)
    return OK if all(r.passed for r in reports) else REFUTED


def cmd_comodule_verify(args) -> int:
    try:
        c = serialize.load_comodule(args.file, verify=False)
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc}") from None
    except serialize.SchemaError as exc:
        raise UsageError(f"{args.file}: {exc}") from None
    rep = verify_comodule(c)
    _emit({"file": args.file, "rank": c.rank, **rep.to_json()}, args)
    return OK if rep.passed else REFUTED


def cmd_comodule_build(args) -> int:
    kind = args.kind
    ops = args.operands
    side = Side.parse(args.side)

    def need(k):
        if len(ops) != k:
            raise UsageError(f"build {kind} takes {k} operand(s), got {len(ops)}")

    if kind == "std":
        need(0)
        c = standard_comodule(ZZ, side)
    elif kind == "sym":
        need(1)
        c = sym_power(int(ops[0]), ZZ, side)
    elif kind == "symt":
        need(1)
        c = sym_tensors(standard_comodule(ZZ, side), int(ops[0]))
    elif kind == "classical-dual":
        need(0)
        c = classical_dual(ZZ)[0]
    elif kind in ("dual", "transpose", "contragredient", "flip", "exterior"):
        need(1)
        src = _load(ops[0])
        fn = {"dual": dual_comodule, "transpose": transpose_comodule,
              "contragredient": contragredient, "flip": flip_side,
              "exterior": exterior_square}[kind]
        c = fn(src)
    elif kind == "tensor":
        need(2)
        c = tensor(_load(ops[0]), _load(ops[1]))
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown build kind {kind}")
    if args.ring is not None:
        c = base_change(c, args.ring)
    text = serialize.dumps(c, pretty=args.pretty)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return OK


def cmd_cg_filtration(args) -> int:
    if not 0 <= args.n <= args.m:
        raise UsageError("cg-filtration needs 0 <= n <= m")
    f = cg_filtration(args.n, args.m, args.ring)
    ok = f.verify()
    _emit({"n": args.n, "m": args.m, "verified": ok, **f.to_json()}, args)
    return OK if ok else REFUTED


def cmd_virtual_cg(args) -> int:
    if args.n < 0 or args.m < 0:
        raise UsageError("degrees must be non-negative")
    ok = virtual_cg_check(args.n, args.m)
    _emit({"n": args.n, "m": args.m, "holds": ok,
           "expected": virtual_cg_expected(args.n, args.m).to_json()}, args)
    return OK if ok else REFUTED


def cmd_section(args) -> int:
    if args.n < 1:
        raise UsageError("section needs n >= 1")
    res = find_section(pi_map(args.n, args.ring))
    expected = expected_section(args.n, args.ring)
    got = not isinstance(res, NoSection)
    _emit({"n": args.n, "ring": str(args.ring), "expected_section": expected, **res.to_json()}, args)
    return OK if got == expected else REFUTED


def cmd_weights(args) -> int:
    c = _load(args.file)
    try:
        wd = weight_decomposition(c)
    except NoWeightDecomposition as exc:
        _emit({"file": args.file, "error": str(exc)}, args)
        return REFUTED
    _emit({"file": args.file, "weights": wd.to_json(),
           "character": render_laurent(wd.table), "k_class": k_class(c).to_json()}, args)
    return OK


def cmd_iso(args) -> int:
    c1, c2 = _load(args.file1), _load(args.file2)
    ring = args.ring or c1.ring
    try:
        c1, c2 = (base_change(c, ring) if c.ring != ring else c for c in (c1, c2))
        verdict = find_isomorphism(c1, c2, args.bound)
    except ComoduleError as exc:
        raise UsageError(str(exc)) from None
    _emit(verdict.to_json(), args)
    return OK


def _parse_params(items: Sequence[str]) -> dict:
    out = {}
    for item in items or ():
        if "=" not in item:
            raise UsageError(f"parameter {item!r} is not key=value")
        k, _, v = item.partition("=")
        out[k] = v
    return out


def cmd_reproduce(args) -> int:
    if args.all == bool(args.name):
        raise UsageError("give either --all or a scenario name")
    params = _parse_params(args.param)
    seed = args.seed if args.seed is not None else default_seed()
    names = list(SCENARIOS) if args.all else [args.name]
    reports = []
    for name in names:
        p = dict(params)
        if name == "hopf-axioms":
            p.setdefault("seed", seed)
        try:
            reports.append(run_scenario(name, p))
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
    out = {"seed": seed, "reports": [r.to_json(timing=args.timing) for r in reports],
           "passed": all(r.passed for r in reports)}
    _emit(out, args)
    return OK if out["passed"] else REFUTED


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable output")

    parser = argparse.ArgumentParser(prog="sl2comod", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    hopf = sub.add_parser("hopf", help="Hopf algebra checks")
    hsub = hopf.add_subparsers(dest="action", required=True)
    hv = hsub.add_parser("verify", parents=[common], help="check the Hopf axioms")
    hv.add_argument("--variant", choices=["std", "op", "both"], default="both")
    hv.add_argument("--seed", type=int)
    hv.add_argument("--count", type=int, default=100)
    hv.set_defaults(func=cmd_hopf_verify)

    com = sub.add_parser("comodule", help="build and check comodule files")
    csub = com.add_subparsers(dest="action", required=True)
    cv = csub.add_parser("verify", parents=[common], help="check the comodule axioms of a file")
    cv.add_argument("file")
    cv.set_defaults(func=cmd_comodule_verify)
    cb = csub.add_parser("build", parents=[common], help="construct a comodule as JSON")
    cb.add_argument("kind", choices=["std", "sym", "symt", "classical-dual", "dual", "transpose",
                                     "contragredient", "flip", "exterior", "tensor"])
    cb.add_argument("operands", nargs="*", help="degree or input files, depending on kind")
    cb.add_argument("--side", choices=["right", "left"], default="right")
    cb.add_argument("--ring", type=_ring, help="base change the result")
    cb.add_argument("-o", "--output")
    cb.set_defaults(func=cmd_comodule_build)

    cg = sub.add_parser("cg-filtration", parents=[common], help="universal Clebsch-Gordan filtration")
    cg.add_argument("n", type=int)
    cg.add_argument("m", type=int)
    cg.add_argument("--ring", type=_ring, default=ZZ)
    cg.set_defaults(func=cmd_cg_filtration)

    vc = sub.add_parser("virtual-cg", parents=[common], help="check the virtual Clebsch-Gordan identity")
    vc.add_argument("n", type=int)
    vc.add_argument("m", type=int)
    vc.set_defaults(func=cmd_virtual_cg)

    sc = sub.add_parser("section", parents=[common], help="section of V (x) Sym^n -> Sym^(n+1)")
    sc.add_argument("n", type=int)
    sc.add_argument("--ring", type=_ring, default=ZZ)
    sc.set_defaults(func=cmd_section)

    wt = sub.add_parser("weights", parents=[common], help="weight table of a comodule file")
    wt.add_argument("file")
    wt.set_defaults(func=cmd_weights)

    iso = sub.add_parser("iso", parents=[common], help="decide isomorphism of two comodule files")
    iso.add_argument("file1")
    iso.add_argument("file2")
    iso.add_argument("--ring", type=_ring)
    iso.add_argument("--bound", type=int, default=3)
    iso.set_defaults(func=cmd_iso)

    rp = sub.add_parser("reproduce", parents=[common], help="run named scenarios")
    rp.add_argument("name", nargs="?", choices=list(SCENARIOS))
    rp.add_argument("--all", action="store_true")
    rp.add_argument("--seed", type=int)
    rp.add_argument("--param", action="append", metavar="KEY=VALUE")
    rp.add_argument("--timing", action="store_true", help="include wall-clock durations")
    rp.set_defaults(func=cmd_reproduce)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except (ValueError, ComoduleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
