"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable, Sequence

from . import coactions as co
from .free_lie import is_primitive
from .parse import ParseError, parse_poly
from .rc_solver import EquationVariant, PreconditionError, V4, V6, dims_table, r_func, residual, solve_degree
from .series import (
    X0,
    X1,
    NcPoly,
    Tensor2,
    antipode,
    conc,
    dL,
    dR,
    poly_to_json,
    shuffle,
    tau,
    tensor_to_json,
)
from .verify import SUITES, run_suite

ENV_MAX_DEGREE = "COACTIONLAB_MAX_DEGREE"


class UsageError(Exception):
    pass


def _lie(p: NcPoly, what: str) -> NcPoly:
    if not is_primitive(p):
        raise UsageError(f"{what} must be a Lie element (primitive for the shuffle coproduct): {p}")
    return p


def _gb(p: NcPoly) -> Tensor2:
    return co.gb_coaction_poly(p)


def _fold(f: Callable[[NcPoly, NcPoly], NcPoly]) -> Callable[..., NcPoly]:
    def run(*args: NcPoly) -> NcPoly:
        if len(args) < 2:
            raise UsageError("needs at least two arguments")
        out = args[0]
        for a in args[1:]:
            out = f(out, a)
        return out

    return run


def _unary(f: Callable[[NcPoly], object]) -> Callable[..., object]:
    def run(*args: NcPoly):
        if len(args) != 1:
            raise UsageError("needs exactly one argument")
        return f(args[0])

    return run


def _binary(f: Callable[[NcPoly, NcPoly], object]) -> Callable[..., object]:
    def run(*args: NcPoly):
        if len(args) != 2:
            raise UsageError("needs exactly two arguments")
        return f(*args)

    return run


OPS: dict[str, Callable[..., object]] = {
    "shuffle": _fold(shuffle),
    "conc": _fold(conc),
    "mu": _unary(co.mu),
    "mu-dual": _unary(co.mu_dual),
    "antipode": _unary(antipode),
    "tau": _unary(tau),
    "dR0": _unary(lambda p: dR(X0, p)),
    "dR1": _unary(lambda p: dR(X1, p)),
    "dL0": _unary(lambda p: dL(X0, p)),
    "dL1": _unary(lambda p: dL(X1, p)),
    "gb-coaction": _unary(_gb),
    "ihara-act": _binary(lambda psi, p: co.ihara_act(_lie(psi, "psi"), p)),
    "ihara-bracket": _binary(lambda a, b: co.ihara_bracket(_lie(a, "psi1"), _lie(b, "psi2"))),
    "residual-v4": _unary(lambda p: residual(p, V4)),
    "residual-v6": _unary(lambda p: residual(p, V6)),
    "r-func": _unary(r_func),
}


def _emit(value, fmt: str) -> str:
    if isinstance(value, Tensor2):
        return json.dumps(tensor_to_json(value)) if fmt == "json" else str(value)
    if isinstance(value, NcPoly):
        return json.dumps(poly_to_json(value)) if fmt == "json" else str(value)
    # RFunc
    if fmt == "json":
        return json.dumps({"r": {str(k): str(c) for k, c in value.coeffs.items()}})
    return str(value)


def _default_max_degree():
    raw = os.environ.get(ENV_MAX_DEGREE)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{ENV_MAX_DEGREE} must be an integer, got {raw!r}") from None


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-degree", type=int, default=None, help="degree bound (default per suite)")
    p.add_argument("--equation", choices=["v4", "v6"], default="v4")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--fail-fast", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coactionlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an operator on parsed expressions")
    p.add_argument("op", choices=sorted(OPS))
    p.add_argument("exprs", nargs="+")
    _common(p)

    p = sub.add_parser("verify", help="run an exhaustive verification suite")
    p.add_argument("suite", choices=[*SUITES, "all"])
    _common(p)

    p = sub.add_parser("solve", help="basis of skew solutions in one degree")
    p.add_argument("degree", type=int)
    _common(p)

    p = sub.add_parser("dims", help="solution-space dimensions up to a degree")
    p.add_argument("max_degree_pos", metavar="max_degree", type=int)
    _common(p)
    return parser


def _cmd_eval(args) -> int:
    polys = [parse_poly(e) for e in args.exprs]
    print(_emit(OPS[args.op](*polys), args.format))
    return 0


def _cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    max_degree = args.max_degree if args.max_degree is not None else _default_max_degree()
    reports = []
    for name in names:
        rep = run_suite(name, max_degree, threads=args.threads, fail_fast=args.fail_fast)
        print(f"{name}: {rep.seconds:.2f}s", file=sys.stderr)
        reports.append(rep)
        if args.fail_fast and not rep.passed:
            break
    if args.format == "json":
        print(json.dumps([r.to_json() for r in reports], indent=2))
    else:
        print("\n".join(r.to_text() for r in reports))
    return 0 if all(r.passed for r in reports) else 1


def _cmd_solve(args) -> int:
    variant = EquationVariant.parse(args.equation)
    basis = solve_degree(args.degree, variant)
    if args.format == "json":
        print(json.dumps(basis.to_json()))
    else:
        print(f"# degree {basis.degree}, {variant.value}, dimension {basis.dimension}")
        for e in basis.elements:
            print(e)
    return 0


def _cmd_dims(args) -> int:
    variant = EquationVariant.parse(args.equation)
    table = dims_table(args.max_degree_pos, variant)
    if args.format == "json":
        print(json.dumps({"variant": variant.value, "dims": {str(k): v for k, v in table.items()}}))
    else:
        print("degree\tdimension")
        for k, v in table.items():
            print(f"{k}\t{v}")
    return 0


COMMANDS = {"eval": _cmd_eval, "verify": _cmd_verify, "solve": _cmd_solve, "dims": _cmd_dims}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be at least 1")
    if args.max_degree is not None and args.max_degree < 1:
        parser.error("--max-degree must be at least 1")
    try:
        return COMMANDS[args.command](args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    except (UsageError, PreconditionError, ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
