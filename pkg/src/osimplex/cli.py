"""Command line surface: membership, composition, factorization, evaluation,
cell enumeration, atom listing and basis verification.

Inputs are given as argument strings; an argument of "-" reads standard
input and "@path" reads the named file.  Inputs starting with "{" are parsed
as JSON.  Exit codes: 0 success (and membership holds), 1 negative verdict,
2 parse error, 3 precondition failure, 4 resource bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .chains import basis_elements, check_strongly_loopfree, check_unital
from .errors import (
    ArityError,
    EnumerationLimitError,
    OsimplexError,
    ParseError,
    PreconditionError,
)
from .nu import Cell, atom, enumerate_cells
from .oriental import check_membership, eval_expr, expr_from_json, factorize, parse_expr
from .zdelta import ZMorphism, parse_zmorphism

_ENUM_DEFAULT_BOUND = 3


def _read_source(arg):
    if arg == "-":
        return sys.stdin.read()
    if arg.startswith("@"):
        try:
            with open(arg[1:], "r", encoding="utf-8") as handle:
                return handle.read()
        except OSError as exc:
            raise ParseError(f"cannot read input file: {exc}") from exc
    return arg


def _load_morphism(arg, n):
    text = _read_source(arg).strip()
    if text.startswith("{"):
        try:
            return ZMorphism.from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON: {exc}", exc.pos) from exc
    if n is None:
        raise ParseError("textual input needs an explicit codomain (--n)")
    return parse_zmorphism(text, n)


def _load_expression(arg, n):
    text = _read_source(arg).strip()
    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON: {exc}", exc.pos) from exc
        if "expr" in data:
            n = data.get("n", n)
            data = data["expr"]
        if n is None:
            raise ParseError("expression input needs a codomain (--n or an 'n' field)")
        return expr_from_json(data, n)
    if n is None:
        raise ParseError("textual input needs an explicit codomain (--n)")
    return parse_expr(text, n)


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _cmd_check(args):
    x = _load_morphism(args.morphism, args.n)
    result = check_membership(x)
    shape = f"O({x.domain},{x.codomain})"
    if result.ok:
        _emit(args, {"member": True, "m": x.domain, "n": x.codomain}, f"member of {shape}")
        return 0
    payload = {"member": False, "m": x.domain, "n": x.codomain, "reason": result.reason}
    lines = [f"not a member of {shape}: {result.reason}"]
    if result.witness_map is not None:
        payload["witness"] = {
            "f": list(result.witness_map.values),
            "term": list(result.witness_term.values),
            "coefficient": result.witness_coefficient,
        }
        lines.append(
            f"witness f={result.witness_map}, offending term "
            f"{result.witness_term} with coefficient {result.witness_coefficient}"
        )
    _emit(args, payload, "\n".join(lines))
    return 1


def _cmd_compose(args):
    outer = _load_morphism(args.outer, args.n)
    inner = _load_morphism(args.inner, outer.domain)
    result = outer.compose(inner)
    _emit(args, result.to_json(), str(result))
    return 0


def _cmd_factor(args):
    x = _load_morphism(args.morphism, args.n)
    expr = factorize(x)
    payload = {"n": x.codomain, "expr": expr.to_json()}
    lines = [str(expr)]
    if args.verify:
        if eval_expr(expr) != x:
            raise AssertionError("verification failed: evaluation differs from input")
        payload["verified"] = True
        lines.append("verified: evaluation reproduces the input")
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_eval(args):
    expr = _load_expression(args.expression, args.n)
    value = eval_expr(expr)
    _emit(args, value.to_json(), str(value))
    return 0


def _cmd_enumerate(args):
    bound = _ENUM_DEFAULT_BOUND if args.max_cells is None else args.size
    cells = enumerate_cells(args.size, bound=bound, max_cells=args.max_cells)
    ordered = sorted(cells, key=lambda c: (c.dimension, str(c)))
    if args.json:
        print(
            json.dumps(
                {"n": args.size, "count": len(ordered), "cells": [c.to_json() for c in ordered]},
                indent=2,
                sort_keys=True,
            )
        )
    else:
        for cell in ordered:
            print(cell)
        print(f"{len(ordered)} cells")
    return 0


def _cmd_atoms(args):
    elements = basis_elements(args.size)
    if args.json:
        print(
            json.dumps(
                {
                    "n": args.size,
                    "atoms": [
                        {"basis": list(b.vertices), "cell": atom(b).to_json()}
                        for b in elements
                    ],
                },
                indent=2,
                sort_keys=True,
            )
        )
    else:
        for b in elements:
            print(f"<{b}> = {atom(b)}")
    return 0


def _cmd_verify_basis(args):
    unital = bool(check_unital(args.size))
    loopfree = check_strongly_loopfree(args.size)
    yes_no = {True: "yes", False: "no"}
    _emit(
        args,
        {"n": args.size, "unital": unital, "strongly_loop_free": loopfree},
        f"unital: {yes_no[unital]}; strongly loop-free: {yes_no[loopfree]}",
    )
    return 0 if unital and loopfree else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="osimplex",
        description="Exact computation with oriented simplexes: membership, "
        "fillers, factorization and cell enumeration.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        p.add_argument("--json", action="store_true", help="emit JSON output")
        return p

    p = add("check", _cmd_check, "decide membership among oriental morphisms")
    p.add_argument("morphism", help="combination text, JSON, @file or -")
    p.add_argument("--n", type=int, help="codomain of the combination")

    p = add("compose", _cmd_compose, "compose two combinations (outer inner)")
    p.add_argument("outer", help="outer combination")
    p.add_argument("inner", help="inner combination; codomain is the outer domain")
    p.add_argument("--n", type=int, help="codomain of the outer combination")

    p = add("factor", _cmd_factor, "factorize an oriental morphism")
    p.add_argument("morphism")
    p.add_argument("--n", type=int, help="codomain of the combination")
    p.add_argument(
        "--verify", action="store_true", help="re-evaluate the tree and confirm equality"
    )

    p = add("eval", _cmd_eval, "evaluate a filler/pasting expression")
    p.add_argument("expression")
    p.add_argument("--n", type=int, help="codomain of the leaves")

    p = add("enumerate", _cmd_enumerate, "enumerate the cells over {0,...,n}")
    p.add_argument("size", type=int, metavar="n")
    p.add_argument(
        "--max-cells",
        type=int,
        help="resource bound on the number of cells; required beyond n=3",
    )

    p = add("atoms", _cmd_atoms, "list the atoms over {0,...,n}")
    p.add_argument("size", type=int, metavar="n")

    p = add("verify-basis", _cmd_verify_basis, "check unitality and loop-freeness")
    p.add_argument("size", type=int, metavar="n")

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except EnumerationLimitError as exc:
        print(f"resource bound: {exc}", file=sys.stderr)
        return 4
    except (PreconditionError, ArityError, IndexError) as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return 3
    except OsimplexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
