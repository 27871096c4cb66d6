"""Command line entry point.

Each subcommand reads one JSON request (``--input FILE``, ``--json TEXT`` or
stdin) and writes one JSON response.  Exit status: 0 on success, 1 for a
domain error (zero norm, singular curve, irrational intersection, ...), 2 for
malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable

from . import cubic_elements as ce
from . import weierstrass as ws
from .codec import (
    InputError,
    encode_element,
    encode_form,
    encode_line,
    encode_matrix,
    encode_point,
    numeral,
    parse_element,
    parse_form,
    parse_point,
    parse_quadratic,
    require,
)
from .cubic_forms import discriminant, hessian, is_irreducible, jacobian, syzygy_check
from .diophantine import all_distinct, carmichael_form, orbit
from .quad_forms import gauss_compose
from .rational import fmt_q, to_int
from .selfcheck import SelfCheckConfig, report, run_selfcheck


class DomainError(Exception):
    def __init__(self, message: str, body: dict | None = None):
        super().__init__(message)
        self.body = body or {}


def cmd_form(req: dict) -> dict:
    C = parse_form(require(req, "form"))
    return {
        "form": encode_form(C),
        "disc": fmt_q(discriminant(C)),
        "hessian": encode_form(hessian(C)),
        "jacobian": encode_form(jacobian(C)),
        "syzygy_ok": syzygy_check(C),
        "irreducible": is_irreducible(C),
    }


_ELEM_ARITY = {"mul": 2, "add": 2, "inv": 1, "pow": 1, "trace": 1, "norm": 1, "matrix": 1}


def cmd_elem(req: dict) -> dict:
    form = parse_form(require(req, "form")) if "form" in req else None
    op = require(req, "op")
    if op not in _ELEM_ARITY:
        raise InputError(f"unknown op {op!r}; expected one of {sorted(_ELEM_ARITY)}")
    operands = require(req, "operands")
    if not isinstance(operands, list) or len(operands) != _ELEM_ARITY[op]:
        raise InputError(f"op {op!r} takes {_ELEM_ARITY[op]} operand(s)")
    elems = [parse_element(v, form) for v in operands]
    try:
        if op == "mul":
            result: Any = encode_element(ce.multiply(*elems))
        elif op == "add":
            result = encode_element(ce.add(*elems))
        elif op == "inv":
            result = encode_element(ce.inverse(elems[0]))
        elif op == "pow":
            try:
                k = to_int(require(req, "k"))
            except (TypeError, ValueError) as exc:
                raise InputError(f"k: {exc}") from exc
            result = encode_element(ce.power(elems[0], k))
        elif op == "trace":
            result = fmt_q(ce.trace(elems[0]))
        elif op == "norm":
            result = fmt_q(ce.norm(elems[0]))
        else:
            result = encode_matrix(ce.to_matrix(elems[0]))
    except ZeroDivisionError as exc:
        raise DomainError(str(exc)) from exc
    return {"op": op, "result": result}


def cmd_compose(req: dict) -> dict:
    Q1 = parse_quadratic(require(req, "Q1"))
    Q2 = parse_quadratic(require(req, "Q2"))
    try:
        comp = gauss_compose(Q1, Q2)
    except (ValueError, ArithmeticError) as exc:
        raise DomainError(str(exc)) from exc
    labels = ("u1u2", "u1y2", "u2y1", "y1y2")
    return {
        "Q3": encode_form(comp.form),
        "disc": str(comp.form.disc),
        "e": str(comp.e),
        "bilinear": {
            "u3": {k: str(v) for k, v in zip(labels, comp.u3)},
            "y3": {k: str(v) for k, v in zip(labels, comp.y3)},
        },
    }


def cmd_pell(req: dict) -> dict:
    if "form" in req:
        form = parse_form(req["form"])
    elif "n" in req:
        try:
            form = carmichael_form(to_int(req["n"]))
        except (TypeError, ValueError) as exc:
            raise InputError(f"n: {exc}") from exc
    else:
        raise InputError("pell needs either 'form' or 'n'")
    seed = parse_element(require(req, "seed"), form)
    count = req.get("count", 5)
    try:
        count = to_int(count)
    except (TypeError, ValueError) as exc:
        raise InputError(f"count: {exc}") from exc
    try:
        members = orbit(seed, count)
    except ValueError as exc:
        raise DomainError(str(exc)) from exc
    return {
        "form": encode_form(form),
        "orbit": [encode_element(e) for e in members],
        "all_norm_one": all(ce.norm(e) == 1 for e in members),
        "distinct": all_distinct(members),
    }


def cmd_curve(req: dict) -> dict:
    form = parse_form(require(req, "form"))
    t = numeral(require(req, "t"), "t")
    n = numeral(require(req, "n"), "n")
    P = parse_point(require(req, "point"))
    gamma = ws.build_gamma(form, t, n)
    if ws.is_singular_curve(gamma):
        raise DomainError(
            "the trace/norm curve is singular",
            {"singular": True, "singular_points": [encode_point(S) for S in ws.singular_points(gamma)]},
        )
    if not ws.is_on_curve(gamma, P):
        raise DomainError(f"point {list(P.coords)} is not on the curve")
    try:
        red = ws.to_weierstrass(gamma, P)
    except ws.ReductionError as exc:
        raise DomainError(str(exc)) from exc
    W = red.curve
    return {
        "singular": False,
        "case": red.case,
        "points": {"P": encode_point(red.P), "Q": encode_point(red.Q), "R": encode_point(red.R)},
        "tangents": [encode_line(L) for L in red.tangents],
        "M": encode_matrix(red.M),
        "weierstrass": [fmt_q(a) for a in W.coeffs],
        "invariants": {"c4": fmt_q(W.c4), "c6": fmt_q(W.c6), "disc": fmt_q(W.discriminant), "j": fmt_q(W.j)},
    }


def cmd_selfcheck(args: argparse.Namespace) -> dict:
    config = SelfCheckConfig(trials=args.trials, seed=args.seed)
    return report(run_selfcheck(config), config)


COMMANDS: dict[str, Callable[[dict], dict]] = {
    "form": cmd_form,
    "elem": cmd_elem,
    "compose": cmd_compose,
    "pell": cmd_pell,
    "curve": cmd_curve,
}


def _read_request(args: argparse.Namespace) -> dict:
    if args.json is not None:
        text = args.json
    elif args.input is not None:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    try:
        body = json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from exc
    if not isinstance(body, dict):
        raise InputError("request must be a JSON object")
    return body


def _reject_float(text: str):
    raise InputError(f"float literal {text} is not accepted; pass numerals as strings")


def _pretty(obj: Any, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and any(isinstance(i, (dict, list)) for i in
                                                          (v.values() if isinstance(v, dict) else v)):
                lines.append(f"{pad}{k}:")
                lines.append(_pretty(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_flat(v)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(_pretty(v, indent) if isinstance(v, dict) else f"{pad}{_flat(v)}" for v in obj)
    return f"{pad}{_flat(obj)}"


def _flat(v: Any) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_flat(i) for i in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_flat(i)}" for k, i in v.items()) + "}"
    if isinstance(v, bool):
        return "true" if v else "false"
    return "null" if v is None else str(v)


def _emit(body: dict, pretty: bool, stream=None) -> None:
    stream = stream or sys.stdout
    if pretty:
        print(_pretty(body), file=stream)
    else:
        print(json.dumps(body, sort_keys=True), file=stream)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cubicfield", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "form": "discriminant, covariants, syzygy and irreducibility of a binary cubic form",
        "elem": "element arithmetic through element matrices",
        "compose": "Gauss composition of two binary quadratic forms",
        "pell": "orbit of a norm-one element under repeated multiplication",
        "curve": "Weierstrass reduction of the fixed trace/norm curve",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text)
        src = p.add_mutually_exclusive_group()
        src.add_argument("--input", "-i", help="read the JSON request from this file (default: stdin)")
        src.add_argument("--json", "-j", help="JSON request given inline")
        p.add_argument("--pretty", action="store_true", help="human-readable output")
    p = sub.add_parser("selfcheck", help="seeded randomized check of the core identities")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pretty", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "selfcheck":
        if args.trials < 0:
            parser.error("--trials must be non-negative")
        body = cmd_selfcheck(args)
        _emit(body, args.pretty)
        return 0 if body["ok"] else 1
    try:
        body = COMMANDS[args.command](_read_request(args))
    except InputError as exc:
        print(f"cubicfield {args.command}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"cubicfield {args.command}: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        _emit({"error": str(exc), **exc.body}, args.pretty)
        return 1
    except (ValueError, ArithmeticError) as exc:
        _emit({"error": str(exc)}, args.pretty)
        return 1
    _emit(body, args.pretty)
    return 0


if __name__ == "__main__":
    sys.exit(main())
