"""Command line interface: JSON fan files in, JSON reports out.

Exit codes: 0 success, 1 input or validation failure, 2 computation
failure (including a failed identity check).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from . import fan as fanmod
from . import kth, mor, srco
from .fan import InvalidFanError, StackyFan
from .mor import MorphismError

DEFAULT_PUSH_ORDER = 8


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """Usage errors are input errors: exit 1, not argparse's 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _q(x: Fraction | int) -> str:
    return str(Fraction(x))


def _graded_json(g: dict[Fraction, int]) -> dict[str, int]:
    return {_q(d): c for d, c in sorted(g.items())}


def _box_json(b: fanmod.BoxElement) -> dict:
    return {
        "point": list(b.point),
        "cone": list(b.cone),
        "coefficients": [_q(a) for a in b.coefficients],
        "degree": _q(b.degree),
    }


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _rational(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected an integer or p/q, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("degree bound must be nonnegative")
    return value


def load_fan_document(path: str) -> tuple[StackyFan, str]:
    """Read and validate a fan file; returns the fan and the sha256 of the
    raw bytes."""
    try:
        raw = Path(path).read_bytes()
        data = json.loads(raw)
    except (OSError, ValueError) as err:
        raise InputError(f"cannot read fan document {path}: {err}") from None
    report = fanmod.validate_fan(data)
    if not report.ok:
        raise InputError("\n".join(report.diagnostics))
    return report.fan, hashlib.sha256(raw).hexdigest()


def cmd_validate(args) -> dict:
    try:
        raw = Path(args.fan).read_bytes()
        data = json.loads(raw)
    except (OSError, ValueError) as err:
        raise InputError(f"cannot read fan document {args.fan}: {err}") from None
    report = fanmod.validate_fan(data)
    out = {
        "valid": report.ok,
        "complete": report.complete,
        "condition_2_3": report.pure,
        "diagnostics": report.diagnostics,
        "input_sha256": hashlib.sha256(raw).hexdigest(),
    }
    if report.ok:
        print(f"valid; complete: {str(report.complete).lower()}; "
              f"condition (2.3): {str(report.pure).lower()}", file=sys.stderr)
    else:
        for d in report.diagnostics:
            print(d, file=sys.stderr)
    return out


def cmd_kdim(fan: StackyFan, args) -> dict:
    return {"k_dimension": kth.k_dimension(fan)}


def cmd_srdim(fan: StackyFan, args) -> dict:
    graded, sectors = srco.sr_dimension(fan)
    if args.max_degree is not None:
        graded = {d: c for d, c in graded.items() if d <= args.max_degree}
    return {
        "graded": _graded_json(graded),
        "total": srco.graded_total(graded),
        "sectors": [
            {"box": _box_json(s.box), "dimension": s.dimension, "graded": _graded_json(s.graded)}
            for s in sectors
        ],
    }


def cmd_box(fan: StackyFan, args) -> dict:
    box = fanmod.box_of_fan(fan)
    return {"box": [_box_json(b) for b in box], "size": len(box)}


def cmd_chern(fan: StackyFan, args) -> dict:
    table = srco.chern_table(fan)
    return {
        "rows": [
            {
                "box": _box_json(r.box),
                "rotations": [None if a is None else _q(a) for a in r.rotations],
                "dimension": r.dimension,
            }
            for r in table.rows
        ],
        "sectors": len(table.rows),
        "total": table.total,
        "k_dimension": kth.k_dimension(fan),
    }


def cmd_oracle(fan: StackyFan, args) -> dict:
    D = args.max_degree
    oracle = srco.sr_truncated_oracle(fan, D)
    sectors = {d: c for d, c in srco.sr_dimension(fan)[0].items() if d <= D}
    return {
        "max_degree": _q(D),
        "oracle": _graded_json(oracle),
        "sectors": _graded_json(sectors),
        "verdict": oracle == sectors,
    }


def cmd_formula(fan: StackyFan, args) -> dict:
    check = srco.graded_dim_formula_check(fan, args.max_degree)
    return {
        "max_degree": _q(args.max_degree),
        "series": _graded_json(check.series),
        "sectors": _graded_json(check.expected),
        "diff": _graded_json(check.diff),
        "support_confirmed": check.support_confirmed,
        "verdict": check.ok,
    }


def _series_rows(check: mor.SeriesCheck) -> list[dict]:
    return [{"power": k, "lhs": a.to_str(), "rhs": b.to_str()} for k, (a, b) in enumerate(zip(check.lhs, check.rhs))]


def cmd_blowup(fan: StackyFan, args) -> dict:
    b = mor.weighted_blowup(fan, args.cone, args.weights)
    T = args.push_order
    check = mor.push_theorem_check(b, T)
    push = []
    for l in range(T + 1):
        row = {"l": l, "class": mor.push_R_inverse_power(b, l).to_str()}
        if l >= 1:
            row["oracle_agrees"] = mor.push_R_inverse_power(b, l) == mor.push_hilbert_oracle(b, l)
        push.append(row)
    oracle_ok = all(r.get("oracle_agrees", True) for r in push)
    return {
        "fan": b.base.source.to_dict(),
        "new_ray": b.new_ray,
        "center": list(b.center),
        "weights": list(b.weights),
        "alpha": [list(r) for r in b.base.alpha],
        "variables": b.target_ring.variable_names,
        "pushforward": push,
        "series": _series_rows(check),
        "first_mismatch": check.first_mismatch,
        "verdict": check.ok and oracle_ok,
    }


def cmd_reweight(fan: StackyFan, args) -> dict:
    m = mor.codim1_reweight(fan, args.ray, args.factor)
    check = mor.push_codim1_series_check(m, args.push_order)
    return {
        "fan": m.base.source.to_dict(),
        "ray": m.ray,
        "factor": m.factor,
        "alpha": [list(r) for r in m.base.alpha],
        "variables": m.target_ring.variable_names,
        "pushforward": [
            {"m": k, "class": mor.push_codim1(m, k).to_str()} for k in range(1, 2 * m.factor + 1)
        ],
        "series": _series_rows(check),
        "first_mismatch": check.first_mismatch,
        "verdict": check.ok,
    }


COMMANDS = {
    "kdim": cmd_kdim,
    "srdim": cmd_srdim,
    "box": cmd_box,
    "chern": cmd_chern,
    "oracle": cmd_oracle,
    "formula": cmd_formula,
    "blowup": cmd_blowup,
    "reweight": cmd_reweight,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stackyk", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("fan", help="JSON fan document")
        return p

    add("validate", "validate a fan document")
    add("kdim", "dimension of K_0 tensor Q")
    add("srdim", "graded SR-cohomology dimensions by sectors").add_argument(
        "--max-degree", type=_rational, default=None)
    add("box", "Box elements of the fan")
    add("chern", "combinatorial Chern character table")
    add("oracle", "direct truncated SR-cohomology").add_argument(
        "--max-degree", type=_rational, required=True)
    add("formula", "graded-dimension generating function check").add_argument(
        "--max-degree", type=_rational, required=True)
    p = add("blowup", "weighted blowup and pushforward identity")
    p.add_argument("--cone", type=_int_list, required=True)
    p.add_argument("--weights", type=_int_list, required=True)
    p.add_argument("--push-order", type=int, default=DEFAULT_PUSH_ORDER)
    p = add("reweight", "codimension-one reweighting and pushforward identity")
    p.add_argument("--ray", type=int, required=True)
    p.add_argument("--factor", type=int, required=True)
    p.add_argument("--push-order", type=int, default=DEFAULT_PUSH_ORDER)
    return parser


def _echo(args) -> dict[str, Any]:
    return {k: (str(v) if isinstance(v, Fraction) else v) for k, v in sorted(vars(args).items())}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "validate":
            report = {"command": _echo(args), **cmd_validate(args)}
            code = 0 if report["valid"] else 1
        else:
            fan, digest = load_fan_document(args.fan)
            result = COMMANDS[args.command](fan, args)
            report = {"command": _echo(args), "input_sha256": digest, **result}
            code = 2 if result.get("verdict") is False else 0
    except InputError as err:
        print(str(err), file=sys.stderr)
        return 1
    except (MorphismError, InvalidFanError, ArithmeticError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    json.dump(report, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
