"""Command line interface: ``toricoh validate | analyze | complete``.

Exit codes: 0 ok, 1 invalid fan, 2 fan outside the supported cases,
3 I/O, syntax or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import FanKind, classify_fan
from .completion import complete_fan, serialize_completion
from .corpus import BUILTIN_NAMES, UnknownName, builtin_fan
from .fan import Fan, FanError, parse_fan, validate_fan
from .lattice import LatticeError, vec
from .report import analysis_document, completion_dict, dumps, input_dict, render_text

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_UNSUPPORTED = 2
EXIT_INPUT = 3


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _read_fan(path: str) -> Fan:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    try:
        return parse_fan(text)
    except (FanError, LatticeError) as exc:
        raise InputError(f"{type(exc).__name__}: {exc}") from None


def _load(args) -> tuple[Fan, str | None, str | None]:
    if args.builtin is not None:
        if args.file is not None:
            raise InputError("give either a file or --builtin, not both")
        try:
            return builtin_fan(args.builtin), None, args.builtin
        except UnknownName:
            raise InputError(
                f"unknown builtin {args.builtin!r}; choose from {', '.join(BUILTIN_NAMES)}"
            ) from None
    if args.file is None:
        raise InputError("a fan file or --builtin NAME is required")
    return _read_fan(args.file), args.file, None


def _check_usable(fan: Fan) -> int:
    report = validate_fan(fan)
    if not report.ok:
        for v in report.violations:
            print(v, file=sys.stderr)
        return EXIT_INVALID
    cls = classify_fan(fan)
    if cls.kind is FanKind.UNSUPPORTED:
        print(f"unsupported: {cls.reason}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    return EXIT_OK


def cmd_validate(args) -> int:
    fan = _read_fan(args.file)
    report = validate_fan(fan)
    if report.ok:
        print("ok")
        return EXIT_OK
    for v in report.violations:
        print(v)
    return EXIT_INVALID


def cmd_analyze(args) -> int:
    fan, path, builtin = _load(args)
    status = _check_usable(fan)
    if status:
        return status
    if args.max_degree is not None and args.max_degree < 0:
        raise InputError("--max-degree must be nonnegative")
    doc = analysis_document(fan, path, builtin, args.max_degree)
    sys.stdout.write(dumps(doc) if args.json else render_text(doc))
    return EXIT_OK


def cmd_complete(args) -> int:
    fan, path, builtin = _load(args)
    status = _check_usable(fan)
    if status:
        return status
    completion = complete_fan(fan)
    if args.json:
        doc = {
            "input": input_dict(fan, path, builtin),
            "classification": classify_fan(fan).kind.value,
            "completion": completion_dict(completion, detailed=True),
        }
        sys.stdout.write(dumps(doc))
        return EXIT_OK
    text = serialize_completion(completion)
    if args.fan_out:
        try:
            with open(args.fan_out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise InputError(f"cannot write {args.fan_out}: {exc}") from None
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_oracle(args) -> int:
    from . import oracle

    if args.what == "normal-form":
        if len(args.values) != 4:
            raise InputError("normal-form needs VX VY WX WY")
        v, w = vec(*args.values[:2]), vec(*args.values[2:])
        budget = oracle.SearchBudget.for_vectors(v, w)
        if args.max_entry:
            budget = oracle.SearchBudget(args.max_entry, budget.max_degree)
        try:
            print(json.dumps(dict(zip("pq", oracle.normal_form_search(v, w, budget)))))
        except (ValueError, oracle.BudgetExhausted) as exc:
            raise InputError(str(exc)) from None
    else:
        if len(args.values) != 3:
            raise InputError("slice needs P Q D")
        print(oracle.count_lattice_slice(*args.values))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="toricoh", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", help="check a fan file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    for name, helptext, func in (
        ("analyze", "classify a fan and compute H^i_c(X, O)", cmd_analyze),
        ("complete", "smooth toric compactification of a fan", cmd_complete),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("file", nargs="?")
        p.add_argument("--builtin", metavar="NAME", help=f"one of {', '.join(BUILTIN_NAMES)}")
        p.set_defaults(func=func)
        if name == "analyze":
            fmt = p.add_mutually_exclusive_group()
            fmt.add_argument("--json", action="store_true")
            fmt.add_argument("--text", action="store_true", help="default")
            p.add_argument("--max-degree", type=int, metavar="N")
        else:
            out = p.add_mutually_exclusive_group()
            out.add_argument("--fan-out", metavar="PATH")
            out.add_argument("--json", action="store_true")

    p = sub.add_parser("oracle", help=argparse.SUPPRESS)
    p.add_argument("what", choices=["normal-form", "slice"])
    p.add_argument("values", type=int, nargs="+")
    p.add_argument("--max-entry", type=int)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
