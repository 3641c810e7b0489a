"""Command-line front end: ``braidprob [--format text|json] COMMAND ...``.

Exit status is 0 on success, 1 when a check fails or ``equal`` answers
false, and 2 when the input is rejected.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import algebra as alg
from .bimonoid import BimonMorphism, cospan_to_span
from .checks import DEFAULT_SEED, SUITES, Options, run_suite
from .expr import ElaborationError, ParseError, elaborate, from_morphism, parse, to_text
from .monoid import MonMorphism

OUTPUT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["command", "result", "failures"],
    "additionalProperties": False,
    "properties": {
        "command": {"type": "string",
                    "enum": ["normalize", "compose", "equal", "span", "eval", "check"]},
        "result": {},
        "failures": {"type": "array", "items": {"type": "object"}},
    },
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _morphism(text: str) -> BimonMorphism:
    return elaborate(parse(text))


def _morphism_json(f: BimonMorphism) -> dict:
    return {
        "source": f.src,
        "target": f.tgt,
        "middle": f.mid,
        "comultiplication_side": list(f.psi.images),
        "braid": {"strands": f.braid.strands, "letters": [list(x) for x in f.braid.letters],
                  "text": str(f.braid)},
        "multiplication_side": list(f.phi.images),
        "monoidal": f.is_monoidal,
        "expression": to_text(from_morphism(f)),
    }


def _morphism_text(f: BimonMorphism) -> str:
    return "\n".join([
        f"{f.src} -> {f.tgt} through {f.mid}",
        f"comultiplication side: {f.psi}",
        f"braid: {f.braid}",
        f"multiplication side: {f.phi}",
        f"expression: {to_text(from_morphism(f))}",
        "monoidal: " + ("yes" if f.is_monoidal else "no"),
    ])


def _leg_text(f: MonMorphism) -> str:
    return to_text(from_morphism(BimonMorphism.from_mon(f)))


def _load_algebra(spec: str) -> alg.YBAlgebraData:
    path = Path(spec)
    if path.exists():
        return alg.load_algebra(path)
    if spec in alg.BUILTIN:
        return alg.BUILTIN[spec]()
    raise UsageError(f"no algebra file {spec!r} (built-in names: {', '.join(alg.BUILTIN)})")


def _format_scalar(x) -> str:
    return str(x)


# --- commands ----------------------------------------------------------------------


def cmd_normalize(args):
    f = _morphism(args.expr)
    return _morphism_json(f), _morphism_text(f), [], 0


def cmd_compose(args):
    f, g = _morphism(args.outer), _morphism(args.inner)
    if g.tgt != f.src:
        raise UsageError(f"cannot compose {f.src} -> {f.tgt} after {g.src} -> {g.tgt}")
    h = f.compose(g)
    return _morphism_json(h), _morphism_text(h), [], 0


def cmd_equal(args):
    f, g = _morphism(args.left), _morphism(args.right)
    if (f.src, f.tgt) != (g.src, g.tgt):
        raise UsageError(f"morphisms {f.src} -> {f.tgt} and {g.src} -> {g.tgt} have different types")
    same = f.equal(g)
    return same, "true" if same else "false", [], 0 if same else 1


def cmd_span(args):
    legs = []
    for text in (args.alpha, args.beta):
        f = _morphism(text)
        if not f.is_monoidal:
            raise UsageError(f"span leg {text!r} uses comultiplication or counit")
        legs.append(MonMorphism(f.phi, f.braid))
    alpha, beta = legs
    if alpha.tgt != beta.tgt:
        raise UsageError(f"cospan legs end at {alpha.tgt} and {beta.tgt}")
    span = cospan_to_span(alpha, beta)
    result = {
        "middle": span.mid,
        "left": {"target": span.left.tgt, "map": list(span.left.ord.images),
                 "braid": str(span.left.braid), "expression": _leg_text(span.left)},
        "right": {"target": span.right.tgt, "map": list(span.right.ord.images),
                  "braid": str(span.right.braid), "expression": _leg_text(span.right)},
    }
    text = "\n".join([
        f"span {span.left.tgt} <- {span.mid} -> {span.right.tgt}",
        f"left: {_leg_text(span.left)}",
        f"right: {_leg_text(span.right)}",
    ])
    return result, text, [], 0


def cmd_eval(args):
    A = _load_algebra(args.algebra)
    f = _morphism(args.expr)
    mat = alg.evaluate(f, A)
    rows = alg.matrix_to_json(A.field, mat)
    result = {"rows": mat.shape[0], "cols": mat.shape[1], "field": A.field.spec(), "matrix": rows}
    width = max((len(_format_scalar(x)) for row in rows for x in row), default=1)
    text = "\n".join(" ".join(_format_scalar(x).rjust(width) for x in row) for row in rows)
    return result, f"{mat.shape[0]} x {mat.shape[1]} over {A.field}\n{text}", [], 0


def cmd_check(args):
    opts = Options(args.max_strands, args.max_length, args.cases, args.seed)
    if args.algebra:
        opts.algebras = [_load_algebra(args.algebra)]
    names = SUITES if args.suite == "all" else (args.suite,)
    suites, failures, lines = [], [], []
    for name in names:
        run = run_suite(name, opts)
        report = run["report"]
        entry = {"suite": name, "passed": run["passed"], "laws": [law.to_json() for law in report.laws]}
        if "symmetric" in run:
            entry["symmetric"] = run["symmetric"]
        suites.append(entry)
        failures += [{"suite": name, **law.to_json()} for law in report.failures()]
        lines.append(f"== {name}")
        lines += [str(law) for law in report.laws]
        for algebra_name, symmetric in run.get("symmetric", {}).items():
            lines.append(f"info  {algebra_name}: braiding squares to the identity: "
                         + ("yes" if symmetric else "no"))
        lines.append(f"{name}: " + ("PASS" if run["passed"] else "FAIL"))
    passed = not failures
    result = {"passed": passed, "seed": args.seed, "suites": suites}
    return result, "\n".join(lines), failures, 0 if passed else 1


# --- entry point ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS,
                     help="output format (default: text)")
    parser = _Parser(prog="braidprob", parents=[fmt],
                     description="Normal forms, composition and matrix semantics for the "
                                 "braided monoid and bimonoid PROBs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("normalize", parents=[fmt], help="canonical triple of an expression")
    p.add_argument("expr")
    p.set_defaults(run=cmd_normalize)

    p = sub.add_parser("compose", parents=[fmt], help="OUTER . INNER")
    p.add_argument("outer")
    p.add_argument("inner")
    p.set_defaults(run=cmd_compose)

    p = sub.add_parser("equal", parents=[fmt], help="whether two expressions denote the same morphism")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(run=cmd_equal)

    p = sub.add_parser("span", parents=[fmt], help="rewrite a cospan of monoid-PROB morphisms as a span")
    p.add_argument("alpha")
    p.add_argument("beta")
    p.set_defaults(run=cmd_span)

    p = sub.add_parser("eval", parents=[fmt], help="matrix of an expression in an algebra")
    p.add_argument("--algebra", required=True, help="algebra JSON file or built-in name")
    p.add_argument("expr")
    p.set_defaults(run=cmd_eval)

    p = sub.add_parser("check", parents=[fmt], help="run a check suite")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--max-strands", type=int, help="largest object in exhaustive grids")
    p.add_argument("--max-length", type=int, help="longest braid word in exhaustive grids")
    p.add_argument("--cases", type=int, help="number of random cases")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--algebra", help="algebra JSON file or built-in name (default: built-ins)")
    p.set_defaults(run=cmd_check)
    return parser


def _emit(fmt: str, command: str, result, text: str, failures: list, out) -> None:
    if fmt == "json":
        json.dump({"command": command, "result": result, "failures": failures}, out, indent=2)
        out.write("\n")
    elif text:
        out.write(text + "\n")


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    fmt = "json" if _wants_json(argv) else "text"
    command = next((a for a in argv if a in parser._subparsers._group_actions[0].choices), None)
    try:
        args = parser.parse_args(argv)
        fmt = getattr(args, "format", "text")
        result, text, failures, code = args.run(args)
    except (UsageError, ParseError, ElaborationError, alg.AlgebraError, ValueError) as exc:
        if fmt == "json" and command:
            _emit(fmt, command, None, "", [{"error": str(exc)}], out)
        else:
            err.write(f"braidprob: error: {exc}\n")
            if isinstance(exc, UsageError):
                err.write(parser.format_usage())
        return 2
    _emit(fmt, args.command, result, text, failures, out)
    return code


def _wants_json(argv) -> bool:
    for i, a in enumerate(argv):
        if a == "--format=json" or (a == "--format" and i + 1 < len(argv) and argv[i + 1] == "json"):
            return True
    return False


if __name__ == "__main__":
    sys.exit(main())
