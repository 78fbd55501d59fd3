"""Command-line driver.

Subcommands mirror the pipeline: `translate` prints the lowered theory,
`answersets` runs the bounded brute-force solver, `check` compares two
programs (agg-ht-model enumeration, or answer sets when a context is
supplied), `verify` writes the classical verification condition as a TPTP
problem.  Exit codes: 0 success / equivalent-within-scope, 1 counterexample
or answer-set mismatch, 2 error.  Identical invocations produce identical
output, except for the elapsed_ms field of --json reports.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import __version__
from .analysis import build_signature
from .classical import build_vc, emit_tptp
from .folog import formula_str
from .semantics import Scope, ScopeError, answer_sets, atom_key, check_strong_equivalence
from .syntax import Atom, ParseError, Program, parse_program
from .translate import tau_program

MAX_SUBSET_ENV = "AGGSOLVE_MAX_SUBSET"


class _CliError(Exception):
    """User-facing failure; printed to stderr with exit code 2."""


def _read_program(path: str) -> Program:
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise _CliError(f"cannot read {path}: {exc.strerror}")
    try:
        return parse_program(text)
    except ParseError as exc:
        raise _CliError(f"{path}:{exc}")


def _parse_ints(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise _CliError(f"expected LOW..HIGH, got {text!r}")
    try:
        return int(lo), int(hi)
    except ValueError:
        raise _CliError(f"expected LOW..HIGH, got {text!r}") from None


def _scope_from_args(args) -> Scope:
    constants = tuple(c for c in (args.consts or "").split(",") if c)
    if not constants and not args.ints:
        raise _CliError("a scope is required: pass --ints and/or --consts")
    int_min, int_max = 0, -1
    if args.ints:
        int_min, int_max = _parse_ints(args.ints)
    max_subset = args.max_subset
    if max_subset is None:
        max_subset = int(os.environ.get(MAX_SUBSET_ENV, "12"))
    return Scope(constants, int_min, int_max, max_subset)


def _atom_sort_key(a: Atom):
    return atom_key(a)


def format_atom_set(atoms) -> str:
    return "{" + ", ".join(str(a) for a in sorted(atoms, key=_atom_sort_key)) + "}"


def _emit_json(payload: dict, started: float):
    payload["elapsed_ms"] = round((time.monotonic() - started) * 1000, 3)
    print(json.dumps(payload, sort_keys=True))


def _cmd_translate(args) -> int:
    program = _read_program(args.file)
    sig = build_signature([program])
    theory = tau_program(args.semantics, program, sig, strict_item3=args.strict_item3)
    for sentence in theory:
        print(formula_str(sentence))
    return 0


def _cmd_answersets(args) -> int:
    started = time.monotonic()
    program = _read_program(args.file)
    scope = _scope_from_args(args)
    models = answer_sets(program, scope, args.semantics)
    ordered = sorted(models, key=lambda m: (len(m), sorted(map(_atom_sort_key, m))))
    if args.json:
        _emit_json({
            "command": "answersets",
            "semantics": args.semantics,
            "answer_sets": [[str(a) for a in sorted(m, key=_atom_sort_key)] for m in ordered],
        }, started)
    else:
        for model in ordered:
            print(format_atom_set(model))
    return 0


def _compare_answer_sets(args, left: Program, right: Program, scope: Scope, started: float) -> int:
    sem_left, sem_right = args.mode.split("-")
    context = _read_program(args.context)
    sets_left = answer_sets(left.union(context), scope, sem_left)
    sets_right = answer_sets(right.union(context), scope, sem_right)
    same = sets_left == sets_right
    if args.json:
        _emit_json({
            "command": "check",
            "mode": args.mode,
            "context": args.context,
            "verdict": "same-answer-sets" if same else "different-answer-sets",
            "left": sorted([str(a) for a in sorted(m, key=_atom_sort_key)] for m in sets_left),
            "right": sorted([str(a) for a in sorted(m, key=_atom_sort_key)] for m in sets_right),
        }, started)
    elif same:
        print(f"same {args.mode} answer sets with the given context")
    else:
        print(f"different answer sets with the given context")
        for name, models in (("left", sets_left), ("right", sets_right)):
            ordered = sorted(models, key=lambda m: (len(m), sorted(map(_atom_sort_key, m))))
            print(f"{name}: " + (" ".join(format_atom_set(m) for m in ordered) or "(none)"))
    return 0 if same else 1


def _cmd_check(args) -> int:
    started = time.monotonic()
    left = _read_program(args.left)
    right = _read_program(args.right)
    scope = _scope_from_args(args)
    if args.context:
        return _compare_answer_sets(args, left, right, scope, started)
    result = check_strong_equivalence(left, right, scope, args.mode,
                                      strict_item3=args.strict_item3)
    if args.json:
        payload = {
            "command": "check",
            "mode": args.mode,
            "verdict": "equivalent-within-scope" if result.equivalent_within_scope
                       else "counterexample",
        }
        if result.counterexample is not None:
            payload["here"] = [str(a) for a in sorted(result.counterexample.here, key=_atom_sort_key)]
            payload["there"] = [str(a) for a in sorted(result.counterexample.there, key=_atom_sort_key)]
        _emit_json(payload, started)
    elif result.equivalent_within_scope:
        print("equivalent within scope (bounded check; not a proof)")
    else:
        pair = result.counterexample
        print("counterexample pair found:")
        print(f"here:  {format_atom_set(pair.here)}")
        print(f"there: {format_atom_set(pair.there)}")
    return 0 if result.equivalent_within_scope else 1


def _cmd_verify(args) -> int:
    left = _read_program(args.left)
    right = _read_program(args.right)
    if args.context:
        context = _read_program(args.context)
        left, right = left.union(context), right.union(context)
    vc = build_vc(left, right, args.semantics, strict_item3=args.strict_item3)
    if args.print_axioms:
        for axiom in vc.ht_axioms + vc.agg_axioms:
            print(formula_str(axiom))
        if not args.no_standardness:
            for _, axiom in vc.standardness_axioms:
                print(formula_str(axiom))
    text = emit_tptp(vc, include_standardness=not args.no_standardness)
    with open(args.output, "w", encoding="utf-8") as handle:
        handle.write(text)
    print(f"wrote {args.output}")
    print("note: the emitted axioms under-approximate standard interpretations"
          " (count/sum uninterpreted); a satisfiable verdict from a prover"
          " needs manual inspection of the countermodel.")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aggsolve",
        description="Aggregate-program translations, bounded answer-set and"
                    " strong-equivalence checking, and TPTP emission.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("translate", help="print the first-order lowering of a program")
    p.add_argument("--semantics", choices=("cli", "dlv"), required=True)
    p.add_argument("--strict-item3", action="store_true",
                   help="literal reading of the singly-negated dlv clause")
    p.add_argument("file")
    p.set_defaults(func=_cmd_translate)

    p = sub.add_parser("answersets", help="brute-force answer sets within a finite scope")
    p.add_argument("--semantics", choices=("cli", "dlv"), required=True)
    p.add_argument("--consts", default="", help="comma-separated symbolic constants")
    p.add_argument("--ints", default="", help="integer interval LOW..HIGH")
    p.add_argument("--max-subset", type=int, default=None,
                   help=f"cap on aggregate instantiations (or ${MAX_SUBSET_ENV})")
    p.add_argument("--json", action="store_true")
    p.add_argument("file")
    p.set_defaults(func=_cmd_answersets)

    p = sub.add_parser("check", help="bounded strong-equivalence check of two programs")
    p.add_argument("--mode", choices=("cli-cli", "dlv-dlv", "cli-dlv"), required=True)
    p.add_argument("--consts", default="")
    p.add_argument("--ints", default="")
    p.add_argument("--max-subset", type=int, default=None)
    p.add_argument("--context", default=None,
                   help="append this program to both sides and compare answer sets instead")
    p.add_argument("--strict-item3", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("verify", help="emit the classical verification condition as TPTP")
    p.add_argument("--semantics", choices=("cli", "dlv"), required=True)
    p.add_argument("--no-standardness", action="store_true",
                   help="drop the best-effort standard-interpretation axioms")
    p.add_argument("--print-axioms", action="store_true",
                   help="also pretty-print the schema instances")
    p.add_argument("--context", default=None, help="append this program to both sides")
    p.add_argument("--strict-item3", action="store_true")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=_cmd_verify)
    return parser


def _normalize_argv(argv) -> list[str]:
    # allow `--ints -1..1`: argparse would read the value as an option
    out = []
    i = 0
    while i < len(argv):
        if argv[i] == "--ints" and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"--ints={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    args = _build_parser().parse_args(_normalize_argv(argv))
    try:
        return args.func(args)
    except (_CliError, ParseError, ScopeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
