"""Command-line front end.

    enrichcat validate FILE... [--level LEVEL] [--out PATH] [--format text|json]
    enrichcat apply --op {adjoint,p0,p1,p2,q1,q2} FILE... [--out PATH] [--force]
    enrichcat roundtrip DIR [--seed N] [--trials N] [--out PATH] [--format text|json]

``adjoint``, ``apply-p`` and ``invert-p`` are shorthands for ``apply`` with the
operation implied. Exit status: 0 when every check passes, 1 when some check
fails, 2 for unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import equivalence as eq
from .base import validate_base
from .enriched import (validate_vcat, validate_vmon_functor, validate_vmoncat,
                       validate_vtransform)
from .grading import validate_graded_modtens, validate_graded_vmoncat
from .mates import NotWeaklyTensored, compute_adjoint, validate_adjunction, verify_mate_lemmas
from .modtens import (validate_modtens_0cell, validate_modtens_1cell,
                      validate_modtens_2cell)
from .report import ValidationReport
from .serialize import FormatError, Workspace, dump, dump_adjunction, dump_modtens, dumps

LEVEL_KINDS = {
    "base": ("base",),
    "vcat": ("vmoncat",),
    "vmoncat": ("vmoncat",),
    "functor": ("vmonfunctor",),
    "transform": ("vtransform",),
    "modtens": ("modtens", "modtens_cell1", "modtens_cell2"),
    "graded": ("grading",),
}
DEFAULT_LEVEL = {"base": "base", "vmoncat": "vmoncat", "vmonfunctor": "functor",
                 "vtransform": "transform", "modtens": "modtens", "modtens_cell1": "modtens",
                 "modtens_cell2": "modtens", "grading": "graded"}
KIND_ORDER = ("base", "vmoncat", "vmonfunctor", "vtransform", "modtens", "modtens_cell1",
              "modtens_cell2", "grading", "adjunction")
OP_KINDS = {"adjoint": "vmoncat", "p0": "vmoncat", "p1": "vmonfunctor", "p2": "vtransform",
            "q1": "modtens_cell1", "q2": "modtens_cell2"}


class UsageError(Exception):
    pass


def _validate_artifact(ws: Workspace, kind: str, name: str, level: str) -> ValidationReport:
    obj = ws.get(kind, name)
    if level == "base":
        return validate_base(obj)
    if level == "vcat":
        return validate_vcat(obj)
    if level == "vmoncat":
        return validate_vmoncat(obj)
    if level == "functor":
        return validate_vmon_functor(obj)
    if level == "transform":
        return validate_vtransform(obj, monoidal=True)
    if level == "modtens":
        if kind == "modtens":
            return validate_modtens_0cell(obj)
        if kind == "modtens_cell1":
            return validate_modtens_1cell(obj)
        return validate_modtens_2cell(obj)
    if level == "graded":
        return _validate_grading(ws, name, obj)
    raise UsageError(f"unknown level {level}")


def _validate_grading(ws: Workspace, name: str, g) -> ValidationReport:
    doc = ws.doc("grading", name)
    kind = doc.get("target_kind", "vmoncat")
    target = ws.get(kind, doc["target"])
    if kind == "modtens":
        return validate_graded_modtens(target, g)
    report = validate_graded_vmoncat(target, g)
    # the same assignment must grade the module tensor side
    report.extend(validate_graded_modtens(eq.P0(target), g), "P0.")
    return report


def _emit(report: ValidationReport, fmt: str, out, extra: dict = None) -> str:
    if fmt == "json":
        body = report.to_dict()
        if extra:
            body.update(extra)
        text = json.dumps(body, indent=1) + "\n"
    else:
        text = "\n".join(report.lines()) + "\n"
    if out:
        Path(out).write_text(text)
    sys.stdout.write(text)
    return text


def _workspace(args) -> Workspace:
    ws = Workspace()
    for d in getattr(args, "include", None) or ():
        ws.add_search_dir(d)
    return ws


def cmd_validate(args) -> int:
    ws = _workspace(args)
    keys = []
    for p in args.paths:
        keys += ws.load(p)
    report = ValidationReport()
    ran = 0
    for kind, name in keys:
        level = args.level or DEFAULT_LEVEL.get(kind)
        if level is None or kind not in LEVEL_KINDS[level]:
            continue
        ran += 1
        report.extend(_validate_artifact(ws, kind, name, level), f"{name}:")
    if not ran:
        raise UsageError(f"no artifact in the given files can be validated at level {args.level}")
    _emit(report, args.format, args.out)
    return 0 if report.ok else 1


def _apply_one(ws: Workspace, op: str, name: str):
    kind = OP_KINDS[op]
    obj = ws.get(kind, name)
    if op == "adjoint":
        return dump_adjunction(compute_adjoint(obj))
    if op == "p0":
        return dump_modtens(eq.P0(obj), source=obj.name)
    if op == "p1":
        return dump(eq.P1(obj))
    if op == "p2":
        return dump(eq.P2(obj))
    if op == "q1":
        return dump(eq.Q1(obj))
    return dump(eq.Q2(obj))


def _precheck(ws: Workspace, op: str, name: str) -> ValidationReport:
    kind = OP_KINDS[op]
    level = DEFAULT_LEVEL[kind]
    return _validate_artifact(ws, kind, name, level)


def cmd_apply(args) -> int:
    op = args.op
    ws = _workspace(args)
    keys = []
    for p in args.paths:
        keys += ws.load(p)
    kind = OP_KINDS[op]
    names = [n for k, n in keys if k == kind]
    if not names:
        raise UsageError(f"--op {op} needs a {kind} document")
    if not args.force:
        report = ValidationReport()
        for n in names:
            report.extend(_precheck(ws, op, n), f"{n}:")
        if not report.ok:
            sys.stderr.write("input does not validate (use --force to skip):\n" + str(report) + "\n")
            return 1
    try:
        docs = [_apply_one(ws, op, n) for n in names]
    except NotWeaklyTensored as exc:
        sys.stderr.write(f"{exc}\n")
        return 1
    out = docs[0] if len(docs) == 1 else {"kind": "bundle", "name": f"{op}_output", "items": docs}
    text = dumps(out)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _infer_op(ws: Workspace, keys, choices) -> str:
    for kind, _ in keys:
        for op in choices:
            if OP_KINDS[op] == kind:
                return op
    raise UsageError("no input of a kind this command applies to")


def run_roundtrip(directory, seed: int = 0, trials: int = 100):
    """All suites over a fixture directory; returns ``(report, suites)`` where
    ``suites`` lists ``(name, ok)`` in execution order."""
    ws = Workspace()
    keys = sorted(ws.load_dir(directory), key=lambda k: (KIND_ORDER.index(k[0]), k[1]))
    report = ValidationReport()
    suites = []

    def suite(name, build):
        # corrupted input can break a construction outright; that is a failure of the suite
        try:
            sub = build()
        except (ArithmeticError, LookupError, ValueError) as exc:
            sub = ValidationReport()
            sub.record(f"{name.split(':')[0]}.construct", False, (name,), f"{type(exc).__name__}: {exc}")
        report.extend(sub, f"{name}/")
        suites.append((name, sub.ok))
        return sub

    for kind, name in keys:
        level = DEFAULT_LEVEL.get(kind)
        if kind in ("base", "vmoncat", "vmonfunctor", "vtransform", "modtens_cell1", "modtens_cell2"):
            suite(f"validate:{name}", lambda: _validate_artifact(ws, kind, name, level))
    cats = [ws.get(k, n) for k, n in keys if k == "vmoncat"]
    functors = [ws.get(k, n) for k, n in keys if k == "vmonfunctor"]
    transforms = [ws.get(k, n) for k, n in keys if k == "vtransform"]

    def mates_suite(C):
        sub = ValidationReport()
        try:
            M = eq.P0(C)
        except NotWeaklyTensored as exc:
            sub.record("adjoint.exists", False, (C.name,), str(exc))
            return sub
        sub.extend(validate_adjunction(M.adjunction))
        sub.extend(verify_mate_lemmas(M.adjunction, seed=seed, trials=trials))
        return sub

    for C in cats:
        if not suite(f"mates:{C.name}", lambda: mates_suite(C)).ok:
            continue
        suite(f"modtens:{C.name}", lambda: validate_modtens_0cell(eq.P0(C)))
        suite(f"reconstruct:{C.name}", lambda: eq.check_reconstruction(C))
    suite("roundtrip", lambda: eq.check_roundtrip(functors, transforms))
    suite("2functor", lambda: eq.check_2functoriality(functors, transforms))
    for k, n in keys:
        if k == "grading":
            suite(f"graded:{n}", lambda: _validate_grading(ws, n, ws.get(k, n)))
    if trials <= 0:
        report.note("random mate-lemma suite is vacuous (0 trials)")
    return report, suites


def cmd_roundtrip(args) -> int:
    report, suites = run_roundtrip(args.dir, args.seed, args.trials)
    failed = [s for s, ok in suites if not ok]
    header = [f"SEED {args.seed}", f"TRIALS {args.trials}"]
    header += [f"SUITE {s} {'PASS' if ok else 'FAIL'}" for s, ok in suites]
    if failed:
        first = report.first_failure(f"{failed[0]}/")
        tail = f"RESULT FAIL first_suite={failed[0]} first_check={first.check if first else 'malformed'}"
    else:
        tail = "RESULT PASS"
    if args.format == "json":
        extra = {"seed": args.seed, "trials": args.trials,
                 "suites": [{"name": s, "ok": ok} for s, ok in suites],
                 "first_failed_suite": failed[0] if failed else None}
        _emit(report, "json", args.out, extra)
    else:
        text = "\n".join(header + report.lines() + [tail]) + "\n"
        if args.out:
            Path(args.out).write_text(text)
        sys.stdout.write(text)
    return 0 if not failed and report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="enrichcat", description=__doc__.split("\n\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="run validators on artifact files")
    v.add_argument("paths", nargs="+")
    v.add_argument("--level", choices=sorted(LEVEL_KINDS))
    v.add_argument("--out")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("-I", "--include", action="append", metavar="DIR",
                   help="also resolve references from files in DIR")
    v.set_defaults(func=cmd_validate)

    def apply_args(p, with_op):
        if with_op:
            p.add_argument("--op", choices=sorted(OP_KINDS), required=True)
        p.add_argument("paths", nargs="+")
        p.add_argument("--out")
        p.add_argument("--force", action="store_true", help="skip validating the inputs")
        p.add_argument("-I", "--include", action="append", metavar="DIR",
                       help="also resolve references from files in DIR")

    a = sub.add_parser("apply", help="run a construction and write its output")
    apply_args(a, True)
    a.set_defaults(func=cmd_apply)
    for alias, choices, text in (("adjoint", ("adjoint",), "compute the tensoring adjunction"),
                                 ("apply-p", ("p0", "p1", "p2"), "apply P to the given cells"),
                                 ("invert-p", ("q1", "q2"), "apply the inverse construction")):
        p = sub.add_parser(alias, help=text)
        apply_args(p, False)
        p.set_defaults(func=cmd_apply, op_choices=choices)

    r = sub.add_parser("roundtrip", help="run every suite over a fixture directory")
    r.add_argument("dir")
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--trials", type=int, default=100)
    r.add_argument("--out")
    r.add_argument("--format", choices=("text", "json"), default="text")
    r.set_defaults(func=cmd_roundtrip)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if getattr(args, "op_choices", None):
            ws = _workspace(args)
            keys = []
            for p in args.paths:
                keys += ws.load(p)
            args.op = _infer_op(ws, keys, args.op_choices)
        return args.func(args)
    except (FormatError, UsageError, eq.MissingAdjunction) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
