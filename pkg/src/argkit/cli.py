"""``argkit`` command line.

Exit codes: 0 when an answer was computed (a ``NO`` is still an answer),
1 on usage or parse errors, 2 when a capacity bound refuses the job.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from argkit import formats
from argkit.errors import CapacityError, UsageError
from argkit.graph_classes import DEFAULT_BUDGET, GraphClassId, distance, is_member, verify_deletion
from argkit.logic import MinsatInstance
from argkit.reductions import VARIANTS, reduce
from argkit.semantics import DEFAULT_BOUND, SemanticsId, credulous, extensions, skeptical
from argkit.validate import LEMMA1_ITEMS, ClaimId, FamilyParams, run_family, run_lemma1_family

EXIT_OK, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_framework(path: str, fmt: str | None):
    if fmt is None:
        fmt = "tgf" if path.endswith(".tgf") else "apx"
    text = _read(path)
    return formats.parse_tgf(text) if fmt == "tgf" else formats.parse_apx(text)


def _fmt_set(names) -> str:
    return "[" + ",".join(names) + "]"


def _yes(flag: bool) -> str:
    return "YES" if flag else "NO"


def cmd_solve(args) -> None:
    F = _load_framework(args.file, args.format)
    for ext in extensions(F, args.semantics, bound=args.bound):
        print(_fmt_set(ext.names))


def cmd_accept(args) -> None:
    F = _load_framework(args.file, args.format)
    fn = credulous if args.mode == "cred" else skeptical
    print(_yes(fn(F, args.semantics, args.argument, bound=args.bound)))


def cmd_classify(args) -> None:
    F = _load_framework(args.file, args.format)
    for g in GraphClassId:
        print(f"{g.name} {str(is_member(F, g)).lower()}")


def cmd_distance(args) -> None:
    F = _load_framework(args.file, args.format)
    if args.verify_set is not None:
        names = [n.strip() for n in args.verify_set.split(",") if n.strip()]
        print(_yes(verify_deletion(F, args.graph_class, names)))
        return
    try:
        cert = distance(F, args.graph_class, budget=args.budget)
    except CapacityError as exc:
        if exc.best is not None:
            print(f"greedy upper bound {exc.best.k} {_fmt_set(exc.best.deletion_set.names)}", file=sys.stderr)
        raise
    print(cert.k)
    print(_fmt_set(cert.deletion_set.names))


def _target_name(target: str) -> str:
    return f"x{target}" if target.isdigit() else target


def cmd_reduce(args) -> None:
    text = _read(args.input)
    if args.reduction == 5:
        if args.target is None:
            raise UsageError("reduction 5 needs --target VAR")
        source = MinsatInstance(formats.parse_dimacs(text), _target_name(args.target))
    else:
        if args.target is not None:
            raise UsageError("--target only applies to reduction 5")
        source = formats.parse_qdimacs(text)
    art = reduce(args.reduction, source, args.variant)
    sys.stdout.write(formats.emit_apx(art.framework))
    if args.meta:
        Path(args.meta).write_text(json.dumps(art.meta(), indent=2, sort_keys=True) + "\n", encoding="utf-8")


def _claims(value: str) -> list:
    if value.upper() in ("LEM1", "LEMMA1"):
        return list(LEMMA1_ITEMS)
    return [ClaimId.parse(value)]


def cmd_verify(args) -> None:
    claims = _claims(args.claim)
    variants = list(VARIANTS) if args.variant == "both" else [args.variant]
    defaults = FamilyParams()
    reports = []
    for variant in variants:
        params = FamilyParams(
            max_y=args.max_y, max_z=args.max_z, max_clauses=args.max_clauses,
            max_width=args.max_width, max_vars=args.max_vars, max_args=args.max_args,
            sample_max_vars=args.sample_max_vars or defaults.sample_max_vars,
            sample_max_args=args.sample_max_args or defaults.sample_max_args,
            samples=args.samples, seed=args.seed, exhaustive=not args.no_exhaustive,
            monotone=False if args.general else None, variant=variant,
            exact_limit=args.exact_limit,
        )
        if len(claims) > 1:
            reports += run_lemma1_family(params)
        else:
            reports.append(run_family(claims[0], params))
    payload = [r.to_dict(args.timing) for r in reports]
    out = payload[0] if len(payload) == 1 else payload
    print(json.dumps(out, indent=2, sort_keys=True))


def cmd_formats(args) -> None:
    for name, desc in formats.FORMATS.items():
        print(f"{name:<8} {desc}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="argkit", description="Abstract argumentation toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def framework_input(sp):
        sp.add_argument("-f", "--format", choices=["apx", "tgf"], default=None,
                        help="input format (default: by extension, else apx)")
        sp.add_argument("file", help="framework file, or - for stdin")

    def bound(sp):
        sp.add_argument("--bound", type=int, default=DEFAULT_BOUND,
                        help="refuse frameworks with more arguments (exit 2)")

    sem = [s.value for s in SemanticsId]

    sp = sub.add_parser("solve", help="enumerate extensions")
    sp.add_argument("-s", "--semantics", choices=sem, required=True)
    bound(sp)
    framework_input(sp)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("accept", help="credulous or skeptical acceptance")
    sp.add_argument("mode", choices=["cred", "skept"])
    sp.add_argument("-s", "--semantics", choices=sem, required=True)
    sp.add_argument("-a", "--argument", required=True)
    bound(sp)
    framework_input(sp)
    sp.set_defaults(func=cmd_accept)

    sp = sub.add_parser("classify", help="membership in ACY/NOEVEN/BIP/SYM")
    framework_input(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("distance", help="exact distance to a graph class")
    sp.add_argument("-g", "--graph-class", choices=[g.value for g in GraphClassId], required=True)
    sp.add_argument("--verify-set", metavar="A,B,C", help="only check this deletion set")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max subsets examined")
    framework_input(sp)
    sp.set_defaults(func=cmd_distance)

    sp = sub.add_parser("reduce", help="build a reduction framework (APX on stdout)")
    sp.add_argument("-r", "--reduction", type=int, choices=range(1, 7), required=True)
    sp.add_argument("--variant", choices=VARIANTS, default="repaired")
    sp.add_argument("--target", help="MINSAT target variable (reduction 5), e.g. 3 or x3")
    sp.add_argument("--meta", metavar="PATH", help="write the JSON sidecar here")
    sp.add_argument("input", help="QDIMACS file (DIMACS CNF for reduction 5), or -")
    sp.set_defaults(func=cmd_reduce)

    d = FamilyParams()
    sp = sub.add_parser("verify", help="check a claim over an instance family (JSON report)")
    sp.add_argument("--claim", required=True, help="claim id, or LEM1 for all five lemma items")
    sp.add_argument("--max-y", type=int, default=d.max_y)
    sp.add_argument("--max-z", type=int, default=d.max_z)
    sp.add_argument("--max-clauses", type=int, default=d.max_clauses)
    sp.add_argument("--max-width", type=int, default=d.max_width)
    sp.add_argument("--max-vars", type=int, default=d.max_vars)
    sp.add_argument("--max-args", type=int, default=d.max_args)
    sp.add_argument("--sample-max-vars", type=int, default=None)
    sp.add_argument("--sample-max-args", type=int, default=None)
    sp.add_argument("--seed", type=int, default=d.seed)
    sp.add_argument("--samples", type=int, default=d.samples)
    sp.add_argument("--no-exhaustive", action="store_true")
    sp.add_argument("--general", action="store_true", help="do not restrict the QBF family to monotone matrices")
    sp.add_argument("--variant", choices=[*VARIANTS, "both"], default=d.variant)
    sp.add_argument("--exact-limit", type=int, default=d.exact_limit,
                    help="run exact distance searches only up to this many arguments")
    sp.add_argument("--timing", action="store_true", help="include wall_time_ms (breaks byte-determinism)")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("formats", help="list supported input formats")
    sp.set_defaults(func=cmd_formats)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except CapacityError as exc:
        print(f"argkit: capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except UsageError as exc:
        print(f"argkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
