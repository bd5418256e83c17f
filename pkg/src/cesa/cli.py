"""``cesa`` command line: verify the worked examples, check tables, run Q_cl pipelines."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import nilpotent as nil
from .report import EXIT_INPUT, RunReport
from .scalars import FieldSpec
from .semigroup import CayleyTable, TableError
from . import matrix_example as mx
from . import verify


def parse_field(text: str) -> FieldSpec:
    t = text.strip().lower()
    if t in ("0", "q", "qq", "rationals"):
        return FieldSpec.rationals()
    if t.startswith("f_") or t.startswith("f"):
        t = t.lstrip("f").lstrip("_")
    try:
        return FieldSpec.from_char(int(t))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad field {text!r}: {exc}") from None


def _common(p: argparse.ArgumentParser, char_default: str):
    p.add_argument("--char", "--field", dest="field", type=parse_field,
                   default=parse_field(char_default), help="p for F_p, 0 or q for Q")
    p.add_argument("--bound", type=int, default=4, help="support bound for searches")
    p.add_argument("--json", dest="json_out", type=Path, help="write the JSON report here")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--no-timing", action="store_true", help="omit timing from the JSON report")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cesa", description="Verify the worked examples, check Cayley tables, run Q_cl pipelines.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("verify-example", help="run the pipeline for example 2.1, 2.2 or 2.3")
    p.add_argument("example", choices=["2.1", "2.2", "2.3"])
    _common(p, "2")
    p.add_argument("--golden", type=Path, help="compare the derived 2.1 table with this file")
    p.add_argument("--emit-golden", type=Path, help="write the derived 2.1 table and exit")

    p = sub.add_parser("check", help="structure and essentiality of a Cayley-table semigroup algebra")
    p.add_argument("table", type=Path)
    _common(p, "2")
    p.add_argument("--mode", choices=["exhaustive", "witness", "structural"], default="exhaustive")
    p.add_argument("--cap", type=int, default=2 ** 24)
    p.add_argument("--element", help='element for witness mode, e.g. "r + f"')

    p = sub.add_parser("qcl", help="regularity, central multiplier and Q_cl witnesses")
    p.add_argument("family", choices=list(nil.FAMILIES))
    p.add_argument("element", help='e.g. "x" or "e + z" or "2*x*y + z"')
    _common(p, "2")
    p.set_defaults(bound=2)
    return ap


def run(argv: list[str]) -> tuple[RunReport | None, argparse.Namespace]:
    args = build_parser().parse_args(argv)
    command = ["cesa", *argv]
    if args.cmd == "verify-example":
        if args.emit_golden:
            args.emit_golden.write_text(mx.golden_json(), encoding="utf-8")
            print(f"wrote {args.emit_golden}")
            return None, args
        if args.example == "2.1":
            rep = verify.verify_example_21(args.field, command, args.trials, args.seed, args.golden)
        elif args.example == "2.2":
            rep = verify.verify_example_22(args.field, command, args.trials, args.bound, args.seed)
        else:
            rep = verify.verify_example_23(args.field, command, max(args.bound, 8))
    elif args.cmd == "check":
        T = CayleyTable.load(args.table)
        rep = verify.check_table(T, args.field, command, args.mode, args.bound, args.cap,
                                 args.element, args.trials, args.seed)
    else:
        rep = verify.qcl_report(args.family, args.field, args.element, command, args.bound)
    return rep, args


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        rep, args = run(argv)
    except (TableError, ValueError, LookupError, OSError) as exc:
        print(f"cesa: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if rep is None:
        return 0
    sys.stdout.write(rep.render())
    if args.json_out:
        args.json_out.write_text(rep.dumps(timing=not args.no_timing), encoding="utf-8")
    return rep.exit_code()


if __name__ == "__main__":
    sys.exit(main())
