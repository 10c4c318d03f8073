"""Command line entry point: ``nobodies verify | table | crystal``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .harness import (
    CHECK_IDS,
    CaseSpec,
    InputError,
    crystal_table,
    render_report,
    run_case,
    valuation_table,
    _markdown,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _checks(text: str) -> tuple[str, ...]:
    if text == "all":
        return CHECK_IDS
    return tuple(x.strip().upper() for x in text.split(",") if x.strip())


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which already matches the input-error code
    pass


def _case_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--series", required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--word", type=_int_list, required=True, help="reduced word, e.g. 1,2,1")
    p.add_argument("--lambda", dest="lam", type=_int_list, required=True, help="fundamental coefficients, e.g. 1,1")
    p.add_argument("--kmax", type=int, default=1)
    p.add_argument("--out", help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nobodies", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the checks C1..C10 on one case")
    _case_args(v)
    v.add_argument("--checks", type=_checks, default=CHECK_IDS, help="'all' or a list like C1,C4")
    v.add_argument("--format", choices=("json", "csv", "md"), default="json")
    v.add_argument("--alt-word", type=_int_list, default=None)
    v.add_argument("--timing", action="store_true", help="include wall-clock timings in JSON output")

    t = sub.add_parser("table", help="print the 4 x N valuation table")
    _case_args(t)
    t.add_argument("--level", type=int, default=None, help="level to print (default: kmax)")
    t.add_argument("--format", choices=("md", "csv", "json"), default="md")

    c = sub.add_parser("crystal", help="print string parametrizations of the Demazure crystal")
    _case_args(c)
    c.add_argument("--format", choices=("md", "csv", "json"), default="md")
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _table_text(report, k: int, fmt: str) -> str:
    header, rows = valuation_table(report, k)
    if fmt == "md":
        return _markdown(header, rows)
    if fmt == "csv":
        lines = [",".join(header)] + [",".join(f'"{c}"' if "," in c else c for c in r) for r in rows]
        return "\n".join(lines) + "\n"
    return json.dumps({"header": header, "rows": rows}, indent=2, ensure_ascii=False) + "\n"


def _crystal_text(report, fmt: str) -> str:
    rows = crystal_table(report)
    if fmt == "md":
        return _markdown(["level", "map", "tuple"], [[str(k), m, str(t)] for k, m, t in rows])
    if fmt == "csv":
        return "\n".join(["level,map,tuple"] + [f"{k},{m},{' '.join(map(str, t))}" for k, m, t in rows]) + "\n"
    return json.dumps(report.strings, indent=2) + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = CaseSpec(
            series=args.series,
            rank=args.rank,
            word=args.word,
            lam=args.lam,
            kmax=args.kmax,
            checks=args.checks if args.command == "verify" else (),
            fmt=getattr(args, "format", "json"),
            alt_word=getattr(args, "alt_word", None),
        )
        spec.validate()
        if args.command == "table":
            level = args.kmax if args.level is None else args.level
            if not 1 <= level <= args.kmax:
                raise InputError(f"--level must lie in 1..{args.kmax}")
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    report = run_case(spec)
    if args.command == "verify":
        _emit(render_report(report, args.format, timing=args.timing), args.out)
        for ch in report.checks:
            print(f"{ch.id}: {'pass' if ch.passed else 'FAIL'}", file=sys.stderr)
        return EXIT_OK if report.passed else EXIT_FAIL
    if args.command == "table":
        _emit(_table_text(report, level, args.format), args.out)
    else:
        _emit(_crystal_text(report, args.format), args.out)
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
