"""Command-line front end: run suites, emit value tables, dump constructions.

Exit codes: 0 all checks pass, 1 any verification failure, 2 usage error.
Rationals always render as "p/q"; JSON reports follow the documented schema
{"suite", "parameters": {"order", "max"}, "checks": [...]}.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bijections, counting
from .quadforms import hurwitz_H
from .verify import SUITE_NAMES, run_suites

TABLE_COLUMNS = ("n", "a", "b", "r3", "H", "H4", "sigma0")


def _fmt(value) -> str:
    if isinstance(value, Fraction):
        return str(value)  # "p/q" or bare integer
    return str(value)


def _print_report_text(report, out):
    params = ", ".join(f"{k}={v}" for k, v in report.parameters.items())
    print(f"suite: {report.suite} ({params})", file=out)
    for c in report.checks:
        if c.passed:
            print(f"  [pass] {c.name}", file=out)
        else:
            print(f"  [FAIL] {c.name} at {c.locus}: "
                  f"expected {c.expected}, got {c.actual}", file=out)
    n_fail = len(report.failures)
    verdict = "PASS" if n_fail == 0 else f"FAIL ({n_fail} failing)"
    print(f"result: {verdict} ({len(report.checks)} checks)", file=out)


def cmd_verify(args) -> int:
    reports = run_suites(args.suite, args.order, args.max)
    if args.format == "json":
        payload = [r.to_dict() for r in reports]
        json.dump(payload[0] if len(payload) == 1 else payload,
                  sys.stdout, indent=2)
        print()
    else:
        for r in reports:
            _print_report_text(r, sys.stdout)
    return 0 if all(r.passed for r in reports) else 1


def _table_row(n: int) -> dict:
    row = {}
    row["n"] = n
    row["a"] = counting.signed_rep_count(n)
    row["b"] = counting.rep_count(n)
    row["r3"] = counting.rep_squares(3, n)
    row["H"] = hurwitz_H(n)
    row["H4"] = hurwitz_H(4 * n)
    row["sigma0"] = counting.sigma(0, n) if n > 0 else None
    return row


def cmd_table(args) -> int:
    columns = [c.strip() for c in args.columns.split(",") if c.strip()]
    for col in columns:
        if col not in TABLE_COLUMNS:
            print(f"error: unknown column {col!r}; "
                  f"choose from {', '.join(TABLE_COLUMNS)}", file=sys.stderr)
            return 2
    rows = [_table_row(n) for n in range(args.max + 1)]
    if args.format == "json":
        payload = [{c: (None if r[c] is None else
                        (r[c] if isinstance(r[c], int) else _fmt(r[c])))
                    for c in columns} for r in rows]
        json.dump(payload, sys.stdout, indent=2)
        print()
    elif args.format == "csv":
        sys.stdout.write(",".join(columns) + "\n")
        for r in rows:
            cells = ["" if r[c] is None else _fmt(r[c]) for c in columns]
            sys.stdout.write(",".join(cells) + "\n")
    else:
        widths = {c: max(len(c), max((len(_fmt(r[c])) if r[c] is not None
                                      else 1) for r in rows))
                  for c in columns}
        print("  ".join(c.rjust(widths[c]) for c in columns))
        for r in rows:
            print("  ".join(("-" if r[c] is None else _fmt(r[c]))
                            .rjust(widths[c]) for c in columns))
    return 0


def cmd_bijection(args) -> int:
    n = args.n
    if n < 1 or n % 4 == 0:
        print(f"error: n = {n} is outside the supported residue classes "
              "(need positive n with n != 0 mod 4)", file=sys.stderr)
        return 2
    triples = bijections.solution_triples(n)
    report = bijections.verify_case(n)
    entries = []
    for tr in triples:
        cat = bijections.classify_triple(tr)
        form = bijections.map_triple(tr)
        case = bijections.case_of(n, tr.r)
        if case in bijections.FORM_CATEGORY_OF_TRIPLE:
            fcat = bijections.classify_form(form, case, n)
        else:
            fcat = None
        entries.append((tr, cat, form, fcat, case))

    if args.format == "json":
        payload = {
            "n": n,
            "triples": [{
                "triple": [tr.r, tr.s, tr.t],
                "shape": tr.shape,
                "case": case,
                "category": cat,
                "form": [form.a, form.b, form.c],
                "form_category": fcat,
            } for tr, cat, form, fcat, case in entries],
            "summary": report.to_dict(),
        }
        json.dump(payload, sys.stdout, indent=2)
        print()
    else:
        for tr, cat, form, fcat, case in entries:
            catname = "all-equal" if cat == bijections.ALL_EQUAL else f"cat{cat}"
            tail = f" cat{fcat}" if fcat is not None else ""
            print(f"({tr.r},{tr.s},{tr.t}) {catname} -> "
                  f"({form.a},{form.b},{form.c}){tail}  [case {case}]")
        _print_report_text(report, sys.stdout)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qident",
        description="Exact verification of theta/class-number identities "
                    "for x^2 + 2y^2 + 2z^2 representation counts.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", default="all",
                          choices=SUITE_NAMES + ("all",))
    p_verify.add_argument("--order", type=int, default=200,
                          help="series truncation order (default 200)")
    p_verify.add_argument("--max", type=int, default=1000,
                          help="sweep bound for per-n checks (default 1000)")
    p_verify.add_argument("--format", default="text", choices=("text", "json"))
    p_verify.set_defaults(fn=cmd_verify)

    p_table = sub.add_parser("table", help="tabulate count/class-number values")
    p_table.add_argument("--max", type=int, default=30)
    p_table.add_argument("--columns", default=",".join(TABLE_COLUMNS))
    p_table.add_argument("--format", default="text",
                         choices=("text", "json", "csv"))
    p_table.set_defaults(fn=cmd_table)

    p_bij = sub.add_parser("bijection",
                           help="list the triple-to-form construction at n")
    p_bij.add_argument("n", type=int)
    p_bij.add_argument("--format", default="text", choices=("text", "json"))
    p_bij.set_defaults(fn=cmd_bijection)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses exit code 2 for usage errors already
        return int(exc.code or 0)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
