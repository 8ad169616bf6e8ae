"""Batch command-line front end.

Every command is deterministic: identical inputs produce byte-identical
output.  Exit codes: 0 success (including "negative coefficient found" --
a finding is a successful computation), 1 domain error (a request that is
undefined, e.g. a distribution over negative coefficients), 2 usage error,
3 enumeration budget exceeded.

Exact parameters are written as ``p/q`` or integer literals; decimal input
is accepted only where a computation is explicitly float-mode (clt with
--mode float_normalized), so nothing exact ever passes through binary
floating point.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import cltstats, freegroup, symmetrized
from .chebyshev import ChebKind
from .errors import DomainError, ResourceBudgetError, UsageError
from .laurent import format_exact, parse_exact

_KINDS = {"T": ChebKind.FIRST, "U": ChebKind.SECOND}


def _fmt_float(value: float) -> str:
    return f"{value:.9g}"


def _parse_kind(text: str) -> ChebKind:
    try:
        return _KINDS[text]
    except KeyError:
        raise UsageError(f"kind must be T or U, got {text!r}") from None


def _parse_n_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part]
    except ValueError as exc:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}") from exc


def _csv_lines(header: str, rows: list[str]) -> str:
    return "\n".join([header, *rows]) + "\n"


# --- per-command handlers (each returns the full output text) --------------


def _cmd_coeffs(args: argparse.Namespace) -> str:
    spec = symmetrized.SymChebSpec(kind=args.kind, n=args.n, c=args.c, k=args.k)
    poly = symmetrized.build(spec)
    terms = [(list(e), format_exact(coeff)) for e, coeff in poly.terms()]
    if args.format == "json":
        payload = {
            "kind": args.kind.value,
            "n": args.n,
            "c": format_exact(args.c),
            "k": args.k,
            "terms": [{"e": e, "coeff": coeff} for e, coeff in terms],
        }
        return json.dumps(payload) + "\n"
    header = ",".join([*(f"e{i + 1}" for i in range(args.k)), "coeff"])
    rows = [",".join([*(str(x) for x in e), coeff]) for e, coeff in terms]
    return _csv_lines(header, rows)


def _cmd_table(args: argparse.Namespace) -> str:
    table = symmetrized.univariate_table(args.kind, args.c, args.n_max)
    if args.format == "json":
        payload = {
            "kind": args.kind.value,
            "c": format_exact(args.c),
            "n_max": args.n_max,
            "rows": [
                {"n": n, "coeffs": [format_exact(v) for v in row]}
                for n, row in enumerate(table.rows)
            ],
        }
        return json.dumps(payload) + "\n"
    rows = [
        f"{n},{idx - n},{format_exact(value)}"
        for n, row in enumerate(table.rows)
        for idx, value in enumerate(row)
    ]
    return _csv_lines("n,j,value", rows)


def _cmd_positivity(args: argparse.Namespace) -> str:
    spec = symmetrized.SymChebSpec(kind=args.kind, n=args.n, c=args.c, k=args.k)
    report = symmetrized.positivity_report(spec)
    witness = list(report.witness) if report.witness is not None else None
    if args.format == "json":
        payload = {
            "kind": args.kind.value,
            "n": args.n,
            "c": format_exact(args.c),
            "k": args.k,
            "all_nonnegative": report.all_nonnegative,
            "pattern_ok": report.pattern_ok,
            "min_coefficient": format_exact(report.min_coefficient),
            "witness": witness,
        }
        return json.dumps(payload) + "\n"
    pattern = "" if report.pattern_ok is None else str(report.pattern_ok).lower()
    witness_text = "" if witness is None else ";".join(str(x) for x in witness)
    row = ",".join(
        [
            str(report.all_nonnegative).lower(),
            pattern,
            format_exact(report.min_coefficient),
            witness_text,
        ]
    )
    return _csv_lines("all_nonnegative,pattern_ok,min_coefficient,witness", [row])


def _cmd_sign_survey(args: argparse.Namespace) -> str:
    rows = symmetrized.sign_survey(args.kind, args.k, args.n_max, args.c)
    if args.format == "json":
        payload = {
            "kind": args.kind.value,
            "k": args.k,
            "n_max": args.n_max,
            "rows": [
                {
                    "c": format_exact(row.c),
                    "classification": row.classification.value,
                    "witness": None
                    if row.witness is None
                    else {
                        "n": row.witness.n,
                        "e": list(row.witness.exponents),
                        "value": format_exact(row.witness.value),
                    },
                }
                for row in rows
            ],
        }
        return json.dumps(payload) + "\n"
    lines = []
    for row in rows:
        if row.witness is None:
            lines.append(f"{format_exact(row.c)},{row.classification.value},,,")
        else:
            e_text = ";".join(str(x) for x in row.witness.exponents)
            lines.append(
                f"{format_exact(row.c)},{row.classification.value},"
                f"{row.witness.n},{e_text},{format_exact(row.witness.value)}"
            )
    return _csv_lines("c,classification,witness_n,witness_e,witness_value", lines)


def _count_table_text(table: freegroup.HomologyCountTable, fmt: str) -> str:
    items = list(table.sorted_items())
    if fmt == "json":
        payload = {
            "r": table.r,
            "n": table.n,
            "counts": [{"e": list(e), "count": count} for e, count in items],
        }
        return json.dumps(payload) + "\n"
    header = ",".join([*(f"e{i + 1}" for i in range(table.r)), "count"])
    rows = [",".join([*(str(x) for x in e), str(count)]) for e, count in items]
    return _csv_lines(header, rows)


def _cmd_fgcount(args: argparse.Namespace) -> str:
    if args.method == "oracle":
        table = freegroup.enumerate_counts(args.r, args.n)
    else:
        table = freegroup.counts_by_formula(args.r, args.n)
    return _count_table_text(table, args.format)


def _cmd_fgverify(args: argparse.Namespace) -> str:
    formula = freegroup.counts_by_formula(args.r, args.n)
    oracle = freegroup.enumerate_counts(args.r, args.n)
    keys = sorted(set(formula.counts) | set(oracle.counts))
    mismatches = [
        {
            "e": list(key),
            "formula": formula.counts.get(key, 0),
            "oracle": oracle.counts.get(key, 0),
        }
        for key in keys
        if formula.counts.get(key, 0) != oracle.counts.get(key, 0)
    ]
    status = "MATCH" if not mismatches else "MISMATCH"
    if args.format == "json":
        payload = {
            "r": args.r,
            "n": args.n,
            "status": status,
            "total_formula": formula.total(),
            "total_oracle": oracle.total(),
            "mismatches": mismatches,
        }
        return json.dumps(payload) + "\n"
    row = f"{status},{formula.total()},{oracle.total()},{len(mismatches)}"
    return _csv_lines("status,total_formula,total_oracle,mismatch_classes", [row])


def _clt_report(args: argparse.Namespace) -> tuple[cltstats.ConvergenceReport, str]:
    if args.fg_r is not None:
        if args.c is not None or args.k is not None:
            raise UsageError("--fg-r cannot be combined with --c/--k")
        report = cltstats.freegroup_convergence_report(
            args.fg_r, args.n, mode=args.mode, exact_ceiling=args.exact_ceiling
        )
        return report, f"fg:{args.fg_r}"
    if args.c is None or args.k is None:
        raise UsageError("clt needs either --c and --k, or --fg-r")
    try:
        c = parse_exact(args.c)
        c_text = format_exact(c)
    except UsageError:
        if args.mode != cltstats.MODE_FLOAT:
            raise UsageError(
                f"exact mode takes c as p/q or an integer, got {args.c!r} "
                "(decimals are float-mode only)"
            ) from None
        try:
            c = float(args.c)
        except ValueError:
            raise UsageError(f"cannot parse c: {args.c!r}") from None
        c_text = repr(c)
    report = cltstats.convergence_report(
        c, args.k, args.n, mode=args.mode, exact_ceiling=args.exact_ceiling
    )
    return report, c_text


def _cmd_clt(args: argparse.Namespace) -> str:
    report, c_text = _clt_report(args)
    if args.format == "json":
        payload = {
            "c": c_text,
            "k": report.k,
            "mode": report.mode,
            "sigma2_paper": report.sigma2_reported,
            "sigma2_rederived": report.sigma2_rederived,
            "rows": [
                {
                    "n": row.n,
                    "m2_over_n": format_exact(row.m2_over_n)
                    if isinstance(row.m2_over_n, Fraction)
                    else row.m2_over_n,
                    "kurtosis": format_exact(row.kurtosis)
                    if isinstance(row.kurtosis, Fraction)
                    else row.kurtosis,
                    "max_offdiag": format_exact(row.max_offdiag)
                    if isinstance(row.max_offdiag, Fraction)
                    else row.max_offdiag,
                    "dist_paper": row.dist_reported,
                    "dist_rederived": row.dist_rederived,
                }
                for row in report.rows
            ],
        }
        return json.dumps(payload) + "\n"
    lines = [
        ",".join(
            [
                str(row.n),
                _fmt_float(float(row.m2_over_n)),
                _fmt_float(float(row.kurtosis)),
                _fmt_float(float(row.max_offdiag)),
                _fmt_float(row.dist_reported),
                _fmt_float(row.dist_rederived),
            ]
        )
        for row in report.rows
    ]
    return _csv_lines("n,m2_over_n,kurtosis,max_offdiag,dist_paper,dist_rederived", lines)


# --- parser -----------------------------------------------------------------


def _add_common(parser: argparse.ArgumentParser, default_format: str = "json") -> None:
    parser.add_argument("--format", choices=("json", "csv"), default=default_format)
    parser.add_argument("--out", metavar="PATH", default=None, help="write output to PATH")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symcheb",
        description="Exact symmetrized Chebyshev Laurent polynomials: "
        "coefficients, sign structure, free-group word counts, and "
        "coefficient-distribution convergence.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="emit the term list of T_n(A) or U_n(A)")
    p.add_argument("--kind", type=_parse_kind, required=True, metavar="T|U")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=parse_exact, required=True, metavar="p/q")
    p.add_argument("--k", type=int, default=1)
    _add_common(p)
    p.set_defaults(handler=_cmd_coeffs)

    p = sub.add_parser("table", help="univariate coefficient table rows 0..n_max")
    p.add_argument("--kind", type=_parse_kind, required=True, metavar="T|U")
    p.add_argument("--c", type=parse_exact, required=True, metavar="p/q")
    p.add_argument("--n-max", dest="n_max", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("positivity", help="coefficient sign report for one polynomial")
    p.add_argument("--kind", type=_parse_kind, required=True, metavar="T|U")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=parse_exact, required=True, metavar="p/q")
    p.add_argument("--k", type=int, default=1)
    _add_common(p)
    p.set_defaults(handler=_cmd_positivity)

    p = sub.add_parser("sign-survey", help="classify sign behaviour over a grid of c")
    p.add_argument("--kind", type=_parse_kind, required=True, metavar="T|U")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--n-max", dest="n_max", type=int, required=True)
    p.add_argument(
        "--c", type=parse_exact, action="append", required=True, metavar="p/q",
        help="repeatable: one survey row per value",
    )
    _add_common(p)
    p.set_defaults(handler=_cmd_sign_survey)

    p = sub.add_parser("fgcount", help="cyclically reduced word counts by homology class")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("formula", "oracle"), default="formula")
    _add_common(p)
    p.set_defaults(handler=_cmd_fgcount)

    p = sub.add_parser("fgverify", help="diff the formula counts against brute force")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_fgverify)

    p = sub.add_parser("clt", help="convergence report toward the Gaussian limit")
    p.add_argument("--c", default=None, metavar="p/q",
                   help="rational parameter (decimal allowed in float mode only)")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--fg-r", dest="fg_r", type=int, default=None,
                   help="use the rank-r word-count distributions instead of --c/--k")
    p.add_argument("--n", type=_parse_n_list, required=True, metavar="N1,N2,...")
    p.add_argument("--mode", choices=(cltstats.MODE_EXACT, cltstats.MODE_FLOAT),
                   default=cltstats.MODE_EXACT)
    p.add_argument("--exact-ceiling", dest="exact_ceiling", type=int, default=None)
    _add_common(p, default_format="csv")
    p.set_defaults(handler=_cmd_clt)

    return parser


def run(argv: Sequence[str]) -> int:
    """Execute one command; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:  # argparse handles --help and usage errors
        code = exc.code if isinstance(exc.code, int) else 2
        return code
    try:
        text = args.handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 1
    except ResourceBudgetError as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return 3
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
