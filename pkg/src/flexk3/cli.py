"""Command line front end for the flex-divisor computations.

Subcommands: nd, table, yz, crossover, asym, selftest, each accepting
--format {text|csv|json}.  Exit codes are fixed: 0 success or agreement,
1 cross-check disagreement or internal failure, 2 usage error.  All
integers are printed in full decimal; json renders them as decimal
strings so consumers never lose precision.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from . import flexdeg, qseries
from .flexdeg import FlexReport
from .schubert import SchubertElement, monomial_integral

TABLE_FIELDS = (
    "d",
    "n_closed",
    "n_factorial",
    "n_sum_raw",
    "n_sum_resolved",
    "n_chern_monomial",
    "n_chern_schubert",
    "agree",
)

CLAIMED_WINDOW = "between d=8 and d=9"


class UsageError(Exception):
    """Invalid argument combination detected after parsing."""


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return value


def _nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative, got {value}")
    return value


def _report_cells(report: FlexReport) -> dict[str, str]:
    return {
        "d": str(report.d),
        "n_closed": str(report.n_closed),
        "n_factorial": str(report.n_factorial),
        "n_sum_raw": str(report.n_sum_raw),
        "n_sum_resolved": str(report.n_sum_resolved),
        "n_chern_monomial": str(report.n_chern_monomial),
        "n_chern_schubert": str(report.n_chern_schubert),
        "agree": "true" if report.agree else "false",
    }


def _print_text_table(header: tuple[str, ...], rows: list[dict[str, str]]) -> None:
    widths = {name: len(name) for name in header}
    for row in rows:
        for name in header:
            widths[name] = max(widths[name], len(row[name]))
    print("  ".join(name.ljust(widths[name]) for name in header).rstrip())
    for row in rows:
        print("  ".join(row[name].rjust(widths[name]) for name in header))


def _print_csv(header: tuple[str, ...], rows: list[dict[str, str]]) -> None:
    print(",".join(header))
    for row in rows:
        print(",".join(row[name] for name in header))


def _json_table_value(rows: list[dict[str, str]]) -> list[dict[str, object]]:
    out: list[dict[str, object]] = []
    for row in rows:
        obj: dict[str, object] = {}
        for name, cell in row.items():
            obj[name] = cell == "true" if name in ("agree", "flex_larger") else cell
        out.append(obj)
    return out


def _render_rows(header: tuple[str, ...], rows: list[dict[str, str]], fmt: str) -> None:
    if fmt == "text":
        _print_text_table(header, rows)
    elif fmt == "csv":
        _print_csv(header, rows)
    else:
        print(json.dumps(_json_table_value(rows), indent=2))


def cmd_nd(args: argparse.Namespace) -> int:
    if args.method == "all":
        report = flexdeg.flex_report(args.d)
        _render_rows(TABLE_FIELDS, [_report_cells(report)], args.format)
        return 0 if report.agree else 1
    if args.method == "sum":
        raw, resolved = flexdeg.nd_double_sum(args.d)
        fields = {"n_sum_raw": str(raw), "n_sum_resolved": str(resolved)}
    else:
        field, func = {
            "closed": ("n_closed", flexdeg.nd_closed),
            "factorial": ("n_factorial", flexdeg.nd_factorial),
            "monomial": ("n_chern_monomial", flexdeg.nd_chern_monomial),
            "schubert": ("n_chern_schubert", flexdeg.nd_chern_schubert),
        }[args.method]
        fields = {field: str(func(args.d))}
    if args.format == "text":
        if len(fields) == 1:
            print(next(iter(fields.values())))
        else:
            for name, value in fields.items():
                print(f"{name} {value}")
    else:
        header = ("d", *fields)
        row = {"d": str(args.d), **fields}
        _render_rows(header, [row], args.format)
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    if args.d_from > args.d_to:
        raise UsageError(f"--from {args.d_from} exceeds --to {args.d_to}")
    reports = flexdeg.cross_check(args.d_from, args.d_to)
    _render_rows(TABLE_FIELDS, [_report_cells(r) for r in reports], args.format)
    return 0 if all(r.agree for r in reports) else 1


def cmd_yz(args: argparse.Namespace) -> int:
    series = qseries.euler_power_neg24(max(1, args.max_n))
    values = [series[n] for n in range(args.max_n + 1)]
    if args.format == "text":
        for value in values:
            print(value)
    else:
        header = ("n", "a")
        rows = [{"n": str(n), "a": str(v)} for n, v in enumerate(values)]
        _render_rows(header, rows, args.format)
    return 0


def cmd_crossover(args: argparse.Namespace) -> int:
    report = qseries.crossover(args.max_d)
    header = ("d", "n_d", "yz_d", "flex_larger")
    rows = [
        {
            "d": str(r.d),
            "n_d": str(r.n_d),
            "yz_d": str(r.yz_d),
            "flex_larger": "true" if r.flex_larger else "false",
        }
        for r in report.rows
    ]
    exact = report.first_flex_dominant
    model = report.model_first_flex_dominant
    if exact is None:
        verdict = "no crossover in range"
    elif 8 <= exact <= 9:
        verdict = f"exact comparison gives d={exact} (matches)"
    else:
        verdict = f"exact comparison gives d={exact} (disagrees)"
    note = f"claimed switch window: {CLAIMED_WINDOW}; {verdict}"
    if args.format == "json":
        obj = {
            "rows": _json_table_value(rows),
            "first_flex_dominant": None if exact is None else str(exact),
            "model_first_flex_dominant": None if model is None else str(model),
            "claimed_window": CLAIMED_WINDOW,
        }
        print(json.dumps(obj, indent=2))
        return 0
    _render_rows(header, rows, args.format)
    prefix = "# " if args.format == "csv" else ""
    if exact is None:
        print(f"{prefix}first flex-dominant d (exact coefficients): none up to d={args.max_d}")
    else:
        print(f"{prefix}first flex-dominant d (exact coefficients): {exact}")
    if model is None:
        print(f"{prefix}first flex-dominant d (growth models): none up to d={args.max_d}")
    else:
        print(f"{prefix}first flex-dominant d (growth models): {model}")
    print(f"{prefix}{note}")
    return 0


def cmd_asym(args: argparse.Namespace) -> int:
    kinds = ("flex", "yz") if args.kind == "both" else (args.kind,)
    reports = []
    for kind in kinds:
        rep = qseries.asym_flex(args.d) if kind == "flex" else qseries.asym_yz(args.d)
        reports.append((kind, rep))
    if args.format == "text":
        for kind, rep in reports:
            print(
                f"{kind} d={rep.d} log_exact={rep.log_exact:.9f} "
                f"log_model={rep.log_model:.9f} log_ratio={rep.log_ratio:.9f}"
            )
        return 0
    header = ("kind", "d", "log_exact", "log_model", "log_ratio")
    rows = [
        {
            "kind": kind,
            "d": str(rep.d),
            "log_exact": f"{rep.log_exact:.9f}",
            "log_model": f"{rep.log_model:.9f}",
            "log_ratio": f"{rep.log_ratio:.9f}",
        }
        for kind, rep in reports
    ]
    _render_rows(header, rows, args.format)
    return 0


def _check_double_sum() -> None:
    for d in range(1, 26):
        raw, resolved = flexdeg.nd_double_sum(d)
        target = flexdeg.nd_closed(d)
        if resolved != target or abs(raw) != target:
            raise AssertionError(f"d={d}: raw={raw} resolved={resolved} expected {target}")


def _check_five_way() -> None:
    for report in flexdeg.cross_check(1, 25):
        if not report.agree:
            raise AssertionError(f"methods disagree at d={report.d}: {report}")


def _check_pieri_integral() -> None:
    for d in range(1, 11):
        for n in range(d + 1):
            m = 2 * d - 2 * n
            elem = SchubertElement.one(d)
            for _ in range(n):
                elem = elem.mul_sigma2()
            for _ in range(m):
                elem = elem.pieri_sigma1()
            got = elem.integrate()
            want = monomial_integral(m, n, d)
            if got != want:
                raise AssertionError(f"d={d} m={m} n={n}: pieri {got} != formula {want}")


def _check_qseries_product() -> None:
    if qseries.euler_power_neg24(100) != qseries.euler_power_neg24_by_product(100):
        raise AssertionError("recurrence and product series differ through q^100")


def _check_examples() -> None:
    if not flexdeg.example_checks():
        raise AssertionError("geometric bookkeeping identities failed")


SELFTEST_CHECKS: list[tuple[str, Callable[[], None]]] = [
    ("double-sum", _check_double_sum),
    ("five-way", _check_five_way),
    ("pieri-integral", _check_pieri_integral),
    ("qseries-product", _check_qseries_product),
    ("example-checks", _check_examples),
]


def cmd_selftest(args: argparse.Namespace) -> int:
    failed = False
    for name, check in SELFTEST_CHECKS:
        try:
            check()
        except Exception as exc:
            failed = True
            print(f"FAIL {name}: {exc}")
        else:
            print(f"PASS {name}")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flexk3",
        description="Exact flex-divisor multiples of polarized K3 surfaces, cross-checked five ways.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("text", "csv", "json"),
        default="text",
        help="output format (default: text)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_nd = sub.add_parser("nd", parents=[common], help="single flex multiple n_d")
    p_nd.add_argument("-d", type=_positive_int, required=True, help="half-degree d >= 1")
    p_nd.add_argument(
        "--method",
        choices=("closed", "factorial", "sum", "monomial", "schubert", "all"),
        default="all",
        help="which computation to run (default: all, with cross-validation)",
    )
    p_nd.set_defaults(func=cmd_nd)

    p_table = sub.add_parser("table", parents=[common], help="n_d table over a range of d")
    p_table.add_argument("--from", dest="d_from", type=_positive_int, required=True)
    p_table.add_argument("--to", dest="d_to", type=_positive_int, required=True)
    p_table.set_defaults(func=cmd_table)

    p_yz = sub.add_parser("yz", parents=[common], help="coefficients of prod (1-q^n)^(-24)")
    p_yz.add_argument("--max-n", dest="max_n", type=_nonnegative_int, required=True)
    p_yz.set_defaults(func=cmd_yz)

    p_cross = sub.add_parser("crossover", parents=[common], help="flex vs Yau-Zaslow comparison")
    p_cross.add_argument("--max-d", dest="max_d", type=_positive_int, required=True)
    p_cross.set_defaults(func=cmd_crossover)

    p_asym = sub.add_parser("asym", parents=[common], help="growth-model diagnostics")
    p_asym.add_argument("-d", type=_positive_int, required=True)
    p_asym.add_argument("--kind", choices=("flex", "yz", "both"), default="both")
    p_asym.set_defaults(func=cmd_asym)

    p_self = sub.add_parser("selftest", parents=[common], help="run the built-in cross-checks")
    p_self.set_defaults(func=cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
