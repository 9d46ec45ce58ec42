"""Command-line front end.

Subcommands: ``series`` (generating-function coefficients), ``count`` (one
exact count by any of three methods), ``table`` (a full count table),
``bijection`` (apply a path rewrite), ``cfrac`` (evaluate a JSON weight
spec), and ``verify`` (the full cross-validation report).

Exit codes: 0 success, 1 usage or input error, 2 verification failure.
JSON output renders counts and coefficients as decimal strings so arbitrary
precision survives any JSON reader.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from io import StringIO
from typing import Literal

from .cfrac import rv_cfrac, weight_spec_from_json
from .gfcount import GfQuery, stat_gf
from .paths import (
    DEFAULT_ENUM_GUARD,
    StatKind,
    build_table,
    count_exact_dp,
    enumerate_paths,
    parse_path,
    psi,
    statistics,
    theta_forward,
)
from .series import BivarSeries, Series
from .verify import run_verify

_KINDS = {"peak": StatKind.PEAK, "valley": StatKind.VALLEY}

OutputFormat = Literal["plain", "csv", "json"]


def _coeff_str(c) -> str:
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def _format_series(series: Series, fmt: OutputFormat) -> str:
    if fmt == "plain":
        return ",".join(_coeff_str(c) for c in series.coeffs)
    if fmt == "csv":
        out = StringIO()
        out.write("n,coefficient\n")
        for n, c in enumerate(series.coeffs):
            out.write(f"{n},{_coeff_str(c)}\n")
        return out.getvalue().rstrip("\n")
    return json.dumps(
        {"order": series.order, "coefficients": [_coeff_str(c) for c in series.coeffs]},
        indent=2,
    )


def _format_bivar(bv: BivarSeries, fmt: OutputFormat) -> str:
    if fmt == "plain":
        return "\n".join(
            f"z^{j}: " + ",".join(_coeff_str(c) for c in entry.coeffs)
            for j, entry in enumerate(bv.entries)
        )
    if fmt == "csv":
        out = StringIO()
        out.write("z,n,coefficient\n")
        for j, entry in enumerate(bv.entries):
            for n, c in enumerate(entry.coeffs):
                out.write(f"{j},{n},{_coeff_str(c)}\n")
        return out.getvalue().rstrip("\n")
    return json.dumps(
        {
            "z_order": bv.z_order,
            "x_order": bv.x_order,
            "entries": [[_coeff_str(c) for c in entry.coeffs] for entry in bv.entries],
        },
        indent=2,
    )


def _profile_dict(path) -> dict:
    profile = statistics(path)
    return {
        "path": path.to_text(),
        "peaks": {str(h): profile.peaks_by_height[h] for h in sorted(profile.peaks_by_height)},
        "valleys": {str(h): profile.valleys_by_height[h] for h in sorted(profile.valleys_by_height)},
        "max_height": profile.max_height,
    }


def _profile_lines(label: str, path) -> list[str]:
    info = _profile_dict(path)
    peaks = " ".join(f"{h}:{c}" for h, c in info["peaks"].items()) or "-"
    valleys = " ".join(f"{h}:{c}" for h, c in info["valleys"].items()) or "-"
    return [
        f"{label}: {info['path'] or '(empty)'}",
        f"  peaks by height:   {peaks}",
        f"  valleys by height: {valleys}",
    ]


def _cmd_series(args) -> int:
    query = GfQuery(_KINDS[args.stat], args.k, args.r, args.order)
    print(_format_series(query.evaluate(), args.format))
    return 0


def _cmd_count(args) -> int:
    kind = _KINDS[args.stat]
    if args.method == "enum":
        count = sum(
            1
            for p in enumerate_paths(args.n, guard=args.enum_guard)
            if statistics(p).count(kind, args.k) == args.r
        )
    elif args.method == "dp":
        count = count_exact_dp(args.n, args.k, args.r, kind)
    else:
        series = stat_gf(kind, args.k, args.r, args.n)
        count = series.as_integer_sequence()[args.n]
    print(count)
    return 0


def _cmd_table(args) -> int:
    table = build_table(args.n_max, args.k_max, args.method, guard=args.enum_guard)
    if args.format == "csv":
        print(table.to_csv().rstrip("\n"))
    elif args.format == "json":
        print(table.to_json())
    else:
        for (n, k, r, kind), count in table.sorted_items():
            print(f"{n} {k} {r} {kind.value} {count}")
    return 0


def _cmd_bijection(args) -> int:
    path = parse_path(args.path)
    if args.map == "psi":
        if args.k is None:
            raise ValueError("--map psi requires --k")
        image = psi(path, args.k)
    else:
        image = theta_forward(path)
    if args.format == "json":
        doc = {
            "input": _profile_dict(path),
            "output": _profile_dict(image) if image is not None else None,
        }
        print(json.dumps(doc, indent=2))
        return 0
    lines = _profile_lines("input", path)
    if image is None:
        lines.append("output: none (empty path has no outer arch)")
    else:
        lines.extend(_profile_lines("output", image))
    print("\n".join(lines))
    return 0


def _cmd_cfrac(args) -> int:
    with open(args.spec, "r", encoding="utf-8") as handle:
        text = handle.read()
    spec = weight_spec_from_json(text, args.order, args.z_order)
    result = rv_cfrac(spec, args.order, args.z_order)
    print(_format_bivar(result, args.format))
    return 0


def _cmd_verify(args) -> int:
    report = run_verify(
        n_max=args.n_max,
        k_max=args.k_max,
        r_max=args.r_max,
        order=args.order,
        guard=args.enum_guard,
    )
    print(report.text(), end="")
    return 0 if report.passed else 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dyckpeaks",
        description="Exact counts of Dyck-path peaks and valleys at a fixed height.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, choices=("plain", "csv", "json")):
        p.add_argument("--format", choices=choices, default="plain", help="output format")

    p = sub.add_parser("series", help="print generating-function coefficients")
    p.add_argument("--stat", choices=("peak", "valley"), required=True)
    p.add_argument("--k", type=int, required=True, help="height of the statistic")
    p.add_argument("--r", type=int, required=True, help="exact number of occurrences")
    p.add_argument("--order", type=int, default=30, help="truncation order (default 30)")
    add_format(p)
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("count", help="print one exact count")
    p.add_argument("--stat", choices=("peak", "valley"), required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True, help="semilength")
    p.add_argument("--method", choices=("enum", "dp", "gf"), default="dp")
    p.add_argument("--enum-guard", type=int, default=DEFAULT_ENUM_GUARD)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("table", help="emit a full count table")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--method", choices=("enum", "dp", "gf"), default="dp")
    p.add_argument("--enum-guard", type=int, default=DEFAULT_ENUM_GUARD)
    add_format(p)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("bijection", help="apply a statistic-preserving rewrite")
    p.add_argument("--map", choices=("psi", "theta"), required=True)
    p.add_argument("--k", type=int, help="height parameter (psi only)")
    p.add_argument("--path", required=True, help="path text over U/D")
    add_format(p, choices=("plain", "json"))
    p.set_defaults(func=_cmd_bijection)

    p = sub.add_parser("cfrac", help="evaluate a weighted continued fraction")
    p.add_argument("--spec", required=True, help="JSON weight-spec file")
    p.add_argument("--order", type=int, default=30, help="x truncation order")
    p.add_argument("--z-order", type=int, default=0, help="z truncation order")
    add_format(p)
    p.set_defaults(func=_cmd_cfrac)

    p = sub.add_parser("verify", help="run the cross-validation report")
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--k-max", type=int, default=5)
    p.add_argument("--r-max", type=int, default=4)
    p.add_argument("--order", type=int, default=30)
    p.add_argument("--enum-guard", type=int, default=DEFAULT_ENUM_GUARD)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 1
        return 0 if code == 0 else 1
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
