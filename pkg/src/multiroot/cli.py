"""Command-line entry point: ``multiroot {count,theorem,motivic,proofcheck}``.

Exit codes: 0 all checks pass, 1 verification failure, 2 usage error,
3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Sequence

from . import __version__
from .counting import theorem_partition, w_count, wbar
from .fields import is_prime
from .kernels import default_backend
from .motivic import (
    DEFAULT_TRUNCATION,
    DivisibilityError,
    affine_rule,
    kbar_closed,
    kbar_recursion,
    series_to_json,
    specialize,
)
from .partitions import ONE, ParseError, VarBasis, parse_partition
from .proofs import check_bijection, product_rule_check
from .report import BudgetExceeded, HypothesisViolation, condition_holds, validate_be

SCHEMA_VERSION = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
COUNT_COLUMNS = ["lambda", "q", "stat", "method", "value", "expected", "pass"]


class UsageError(Exception):
    pass


def int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def int_range(text: str) -> list[int]:
    """``"a..b"`` (inclusive), a single integer, or a comma list."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return list(range(int(lo), int(hi) + 1))
        return int_list(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a range like 0..3, got {text!r}")


def prime_list(text: str) -> list[int]:
    qs = int_list(text)
    bad = [q for q in qs if not is_prime(q)]
    if bad:
        raise argparse.ArgumentTypeError(f"not prime: {bad}")
    return qs


def parse_specialize(text: str) -> tuple[int, int]:
    """``"q=3"`` or ``"q=3,d=2"``."""
    fields: dict[str, int] = {}
    for item in text.split(","):
        key, sep, val = item.partition("=")
        if not sep or key.strip() not in ("q", "d"):
            raise argparse.ArgumentTypeError(f"bad specialization {text!r}; use q=<prime>[,d=<dim>]")
        fields[key.strip()] = int(val)
    if "q" not in fields:
        raise argparse.ArgumentTypeError("specialization needs q=<int>")
    return fields["q"], fields.get("d", 1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="multiroot", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"multiroot {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "text"], default="text")
    common.add_argument("--budget", type=int, default=None, help="max q^n for brute-force enumeration (env MULTIROOT_BUDGET)")

    p = sub.add_parser("count", parents=[common], help="count w or wbar for one partition")
    p.add_argument("--lambda", dest="lam", required=True, help='partition, e.g. "1^2 2"')
    p.add_argument("--basis", default=None, help="comma-separated variable names (default: integer parts)")
    p.add_argument("--q", type=prime_list, required=True)
    p.add_argument("--stat", choices=["w", "wbar"], default="w")
    p.add_argument("--method", choices=["brute", "dp", "all"], default="all")

    be = argparse.ArgumentParser(add_help=False)
    be.add_argument("--b", type=int_list, required=True)
    be.add_argument("--e", type=int_list, required=True)
    be.add_argument("--force", action="store_true", help="allow inputs violating b_i >= sum_{j<i} e_j b_j")

    p = sub.add_parser("theorem", parents=[common, be], help="compare wbar(1^k b^e) against q^(k + sum e)")
    p.add_argument("--k", type=int_range, default=[0])
    p.add_argument("--q", type=prime_list, default=[2, 3])
    p.add_argument("--method", choices=["brute", "dp", "all"], default="all")

    p = sub.add_parser("motivic", parents=[common, be], help="closed form vs recursion for the symbolic series")
    p.add_argument("--T", dest="order", type=int, default=DEFAULT_TRUNCATION)
    p.add_argument("--specialize", type=parse_specialize, default=None, metavar="q=Q[,d=D]")

    p = sub.add_parser("proofcheck", parents=[common, be], help="bijection and product-rule checks")
    p.add_argument("--k", type=int_range, default=[0])
    p.add_argument("--q", type=prime_list, default=[2, 3])
    return parser


# ------------------------------------------------------------------ commands

def _methods(choice: str) -> list[str]:
    return ["brute", "dp"] if choice == "all" else [choice]


def _evaluate(fn, lam, q, method, budget) -> tuple[int | None, str | None]:
    try:
        return fn(lam, q, method, budget), None
    except BudgetExceeded as exc:
        return None, str(exc)


def cmd_count(args) -> tuple[list[dict], int]:
    basis = VarBasis(tuple(args.basis.split(","))) if args.basis else ONE
    try:
        lam = parse_partition(args.lam, basis)
    except ParseError as exc:
        raise UsageError(str(exc))
    fn = w_count if args.stat == "w" else wbar
    methods = _methods(args.method)
    if len(basis) != 1 and "brute" in methods:
        if args.method == "brute":
            raise UsageError("brute-force counting needs integer parts")
        methods = ["dp"]
    records = []
    status = EXIT_OK
    for q in args.q:
        values = {m: _evaluate(fn, lam, q, m, args.budget) for m in methods}
        known = {m: v for m, (v, err) in values.items() if err is None}
        agree = len(set(known.values())) <= 1
        for m in methods:
            v, err = values[m]
            others = [known[o] for o in methods if o != m and o in known]
            rec = {
                "lambda": str(lam),
                "q": q,
                "stat": args.stat,
                "method": m,
                "value": v,
                "expected": others[0] if others else None,
                "pass": None if err else agree,
            }
            if err:
                rec["error"] = err
                status = _combine(status, EXIT_BUDGET)
            records.append(rec)
        if not agree:
            status = _combine(status, EXIT_FAIL)
    return records, status


def _combine(status: int, new: int) -> int:
    # verification failure dominates budget trouble
    if EXIT_FAIL in (status, new):
        return EXIT_FAIL
    return max(status, new)


def cmd_theorem(args) -> tuple[list[dict], int]:
    validate_be(args.b, args.e)
    ok = condition_holds(args.b, args.e)
    if not ok and not args.force:
        raise UsageError(f"b={args.b}, e={args.e} violates b_i >= sum_{{j<i}} e_j b_j; pass --force to compute anyway")
    records = []
    status = EXIT_OK
    for k in args.k:
        lam = theorem_partition(k, args.b, args.e)
        for q in args.q:
            expected = q ** (k + sum(args.e)) if ok else None
            values = {m: _evaluate(wbar, lam, q, m, args.budget) for m in _methods(args.method)}
            known = [v for v, err in values.values() if err is None]
            agree = len(set(known)) <= 1
            for m, (v, err) in values.items():
                if err:
                    passed = None
                    status = _combine(status, EXIT_BUDGET)
                elif ok:
                    passed = agree and v == expected
                else:
                    passed = agree
                if passed is False:
                    status = _combine(status, EXIT_FAIL)
                rec = {
                    "lambda": str(lam),
                    "q": q,
                    "stat": "wbar",
                    "method": m,
                    "value": v,
                    "expected": expected,
                    "pass": passed,
                    "k": k,
                    "hypothesis": ok,
                }
                if err:
                    rec["error"] = err
                records.append(rec)
    return records, status


def cmd_motivic(args) -> tuple[list[dict], int, dict]:
    validate_be(args.b, args.e)
    ok = condition_holds(args.b, args.e)
    if not ok and not args.force:
        raise UsageError(f"b={args.b}, e={args.e} violates b_i >= sum_{{j<i}} e_j b_j; pass --force to compute anyway")
    if args.order < 0:
        raise UsageError("--T must be >= 0")
    extra: dict[str, Any] = {"hypothesis": ok}
    try:
        closed = kbar_closed(args.b, args.e, args.order, force=True)
        recursion = kbar_recursion(args.b, args.e, args.order, force=True)
    except DivisibilityError as exc:
        extra["error"] = f"divisibility failure: {exc}"
        return [], EXIT_FAIL, extra
    diff = closed - recursion
    spec = None
    if args.specialize:
        q, d = args.specialize
        rule = affine_rule(q, d)
        spec = specialize(closed, rule)
        extra["specialization"] = {"q": q, "d": d}
    records = []
    status = EXIT_OK
    total_e = sum(args.e)
    for j in range(args.order + 1):
        rec: dict[str, Any] = {
            "power": j,
            "closed": str(closed.coeffs[j]),
            "recursion": str(recursion.coeffs[j]),
            "diff": str(diff.coeffs[j]),
        }
        passed = diff.coeffs[j].is_zero()
        if spec is not None:
            q, d = args.specialize
            expected = q ** (d * (j + total_e)) if ok else None
            rec["specialized"] = spec[j]
            rec["expected"] = expected
            if ok:
                passed = passed and spec[j] == expected
        rec["pass"] = passed
        if not passed:
            status = EXIT_FAIL
        records.append(rec)
    extra["closed"] = series_to_json(closed)
    extra["recursion"] = series_to_json(recursion)
    return records, status, extra


def cmd_proofcheck(args) -> tuple[list[dict], int]:
    validate_be(args.b, args.e)
    if not args.b:
        raise UsageError("proofcheck needs at least one b_i")
    if not condition_holds(args.b, args.e):
        raise UsageError(f"b={args.b}, e={args.e} violates b_i >= sum_{{j<i}} e_j b_j")
    records = []
    status = EXIT_OK
    for k in args.k:
        rep = check_bijection(k, args.b, args.e, strict=False)
        records.append(
            {
                "check": "bijection",
                "k": k,
                "b": args.b,
                "e": args.e,
                "q": None,
                "value": rep.comparisons["source_size"],
                "expected": rep.comparisons["target_size"],
                "pass": rep.passed,
                "diagnostics": rep.diagnostics,
            }
        )
        if not rep.passed:
            status = EXIT_FAIL
        for q in args.q:
            rep = product_rule_check(k, args.b[0], args.e, q, strict=False)
            records.append(
                {
                    "check": "product_rule",
                    "k": k,
                    "b": args.b,
                    "e": args.e,
                    "q": q,
                    "value": rep.value,
                    "expected": rep.comparisons["rhs"],
                    "pass": rep.passed,
                    "diagnostics": rep.diagnostics,
                }
            )
            if not rep.passed:
                status = EXIT_FAIL
    return records, status


# ------------------------------------------------------------------- output

def _config(args) -> dict[str, Any]:
    cfg = {k: v for k, v in sorted(vars(args).items()) if k not in ("format",)}
    if "specialize" in cfg and cfg["specialize"] is not None:
        cfg["specialize"] = {"q": cfg["specialize"][0], "d": cfg["specialize"][1]}
    return cfg


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return ",".join(str(x) for x in v)
    return str(v)


def render(args, records: list[dict], status: int, extra: dict | None = None) -> str:
    extra = extra or {}
    if args.format == "json":
        doc = {
            "schema": SCHEMA_VERSION,
            "command": args.command,
            "config": _config(args),
            "records": records,
            **{k: v for k, v in extra.items()},
            "pass": status == EXIT_OK,
            "exit_code": status,
            "meta": {"version": __version__, "backend": default_backend()},
        }
        return json.dumps(doc, indent=2, sort_keys=False) + "\n"
    if args.format == "csv":
        buf = io.StringIO()
        if args.command in ("count", "theorem"):
            columns = COUNT_COLUMNS
        elif records:
            columns = [c for c in records[0] if c != "diagnostics"]
        else:
            columns = ["error"]
            records = [{"error": extra.get("error", "")}]
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for rec in records:
            writer.writerow([_cell(rec.get(c)) for c in columns])
        return buf.getvalue()
    lines = []
    if extra.get("error"):
        lines.append(f"ERROR {extra['error']}")
    for rec in records:
        flag = {True: "PASS", False: "FAIL", None: "----"}[rec.get("pass")]
        body = "  ".join(f"{k}={_cell(v)}" for k, v in rec.items() if k not in ("pass", "diagnostics"))
        lines.append(f"{flag}  {body}")
        for diag in rec.get("diagnostics") or ():
            lines.append(f"      ! {diag}")
    lines.append(f"overall: {'PASS' if status == EXIT_OK else 'FAIL'} (exit {status})")
    return "\n".join(lines) + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    extra = None
    try:
        if args.command == "count":
            records, status = cmd_count(args)
        elif args.command == "theorem":
            records, status = cmd_theorem(args)
        elif args.command == "motivic":
            records, status, extra = cmd_motivic(args)
        else:
            records, status = cmd_proofcheck(args)
    except (UsageError, HypothesisViolation, ValueError) as exc:
        parser.print_usage(sys.stderr)
        print(f"multiroot: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(render(args, records, status, extra))
    return status


if __name__ == "__main__":
    sys.exit(main())
