"""Batch command line front end.

Subcommands: hilbert, character, decompose, verify, series.  Exit codes are a
stable contract: 0 success (and match for method=both), 2 usage error,
3 verification mismatch.  Output is one newline-terminated document per
invocation, JSON by default.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import formulas, koszul, oracle
from .algebras import PFB_DUAL, PVB_DUAL, DecompositionTable
from .characters import cf_label, decompose
from .combinatorics import Partition, Permutation
from .verify import ORACLE_N_MAX, run_suite

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MISMATCH = 3

_ALGEBRA_FLAGS = {"pvb-dual": PVB_DUAL, "pfb-dual": PFB_DUAL}


class UsageError(Exception):
    pass


def _add_common(sub, *, cycle=False, method=False, k=False, trunc=False):
    sub.add_argument("--algebra", required=True, choices=sorted(_ALGEBRA_FLAGS))
    sub.add_argument("--n", required=True, type=int)
    if cycle:
        sub.add_argument("--cycle-type", help="comma separated parts, e.g. 2,2")
        sub.add_argument("--sigma", help='permutation, e.g. "(1 2)(3 4)" or "2,1,4,3"')
    if method:
        sub.add_argument("--method", choices=("formula", "oracle", "both"))
    if k:
        sub.add_argument("--k", "--degree", dest="k", type=int, required=True)
    if trunc:
        sub.add_argument("--trunc", type=int, default=koszul.DEFAULT_TRUNCATION)
    sub.add_argument("--output", choices=("json", "csv", "text"), default="json")
    sub.add_argument("--out", help="write the document to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidchar",
        description="Exact graded characters, Hilbert series and irreducible "
                    "decompositions for the pvb-dual and pfb-dual algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    _add_common(sub.add_parser("hilbert", help="graded dimensions"))
    _add_common(sub.add_parser("character", help="graded character at a cycle type"),
                cycle=True, method=True)
    _add_common(sub.add_parser("decompose", help="irreducible decomposition of one degree"),
                method=True, k=True)
    _add_common(sub.add_parser("series", help="Koszul-dual graded character as a truncated series"),
                cycle=True, trunc=True)

    ver = sub.add_parser("verify", help="run a cross-validation suite")
    ver.add_argument("--suite", required=True,
                     choices=("characters", "decompositions", "koszul",
                              "multiplicities", "stability", "constraints", "all"))
    ver.add_argument("--n-max", type=int)
    ver.add_argument("--n", type=int, help="alias for --n-max")
    ver.add_argument("--trunc", type=int, default=koszul.DEFAULT_TRUNCATION)
    ver.add_argument("--output", choices=("json", "csv", "text"), default="json")
    ver.add_argument("--out")
    return parser


def _emit(args, payload: dict, csv_rows, text_lines) -> None:
    if args.output == "json":
        doc = json.dumps(payload) + "\n"
    elif args.output == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerows(csv_rows)
        doc = buf.getvalue()
    else:
        doc = "".join(line + "\n" for line in text_lines)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(doc)
    else:
        sys.stdout.write(doc)


def _parse_algebra_n(args):
    algebra = _ALGEBRA_FLAGS[args.algebra]
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    return algebra, args.n


def _parse_cycle_type(args, n) -> Partition:
    if args.cycle_type and args.sigma:
        raise UsageError("give --cycle-type or --sigma, not both")
    if args.cycle_type:
        try:
            mu = Partition.from_string(args.cycle_type)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    elif args.sigma:
        try:
            mu = Permutation.from_string(args.sigma, n=n).cycle_type()
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        raise UsageError("a cycle type is required (--cycle-type or --sigma)")
    if mu.n != n:
        raise UsageError(f"cycle type {mu.to_string()!r} does not partition n={n}")
    return mu


def _resolve_method(args, algebra, n):
    if args.method:
        return args.method, None
    if n <= ORACLE_N_MAX[algebra]:
        return "both", None
    return "formula", (f"oracle infeasible at n={n} "
                       f"(bound {ORACLE_N_MAX[algebra]}); used formula only")


def cmd_hilbert(args) -> int:
    algebra, n = _parse_algebra_n(args)
    gc = formulas.hilbert(algebra, n)
    payload = {"algebra": args.algebra, "n": n, "coeffs": list(gc.coeffs)}
    rows = [("degree", "coeff")] + [(k, c) for k, c in enumerate(gc.coeffs)]
    text = [f"hilbert {args.algebra} n={n}: {list(gc.coeffs)}"]
    _emit(args, payload, rows, text)
    return EXIT_OK


def cmd_character(args) -> int:
    algebra, n = _parse_algebra_n(args)
    mu = _parse_cycle_type(args, n)
    method, warning = _resolve_method(args, algebra, n)

    results = {}
    if method in ("formula", "both"):
        results["formula"] = list(formulas.char_formula(algebra, n, mu).coeffs)
    if method in ("oracle", "both"):
        results["oracle"] = list(oracle.graded_character(algebra, n, mu).coeffs)

    if method == "both":
        match = results["formula"] == results["oracle"]
        payload = {"algebra": args.algebra, "n": n, "mu": mu.to_string(), "method": method,
                   "formula": results["formula"], "oracle": results["oracle"], "match": match}
        rows = [("degree", "formula", "oracle")] + [
            (k, f, o) for k, (f, o) in enumerate(zip(results["formula"], results["oracle"]))]
        text = [f"character {args.algebra} n={n} mu={mu.to_string()}",
                f"formula: {results['formula']}", f"oracle:  {results['oracle']}",
                f"match: {match}"]
        _emit(args, payload, rows, text)
        return EXIT_OK if match else EXIT_MISMATCH

    coeffs = results[method]
    payload = {"algebra": args.algebra, "n": n, "mu": mu.to_string(),
               "method": method, "coeffs": coeffs}
    if warning:
        payload["warning"] = warning
    rows = [("degree", "coeff")] + [(k, c) for k, c in enumerate(coeffs)]
    text = [f"character {args.algebra} n={n} mu={mu.to_string()} ({method}): {coeffs}"]
    _emit(args, payload, rows, text)
    return EXIT_OK


def _oracle_table(algebra, n, k):
    mults = decompose(oracle.degree_class_function(algebra, n, k))
    out = {}
    for lam, m in mults.items():
        if m.denominator != 1:
            raise ArithmeticError(f"non-integer oracle multiplicity {m} at {lam!r}")
        out[lam] = int(m)
    return DecompositionTable.from_dict(n, k, out)


def cmd_decompose(args) -> int:
    algebra, n = _parse_algebra_n(args)
    if not 0 <= args.k <= n - 1:
        raise UsageError(f"--k must lie in 0..{n - 1}")
    method, warning = _resolve_method(args, algebra, n)

    table = oracle_table = None
    if method in ("formula", "both"):
        table = formulas.decompose_formula(algebra, n, args.k)
    if method in ("oracle", "both"):
        oracle_table = _oracle_table(algebra, n, args.k)

    shown = table if table is not None else oracle_table
    payload = shown.to_json_dict()
    payload.update({"algebra": args.algebra, "method": method})
    rows = [("lambda", "cf", "mult")] + [
        (e["lambda"], e["cf"], e["mult"]) for e in payload["multiplicities"]]
    text = [f"decompose {args.algebra} n={n} k={args.k} ({method})"] + [
        f"  {e['cf']:<12} {e['lambda']:<12} x{e['mult']}" for e in payload["multiplicities"]]

    if method == "both":
        match = table.entries == oracle_table.entries
        payload["oracle_multiplicities"] = oracle_table.to_json_dict()["multiplicities"]
        payload["match"] = match
        formula_by = {lam: m for lam, m in table.entries}
        oracle_by = {lam: m for lam, m in oracle_table.entries}
        lambdas = sorted(set(formula_by) | set(oracle_by),
                         key=lambda lam: lam.parts, reverse=True)
        rows = [("lambda", "cf", "formula", "oracle")] + [
            (lam.to_string(), cf_label(lam), formula_by.get(lam, 0), oracle_by.get(lam, 0))
            for lam in lambdas]
        text.append(f"match: {match}")
        _emit(args, payload, rows, text)
        return EXIT_OK if match else EXIT_MISMATCH

    if warning:
        payload["warning"] = warning
    _emit(args, payload, rows, text)
    return EXIT_OK


def cmd_series(args) -> int:
    algebra, n = _parse_algebra_n(args)
    mu = _parse_cycle_type(args, n)
    if args.trunc < 0:
        raise UsageError("--trunc must be non-negative")
    series = koszul.dual_character(algebra, n, mu, args.trunc)
    payload = {"algebra": args.algebra, "n": n, "mu": mu.to_string(),
               "trunc": args.trunc, "coeffs": series.to_json_list()}
    rows = [("degree", "coeff")] + [(k, str(c)) for k, c in enumerate(series.coeffs)]
    text = [f"series {args.algebra} n={n} mu={mu.to_string()} trunc={args.trunc}: "
            + "[" + ", ".join(series.to_json_list()) + "]"]
    _emit(args, payload, rows, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    n_max = args.n_max if args.n_max is not None else args.n
    checks = run_suite(args.suite, n_max=n_max, trunc=args.trunc)
    passed = all(c.passed for c in checks)
    payload = {"suite": args.suite, "passed": passed,
               "checks": [c.to_json_dict() for c in checks]}
    rows = [("name", "passed", "detail")] + [(c.name, c.passed, c.detail) for c in checks]
    text = [f"[{'PASS' if c.passed else 'FAIL'}] {c.name}" + (f" ({c.detail})" if c.detail else "")
            for c in checks] + [f"suite {args.suite}: {'PASS' if passed else 'FAIL'}"]
    _emit(args, payload, rows, text)
    return EXIT_OK if passed else EXIT_MISMATCH


_COMMANDS = {
    "hilbert": cmd_hilbert,
    "character": cmd_character,
    "decompose": cmd_decompose,
    "series": cmd_series,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
