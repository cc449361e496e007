"""Command-line interface.

Text output is the default and is byte-stable for fixed inputs; --json
switches to a versioned schema ("ncf-kit/1") in which every count is a
decimal string. Exit status: 0 success, 2 usage or input error, 3 budget
exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .count import bounds_report, boolean_e, incf, ncf_count, rncf
from .errors import BudgetExceeded, NcfKitError
from .field import PrimeField
from .functions import TruthTable, parse_table
from .ncf import NcfDescriptor, build_table, detect
from .oracle import (
    DEFAULT_CENSUS_BUDGET,
    DEFAULT_DESCRIPTOR_BUDGET,
    census,
    enumerate_ncfs,
    random_ncf,
)
from .param import check_parametrization
from .poly import interpolate

SCHEMA = "ncf-kit/1"


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (NcfKitError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ncfkit",
        description="Construct, verify, and count multistate nested canalyzing "
        "functions over prime fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, **flags):
        cmd = sub.add_parser(name, help=help_text, description=help_text)
        if flags.get("p"):
            cmd.add_argument("--p", type=int, required=True, help="prime field size")
        if flags.get("n"):
            cmd.add_argument("--n", type=int, required=True, help="number of variables")
        if flags.get("max_n"):
            cmd.add_argument("--max-n", type=int, required=True, help="largest arity to report")
        if flags.get("input"):
            cmd.add_argument(
                "--input", default="-", help="truth-table file ('p n' header line "
                "then p^n values); '-' reads standard input"
            )
        if flags.get("budget"):
            cmd.add_argument("--budget", type=int, default=flags["budget"],
                             help="abort if the sweep exceeds this size")
        cmd.add_argument("--json", action="store_true", help="emit JSON instead of text")
        return cmd

    cmd = add("count", "Exact NCF/RNCF/INCF counts for one arity.", p=True, n=True)
    cmd.set_defaults(handler=_cmd_count)

    cmd = add("table", "Counts for every arity 1..max-n.", p=True, max_n=True)
    cmd.set_defaults(handler=_cmd_table)

    cmd = add("enumerate", "Sweep all descriptors and count distinct functions.",
              p=True, n=True, budget=DEFAULT_DESCRIPTOR_BUDGET)
    cmd.add_argument("--emit", action="store_true",
                     help="stream the distinct tables (one value row per line "
                     "after a 'p n' header) instead of a summary")
    cmd.set_defaults(handler=_cmd_enumerate)

    cmd = add("census", "Run detection over every function F_p^n -> F_p.",
              p=True, n=True, budget=DEFAULT_CENSUS_BUDGET)
    cmd.set_defaults(handler=_cmd_census)

    cmd = add("detect", "Decide whether a truth table is nested canalyzing. "
              "Reports the lexicographically first descriptor in the fixed "
              "search order (variables ascending, sets prefixes-then-suffixes "
              "by threshold); the last layer of any descriptor can always "
              "trade its set for the complement with the last two outputs "
              "swapped.", input=True)
    cmd.set_defaults(handler=_cmd_detect)

    cmd = add("interpolate", "Reduced-polynomial coefficients of a truth table.",
              input=True)
    cmd.set_defaults(handler=_cmd_interpolate)

    cmd = add("random-ncf", "Sample a descriptor uniformly and print its truth "
              "table (text mode composes with 'detect'; --json also carries "
              "the descriptor).", p=True, n=True)
    cmd.add_argument("--seed", type=int, default=0, help="deterministic seed")
    cmd.set_defaults(handler=_cmd_random)

    cmd = add("bounds", "Check the exact upper bounds and the vanishing-ratio "
              "trend for 3..max-n.", p=True, max_n=True)
    cmd.set_defaults(handler=_cmd_bounds)

    cmd = add("check-param", "Check a table's polynomial coefficients against "
              "the parametrization relations for a given descriptor.", input=True)
    cmd.add_argument("--sigma", required=True, help="layer order, e.g. 2,1")
    cmd.add_argument("--sets", required=True, help="input sets, e.g. P0,S2")
    cmd.add_argument("--b", required=True, help="outputs b_1..b_{n+1}, e.g. 0,1,2")
    cmd.add_argument("--literal", action="store_true",
                     help="use the uncorrected published readings of the "
                     "interior-block, corner-sum, and n=1 constant relations")
    cmd.set_defaults(handler=_cmd_check_param)

    return parser


def _workers() -> int:
    return max(1, int(os.environ.get("NCF_KIT_THREADS", "1")))


def _emit(args, payload: dict, text: str) -> int:
    if args.json:
        print(json.dumps({"schema": SCHEMA, **payload}))
    else:
        print(text, end="" if text.endswith("\n") else "\n")
    return 0


def _read_table(args) -> TruthTable:
    if args.input == "-":
        return parse_table(sys.stdin.read())
    with open(args.input, "r", encoding="utf-8") as fh:
        return parse_table(fh.read())


def _kv_text(pairs: list[tuple[str, object]]) -> str:
    width = max(len(k) for k, _ in pairs)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in pairs) + "\n"


def _cmd_count(args) -> int:
    PrimeField(args.p)
    total = ncf_count(args.p, args.n)
    reducible = rncf(args.p, args.n)
    irreducible = incf(args.p, args.n)
    payload = {
        "p": args.p,
        "n": args.n,
        "ncf": str(total),
        "rncf": str(reducible),
        "incf": str(irreducible),
    }
    text = _kv_text([("p", args.p), ("n", args.n), ("ncf", total),
                     ("rncf", reducible), ("incf", irreducible)])
    return _emit(args, payload, text)


def _cmd_table(args) -> int:
    PrimeField(args.p)
    if args.max_n < 1:
        raise ValueError(f"--max-n must be >= 1, got {args.max_n}")
    rows = [(n, ncf_count(args.p, n)) for n in range(1, args.max_n + 1)]
    payload = {"p": args.p, "rows": [{"n": n, "ncf": str(c)} for n, c in rows]}
    wn = max(len("n"), len(str(args.max_n)))
    wc = max(len("NCF(n)"), max(len(str(c)) for _, c in rows))
    lines = [f"{'n':>{wn}}  {'NCF(n)':>{wc}}"]
    lines += [f"{n:>{wn}}  {c:>{wc}}" for n, c in rows]
    return _emit(args, payload, "\n".join(lines) + "\n")


def _cmd_enumerate(args) -> int:
    result = enumerate_ncfs(args.p, args.n, budget=args.budget,
                            include_tables=args.emit, workers=_workers())
    if args.emit and not args.json:
        lines = [f"{args.p} {args.n}"]
        lines += [" ".join(str(v) for v in t.values) for t in result.tables]
        print("\n".join(lines))
        return 0
    text = _kv_text([("p", args.p), ("n", args.n),
                     ("descriptors", result.descriptor_count),
                     ("distinct", result.distinct_function_count)])
    return _emit(args, result.to_json(), text)


def _cmd_census(args) -> int:
    hits = census(args.p, args.n, budget=args.budget, workers=_workers())
    scanned = args.p ** (args.p**args.n)
    payload = {"p": args.p, "n": args.n, "scanned": str(scanned), "ncf": str(hits)}
    text = _kv_text([("p", args.p), ("n", args.n), ("scanned", scanned), ("ncf", hits)])
    return _emit(args, payload, text)


def _cmd_detect(args) -> int:
    table = _read_table(args)
    found = detect(table)
    payload = {"ncf": found is not None,
               "descriptor": found.to_json() if found else None}
    text = found.to_text() if found else "not-ncf"
    return _emit(args, payload, text + "\n")


def _cmd_interpolate(args) -> int:
    table = _read_table(args)
    poly = interpolate(table)
    return _emit(args, poly.to_json(), poly.to_text())


def _cmd_random(args) -> int:
    descriptor = random_ncf(args.p, args.n, args.seed)
    table = build_table(descriptor)
    payload = {"descriptor": descriptor.to_json(), "table": table.to_json()}
    return _emit(args, payload, table.to_text())


def _cmd_bounds(args) -> int:
    report = bounds_report(args.p, args.max_n)
    header = f"{'n':>2}  {'rncf':>24}  split  layer  growth  {'log_ratio':>16}"
    lines = [header]
    for row in report.rows:
        lines.append(
            f"{row.n:>2}  {row.rncf:>24}  "
            f"{'ok' if row.split_bound_ok else 'FAIL':<5}  "
            f"{'ok' if row.layer_bound_ok else 'FAIL':<5}  "
            f"{'ok' if row.growth_bound_ok else 'FAIL':<6}  "
            f"{row.log_ratio:>16.3f}"
        )
    lines.append("log-ratio strictly decreasing: "
                 + ("yes" if report.log_ratio_strictly_decreasing else "no"))
    return _emit(args, report.to_json(), "\n".join(lines) + "\n")


def _cmd_check_param(args) -> int:
    table = _read_table(args)
    descriptor = NcfDescriptor.from_parts(table.field, args.sigma, args.sets, args.b)
    report = check_parametrization(interpolate(table), descriptor, literal=args.literal)
    lines = [f"{name} {'pass' if ok else 'FAIL'}"
             for name, ok in report.to_json()["checks"].items()]
    lines.append("all-pass" if report.all_pass else "not-all-pass")
    return _emit(args, report.to_json(), "\n".join(lines) + "\n")


if __name__ == "__main__":
    run()
