"""Command-line interface: ``endocount {count,table,seq,closed-form,verify}``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from itertools import permutations

from .burnside import Variant, count_classes, count_classes_naive, fixed_map_count
from .closed_form import build_closed_form, render_closed_form
from .errors import BudgetExceeded, ConsistencyError, DomainError
from .oracle import cycle_type, default_budget, fixed_points_oracle, orbit_count_oracle
from .partitions import Partition
from .sequences import SequenceSpec, compare_with_published, emit_bfile, generate_sequence

VARIANTS = [v.value for v in Variant]


def int_range(text):
    """Parse ``3`` or ``1..6`` into an inclusive range."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}") from None
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"range {text!r} is empty or not positive")
    return range(lo, hi + 1)


def positive(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def nonnegative(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("budget must be nonnegative")
    return value


def fixed_axis(text):
    axis, _, value = text.partition("=")
    if axis not in ("n", "m") or not value:
        raise argparse.ArgumentTypeError(f"expected n=VALUE or m=VALUE, got {text!r}")
    return axis, positive(value)


def _dump_json(obj):
    return json.dumps(obj, indent=2) + "\n"


def cmd_count(args):
    value = count_classes(args.n, args.m, args.variant)
    if args.format == "json":
        return _dump_json({"variant": args.variant, "n": args.n, "m": args.m, "value": str(value)})
    if args.format == "csv":
        return f"variant,n,m,value\n{args.variant},{args.n},{args.m},{value}\n"
    return f"{value}\n"


def cmd_table(args):
    grid = {(n, m): count_classes(n, m, args.variant) for m in args.m_range for n in args.n_range}
    if args.format == "json":
        rows = [{"n": n, "m": m, "value": str(v)} for (n, m), v in grid.items()]
        return _dump_json({"variant": args.variant, "rows": rows})
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["m"] + [f"n={n}" for n in args.n_range])
        for m in args.m_range:
            writer.writerow([m] + [grid[n, m] for n in args.n_range])
        return buf.getvalue()
    header = ["m\\n"] + [str(n) for n in args.n_range]
    body = [[str(m)] + [str(grid[n, m]) for n in args.n_range] for m in args.m_range]
    widths = [max(len(row[i]) for row in [header] + body) for i in range(len(header))]
    return "".join("  ".join(c.rjust(w) for c, w in zip(row, widths)) + "\n"
                   for row in [header] + body)


def cmd_seq(args):
    axis, value = args.fix
    spec = SequenceSpec(args.variant, axis, value, args.range.start, args.range.stop - 1)
    seq = generate_sequence(spec)
    if args.format == "bfile":
        offset = args.range.start if args.offset is None else args.offset
        return emit_bfile(seq, offset)
    if args.format == "json":
        return _dump_json({"variant": args.variant, "fixed": {axis: value},
                           "start": spec.start, "oeis": spec.oeis,
                           "values": [str(v) for v in seq]})
    return " ".join(str(v) for v in seq) + "\n"


def cmd_closed_form(args):
    return "".join(render_closed_form(build_closed_form(n, args.variant)) + "\n" for n in args.n)


def run_verification(max_n, max_m, variants, budget):
    """Run all brute-force and consistency checks; returns a list of (name, ok, detail)."""
    results = []

    def record(name, ok, detail=""):
        results.append((name, ok, detail))

    for v in variants:
        for n in range(1, max_n + 1):
            for m in range(1, max_m + 1):
                expected = count_classes(n, m, v)
                got = orbit_count_oracle(n, m, v, budget=budget)
                record(f"orbits {v} n={n} m={m}", got == expected, f"oracle={got} formula={expected}")
                naive = count_classes_naive(n, m, v)
                record(f"naive {v} n={n} m={m}", naive == expected, f"naive={naive} grouped={expected}")
                bad = [g for g in permutations(range(n))
                       if fixed_points_oracle(g, m, v, budget=budget)
                       != fixed_map_count(Partition(cycle_type(g)), m, v)]
                record(f"fixed points {v} n={n} m={m}", not bad,
                       f"{n}! permutations checked" + (f", failures {bad[:3]}" if bad else ""))
    report = compare_with_published()
    errata = [r for r in report.records if r.status != "confirmed"]
    record("published tables", report.ok,
           f"{report.matched}/{len(report.records)} cells match, "
           f"{len(errata)} suspected errata: "
           + "; ".join(f"{r.variant} n={r.n} m={r.m} printed {r.printed} computed {r.computed}"
                       for r in errata))
    return results


def cmd_verify(args):
    variants = [args.variant] if args.variant else VARIANTS
    results = run_verification(args.max_n, args.max_m, variants, args.budget)
    failed = [r for r in results if not r[1]]
    if args.format == "json":
        text = _dump_json({"ok": not failed, "checks": [
            {"check": name, "ok": ok, "detail": detail} for name, ok, detail in results]})
    else:
        lines = [f"{'PASS' if ok else 'FAIL'} {name}: {detail}" for name, ok, detail in results]
        lines.append(f"{len(results) - len(failed)}/{len(results)} checks passed")
        text = "\n".join(lines) + "\n"
    return text, (1 if failed else 0)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="endocount",
        description="Count m-endomorphisms of free semigroups/monoids up to relabelling.")
    parser.add_argument("-o", "--output", help="write output to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, formats, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--variant", choices=VARIANTS, default="semigroup")
        p.add_argument("--format", choices=formats, default=formats[0])
        p.set_defaults(func=func)
        return p

    p = add("count", cmd_count, ["text", "csv", "json"], "count classes for one (n, m)")
    p.add_argument("-n", type=positive, required=True)
    p.add_argument("-m", type=positive, required=True)

    p = add("table", cmd_table, ["text", "csv", "json"], "grid of counts")
    p.add_argument("--n-range", type=int_range, default=range(1, 7))
    p.add_argument("--m-range", type=int_range, default=range(1, 7))

    p = add("seq", cmd_seq, ["text", "bfile", "json"], "one row or column as a sequence")
    p.add_argument("--fix", type=fixed_axis, required=True, help="n=VALUE or m=VALUE")
    p.add_argument("--range", type=int_range, default=range(1, 7), help="LO..HI of the free axis")
    p.add_argument("--offset", type=int, default=None, help="first b-file index (default LO)")

    p = add("closed-form", cmd_closed_form, ["text"], "closed form in m for each n")
    p.add_argument("-n", type=int_range, required=True)

    p = sub.add_parser("verify", help="brute-force checks and published-table audit")
    p.add_argument("--variant", choices=VARIANTS, default=None)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--max-n", type=positive, default=3)
    p.add_argument("--max-m", type=positive, default=2)
    p.add_argument("--budget", type=nonnegative, default=None,
                   help="oracle work budget (default ENDOCOUNT_ORACLE_BUDGET or 20000000)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.func is cmd_verify:
            if args.budget is None:
                args.budget = default_budget()
            text, status = cmd_verify(args)
        else:
            text, status = args.func(args), 0
    except DomainError as exc:
        parser.print_usage(sys.stderr)
        print(f"endocount: error: {exc}", file=sys.stderr)
        return 2
    except (BudgetExceeded, ConsistencyError) as exc:
        print(f"endocount: {exc}", file=sys.stderr)
        return 1
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
