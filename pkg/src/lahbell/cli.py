"""Command-line front end: compute, tabulate, verify and benchmark.

Exit codes are part of the interface: 0 success, 1 a verified identity
failed, 2 bad usage, 3 an internal cross-check tripped (always a bug).
All exact values are printed as decimal strings, never floating point.
"""

import argparse
import csv
import io
import json
import random
import statistics
import sys
import time
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path

from . import __version__
from .bellpoly import bell_poly_eval, bell_poly_ones_is_stirling, bell_poly_scaling_check
from .derivative import (
    exp_recip_derivative_formula,
    exp_recip_derivative_series_oracle,
    proof_identity_check,
    proof_rhs_series,
)
from .series import gf_bell_alternating_check, gf_bell_check, gf_stirling_check
from .tables import (
    ENUMERATION_CAP,
    LAH,
    BellCalculator,
    CrossCheckError,
    TriangleTable,
    bell_classic,
    bell_enumeration_oracle,
    bell_lah_stirling,
    bell_triangle,
    factorial,
    lah,
    lah_connection_check,
    stirling2_explicit,
    stirling2_recurrence,
)

# CLI spellings of the Bell methods (hyphenated) -> library spellings
METHOD_NAMES = {
    "classic": "classic",
    "lah-stirling": "lah_stirling",
    "triangle": "triangle",
    "enumerate": "enumerate",
}

TABLE_KINDS = ("stirling2", "lah", "bellpoly-coeffs")
# method tag stamped on table records, per the output-record contract
TABLE_METHOD_TAGS = {
    "stirling2": "recurrence",
    "lah": "closed-form",
    "bellpoly-coeffs": "bellpoly-coeffs",
}
BELLPOLY_ROW_CAP = 12

SUITE_NAMES = ("theorem", "stirling", "lah", "bellpoly", "gf", "derivative", "proof", "all")

DERIVATIVE_T0_POINTS = (Fraction(2), Fraction(-3), Fraction(1, 2), Fraction(5, 3))


def _emit_records(records, fields, fmt, out=None):
    """Write records (list of dicts) as plain lines, CSV, or one JSON doc."""
    out = sys.stdout if out is None else out
    if fmt == "json":
        rows = [{f: r[f] for f in fields if r.get(f) is not None} for r in records]
        out.write(json.dumps(rows, indent=2) + "\n")
    elif fmt == "csv":
        writer = csv.writer(out)
        writer.writerow(fields)
        for r in records:
            writer.writerow(["" if r.get(f) is None else r[f] for f in fields])
    else:
        for r in records:
            out.write(" ".join(f"{f}={r[f]}" for f in fields if r.get(f) is not None) + "\n")


def cmd_bell(args):
    if (args.n is None) == (args.upto is None):
        raise ValueError("give exactly one of --n or --upto")
    method = METHOD_NAMES[args.method]
    ns = range(0, args.upto + 1) if args.upto is not None else [args.n]
    calc = BellCalculator(method)
    records = []
    for n in ns:
        if n < 0:
            raise ValueError(f"n must be >= 0, got {n}")
        if method == "enumerate" and n > ENUMERATION_CAP:
            raise ValueError(f"enumerate method is capped at n <= {ENUMERATION_CAP}")
        # the theorem formula starts at n = 1; map n = 0 to the convention here
        value = 1 if (method == "lah_stirling" and n == 0) else calc(n)
        records.append({"n": n, "method": args.method, "value": str(value)})
    _emit_records(records, ["n", "method", "value"], args.format)
    return 0


def _table_row(kind, n):
    if kind == "stirling2":
        return [stirling2_recurrence(n, k) for k in range(1, n + 1)]
    if kind == "lah":
        return [lah(n, k) for k in range(1, n + 1)]
    # bellpoly-coeffs: sum of the integer coefficients of B_{n,k},
    # i.e. the polynomial evaluated at all-ones arguments
    row = []
    for k in range(1, n + 1):
        value = bell_poly_eval(n, k, [1] * (n - k + 1))
        row.append(int(value))
    return row


def cmd_table(args):
    if args.kind not in TABLE_KINDS:
        raise ValueError(f"unknown table kind {args.kind!r}")
    if args.rows < 1:
        raise ValueError(f"--rows must be >= 1, got {args.rows}")
    if args.kind == "bellpoly-coeffs" and args.rows > BELLPOLY_ROW_CAP:
        raise ValueError(f"bellpoly-coeffs is capped at --rows <= {BELLPOLY_ROW_CAP}")
    rows = [(n, _table_row(args.kind, n)) for n in range(1, args.rows + 1)]
    if args.format == "plain":
        for _, row in rows:
            print(",".join(str(v) for v in row))
    else:
        tag = TABLE_METHOD_TAGS[args.kind]
        records = [
            {"n": n, "k": k, "method": tag, "value": str(v)}
            for n, row in rows
            for k, v in enumerate(row, start=1)
        ]
        _emit_records(records, ["n", "k", "method", "value"], args.format)
    return 0


class SuiteRun:
    """Accumulates per-suite check counts and the first counterexample."""

    def __init__(self, name):
        self.name = name
        self.passed = 0
        self.failed = 0
        self.first_failure = None

    def check(self, ok, describe):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if self.first_failure is None:
                self.first_failure = describe()


def _suite_theorem(max_n, rng):
    run = SuiteRun("theorem")
    for n in range(1, max_n + 1):
        a, b, c = bell_lah_stirling(n), bell_classic(n), bell_triangle(n)
        run.check(
            a == b == c,
            lambda n=n, a=a, b=b, c=c: f"n={n}: lah-stirling={a} classic={b} triangle={c}",
        )
    for n in range(0, min(max_n, ENUMERATION_CAP) + 1):
        e, b = bell_enumeration_oracle(n), bell_classic(n)
        run.check(e == b, lambda n=n, e=e, b=b: f"n={n}: enumerate={e} classic={b}")
    return run


def _suite_stirling(max_n, rng):
    run = SuiteRun("stirling")
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            a, b = stirling2_explicit(n, k), stirling2_recurrence(n, k)
            run.check(a == b, lambda n=n, k=k, a=a, b=b: f"(n={n},k={k}): explicit={a} recurrence={b}")
    return run


def _suite_lah(max_n, rng):
    run = SuiteRun("lah")
    table = TriangleTable(LAH)
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            a, b = lah(n, k), table.entry(n, k)
            run.check(a == b, lambda n=n, k=k, a=a, b=b: f"(n={n},k={k}): closed-form={a} recurrence={b}")
        run.check(lah(n, 1) == factorial(n), lambda n=n: f"L({n},1) != {n}!")
        run.check(lah(n, n) == 1, lambda n=n: f"L({n},{n}) != 1")
    for n in range(1, min(max_n, 12) + 1):
        run.check(lah_connection_check(n), lambda n=n: f"n={n}: rising/falling factorial conversion")
    return run


def _suite_bellpoly(max_n, rng):
    run = SuiteRun("bellpoly")
    for n in range(1, min(max_n, 12) + 1):
        for k in range(1, n + 1):
            run.check(
                bell_poly_ones_is_stirling(n, k),
                lambda n=n, k=k: f"(n={n},k={k}): B_nk(1,..,1) != S(n,k)",
            )
    for n in range(1, min(max_n, 10) + 1):
        for k in range(1, n + 1):
            for _ in range(20):
                a = Fraction(rng.randint(-6, 6), rng.randint(1, 6))
                b = Fraction(rng.randint(-6, 6), rng.randint(1, 6))
                xs = [Fraction(rng.randint(-6, 6), rng.randint(1, 6)) for _ in range(n - k + 1)]
                run.check(
                    bell_poly_scaling_check(n, k, a, b, xs),
                    lambda n=n, k=k, a=a, b=b: f"(n={n},k={k}): scaling failed at a={a} b={b}",
                )
    return run


def _suite_gf(max_n, rng):
    run = SuiteRun("gf")
    order = max(max_n, 1)
    run.check(gf_bell_check(order), lambda: f"exp(e^x-1) mismatch at order {order}")
    run.check(gf_bell_alternating_check(order), lambda: f"exp(e^-x-1) mismatch at order {order}")
    for k in range(1, min(8, order) + 1):
        run.check(
            gf_stirling_check(k, order),
            lambda k=k: f"(e^x-1)^{k}/{k}! mismatch at order {order}",
        )
    return run


def _suite_derivative(max_n, rng):
    run = SuiteRun("derivative")
    for n in range(1, max_n + 1):
        for t0 in DERIVATIVE_T0_POINTS:
            for sign in (1, -1):
                a = exp_recip_derivative_formula(n, t0, sign)
                b = exp_recip_derivative_series_oracle(n, t0, sign)
                run.check(
                    a == b,
                    lambda n=n, s=sign, t0=t0, a=a, b=b: f"n={n} sign={s:+d} t0={t0}: formula={a} series={b}",
                )
            neg = exp_recip_derivative_formula(n, t0, -1)
            mirrored = exp_recip_derivative_formula(n, -t0, 1)
            run.check(
                neg == (-mirrored if n % 2 else mirrored),
                lambda n=n, t0=t0: f"n={n} t0={t0}: sign symmetry failed",
            )
    return run


def _suite_proof(max_n, rng):
    run = SuiteRun("proof")
    for n in range(1, min(max_n, 12) + 1):
        run.check(
            proof_identity_check(n, n + 8),
            lambda n=n: f"n={n}: series identity failed at order {n + 8}",
        )
        constant = proof_rhs_series(n, 0).coefficient(0)
        want = -bell_classic(n) if n % 2 else bell_classic(n)
        run.check(
            constant == want,
            lambda n=n, c=constant, w=want: f"n={n}: constant term {c} != {w}",
        )
    return run


# suite -> (runner, default max_n when --max-n is not given)
SUITES = {
    "theorem": (_suite_theorem, 60),
    "stirling": (_suite_stirling, 40),
    "lah": (_suite_lah, 30),
    "bellpoly": (_suite_bellpoly, 10),
    "gf": (_suite_gf, 15),
    "derivative": (_suite_derivative, 10),
    "proof": (_suite_proof, 8),
}


def cmd_verify(args):
    if args.suite not in SUITE_NAMES:
        raise ValueError(f"unknown suite {args.suite!r}")
    names = list(SUITES) if args.suite == "all" else [args.suite]
    runs = []
    for name in names:
        runner, default_n = SUITES[name]
        if args.max_n is None:
            max_n = default_n
        elif args.suite == "all":
            max_n = min(args.max_n, default_n)
        else:
            max_n = args.max_n
        rng = random.Random(args.seed)
        runs.append(runner(max_n, rng))
    failed_total = 0
    for run in runs:
        total = run.passed + run.failed
        print(f"{run.name:<12} {run.passed}/{total} passed")
        failed_total += run.failed
    if failed_total:
        first = next(r for r in runs if r.first_failure is not None)
        print(f"FAIL [{first.name}] first counterexample: {first.first_failure}", file=sys.stderr)
        return 1
    print("all suites passed")
    return 0


def cmd_gf(args):
    if args.order < 1:
        raise ValueError(f"--order must be >= 1, got {args.order}")
    checks = [
        ("bell", gf_bell_check(args.order)),
        ("bell-alternating", gf_bell_alternating_check(args.order)),
    ]
    for k in range(1, min(args.max_k, args.order) + 1):
        checks.append((f"stirling k={k}", gf_stirling_check(k, args.order)))
    ok = True
    for name, passed in checks:
        print(f"{'PASS' if passed else 'FAIL'} gf {name} (order {args.order})")
        ok = ok and passed
    return 0 if ok else 1


def _run_bench(max_n, methods, repeat):
    """Time each method over n = 1..max_n with fresh memo state per sweep.

    Returns (values, timings): values[method] is the list of B_1..B_max_n,
    timings[method][n] the per-repeat nanosecond costs.  Values must agree
    across methods before any timing is reported.
    """
    values = {}
    timings = {m: {n: [] for n in range(1, max_n + 1)} for m in methods}
    for method in methods:
        calc = BellCalculator(METHOD_NAMES[method])  # warm-up sweep
        values[method] = [calc(n) for n in range(1, max_n + 1)]
        for _ in range(repeat):
            calc = BellCalculator(METHOD_NAMES[method])
            for n in range(1, max_n + 1):
                start = time.perf_counter_ns()
                value = calc(n)
                elapsed = time.perf_counter_ns() - start
                if value != values[method][n - 1]:
                    raise CrossCheckError(
                        f"method {method} not deterministic at n={n}: {value} != {values[method][n - 1]}"
                    )
                timings[method][n].append(elapsed)
    baseline = methods[0]
    for method in methods[1:]:
        for n in range(1, max_n + 1):
            if values[method][n - 1] != values[baseline][n - 1]:
                raise CrossCheckError(
                    f"methods disagree at n={n}: {baseline}={values[baseline][n - 1]} "
                    f"{method}={values[method][n - 1]}"
                )
    return values, timings


def _bench_report(max_n, methods, repeat, values, timings):
    entries = []
    for method in methods:
        for n in range(1, max_n + 1):
            ts = timings[method][n]
            entries.append(
                {
                    "method": method,
                    "n": n,
                    "value": str(values[method][n - 1]),
                    "median_ns": int(statistics.median(ts)),
                    "min_ns": min(ts),
                    "repeats": repeat,
                }
            )
    return {
        "generated_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "version": __version__,
        "max_n": max_n,
        "repeat": repeat,
        "methods": list(methods),
        "values_agree": True,
        "entries": entries,
    }


def _bench_document(report, fmt):
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    buf = io.StringIO()
    for key in ("generated_at", "version", "max_n", "repeat", "values_agree"):
        buf.write(f"# {key}={report[key]}\n")
    writer = csv.writer(buf)
    fields = ["method", "n", "value", "median_ns", "min_ns", "repeats"]
    writer.writerow(fields)
    for e in report["entries"]:
        writer.writerow([e[f] for f in fields])
    return buf.getvalue()


def cmd_bench(args):
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    if not methods:
        raise ValueError("--methods must name at least one method")
    for m in methods:
        if m not in METHOD_NAMES:
            raise ValueError(f"unknown method {m!r} (choose from {', '.join(METHOD_NAMES)})")
    if args.repeat < 3:
        raise ValueError(f"--repeat must be >= 3, got {args.repeat}")
    if args.max_n < 1:
        raise ValueError(f"--max-n must be >= 1, got {args.max_n}")
    if "enumerate" in methods and args.max_n > ENUMERATION_CAP:
        raise ValueError(f"enumerate method is capped at --max-n <= {ENUMERATION_CAP}")

    values, timings = _run_bench(args.max_n, methods, args.repeat)
    report = _bench_report(args.max_n, methods, args.repeat, values, timings)
    document = _bench_document(report, args.format)
    if args.out:
        Path(args.out).write_text(document)
        print(f"wrote report to {args.out}")
    else:
        sys.stdout.write(document)

    plot_path = None
    if not args.no_plot:
        if args.plot:
            plot_path = Path(args.plot)
        elif args.out:
            plot_path = Path(args.out).with_suffix(".png")
    if plot_path is not None:
        from .figures import render_bench_figure

        render_bench_figure(report, plot_path)
        print(f"wrote figure to {plot_path}")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lahbell",
        description="Exact Bell/Lah/Stirling computations, identity checks and benchmarks.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    bell = sub.add_parser("bell", help="compute Bell numbers by a chosen method")
    bell.add_argument("--n", type=int, help="single index to compute")
    bell.add_argument("--upto", type=int, help="compute B_0..B_UPTO")
    bell.add_argument("--method", default="classic", choices=sorted(METHOD_NAMES))
    bell.add_argument("--format", default="plain", choices=("plain", "csv", "json"))
    bell.set_defaults(func=cmd_bell)

    table = sub.add_parser("table", help="emit a number triangle, one row per line")
    table.add_argument("kind", choices=TABLE_KINDS)
    table.add_argument("--rows", type=int, required=True, help="number of rows to emit")
    table.add_argument("--format", default="plain", choices=("plain", "csv", "json"))
    table.set_defaults(func=cmd_table)

    verify = sub.add_parser("verify", help="run identity verification suites")
    verify.add_argument("--suite", default="all", choices=SUITE_NAMES)
    verify.add_argument(
        "--max-n",
        type=int,
        default=None,
        help="largest n per suite (suite 'all' clamps each suite to its default cap)",
    )
    verify.add_argument("--seed", type=int, default=0, help="seed for randomized trials")
    verify.set_defaults(func=cmd_verify)

    bench = sub.add_parser("bench", help="time Bell methods and write a report")
    bench.add_argument("--max-n", type=int, default=20)
    bench.add_argument("--methods", default="classic,lah-stirling,triangle",
                       help="comma-separated method list")
    bench.add_argument("--repeat", type=int, default=5, help="timed sweeps per method (>= 3)")
    bench.add_argument("--out", default=None, help="report file (stdout when omitted)")
    bench.add_argument("--format", default="json", choices=("json", "csv"))
    bench.add_argument("--plot", default=None, help="figure file (defaults next to --out)")
    bench.add_argument("--no-plot", action="store_true", help="skip the timing figure")
    bench.set_defaults(func=cmd_bench)

    gf = sub.add_parser("gf", help="check the generating functions to a given order")
    gf.add_argument("--order", type=int, default=15, help="truncation order")
    gf.add_argument("--max-k", type=int, default=8, help="largest Stirling column to check")
    gf.set_defaults(func=cmd_gf)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CrossCheckError as exc:
        print(f"internal cross-check failure: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
