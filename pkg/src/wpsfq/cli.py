"""Command-line front end.

Exit status: 0 on success, 1 when a verification finds a mismatch, 2 on
usage or runtime errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from math import gcd

from .census import BudgetError, count_points, enumerate_space
from .ff import FieldError, make_field
from .fiber import CSV_FIELDS, build_fiber_report, fiber_bruteforce
from .verify import (
    SweepConfig,
    check_valuation_identity,
    frobenius_fixed_count,
    reproduce_counterexample,
    run_sweep,
    valuation_identity_sweep,
)
from .wps import SpaceError, format_coords, in_T_i, normalize, parse_coords, parse_weights

SUBCOMMANDS = ("count", "enumerate", "fiber", "verify-lemma", "counterexample", "gcd-identity", "galois-check")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _weights(text: str):
    try:
        return parse_weights(text)
    except SpaceError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wpsfq", description="Rational points and power-map fibers of weighted projective spaces over F_q.")
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def common(sp, space=True, point=False):
        if space:
            sp.add_argument("--p", type=int, required=True, help="field characteristic")
            sp.add_argument("--k", type=int, default=1, help="extension degree")
            sp.add_argument("--weights", type=_weights, required=True, help="a0,a1,...,an")
        if point:
            sp.add_argument("--i", type=int, required=True)
            sp.add_argument("--point", type=_int_list, required=True, help="x0,x1,...,xn")
        sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
        sp.add_argument("--budget", type=int, default=None, help="raw-tuple enumeration cap")

    common(sub.add_parser("count", help="number of F_q-points"))
    common(sub.add_parser("enumerate", help="list every F_q-point and the sets T_i"))
    common(sub.add_parser("fiber", help="fiber of pi_i over one point"), point=True)
    common(sub.add_parser("galois-check", help="Frobenius-fixed points over F_{q^2} vs F_q count"))

    sp = sub.add_parser("verify-lemma", help="sweep the corrected formula against brute force")
    common(sp, space=False)
    sp.add_argument("--q-list", type=_int_list, default=(2, 3, 4, 5, 7))
    sp.add_argument("--n-min", type=int, default=1)
    sp.add_argument("--n-max", type=int, default=2)
    sp.add_argument("--weight-max", type=int, default=6)
    sp.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--samples", type=int, default=500)
    sp.add_argument("--jobs", type=int, default=1)

    sp = sub.add_parser("counterexample", help="the F_5 fiber of P(a0,a1,1,4) -> P(a0,a1,2,4)")
    common(sp, space=False)
    sp.add_argument("--a0", type=int, default=1)
    sp.add_argument("--a1", type=int, default=1)

    sp = sub.add_parser("gcd-identity", help="gcd(a, m*d)/gcd(a, d) == gcd(a, m) when gcd(a, d, m) == 1")
    common(sp, space=False)
    sp.add_argument("--triple", type=_int_list, default=None, help="a,d,m to check one triple")
    sp.add_argument("--max", type=int, default=200, help="exhaustive bound when no triple is given")
    return parser


def parse_args(argv) -> argparse.Namespace:
    """Parse and validate; raises UsageError naming the offending flag."""
    args = build_parser().parse_args(argv)
    if hasattr(args, "p"):
        try:
            args.field = make_field(args.p, args.k)
        except FieldError as exc:
            raise UsageError(f"--p/--k: {exc}") from None
    if hasattr(args, "point"):
        if len(args.point) != len(args.weights):
            raise UsageError(f"--point: {len(args.point)} coordinates for {len(args.weights)} weights")
        if not 0 <= args.i < len(args.weights):
            raise UsageError(f"--i: index {args.i} out of range")
        try:
            args.P = normalize(args.field, args.weights, args.point)
        except (SpaceError, FieldError) as exc:
            raise UsageError(f"--point: {exc}") from None
    if args.subcommand == "verify-lemma":
        try:
            args.config = SweepConfig(
                q_list=args.q_list,
                n_range=tuple(range(args.n_min, args.n_max + 1)),
                weight_max=args.weight_max,
                mode=args.mode,
                samples=args.samples,
                seed=args.seed,
                budget=args.budget,
                jobs=args.jobs,
            )
        except (ValueError, FieldError) as exc:
            raise UsageError(f"--q-list/--n-max/--weight-max: {exc}") from None
    if args.subcommand == "gcd-identity" and args.triple is not None:
        if len(args.triple) != 3 or min(args.triple) < 1:
            raise UsageError("--triple: expected three positive integers a,d,m")
    return args


def _csv(rows, header) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _fiber_csv(reports) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for r in reports:
        row = r.to_dict()
        row["target_weights"] = format_coords(r.target_weights)
        writer.writerow(row)
    return buf.getvalue()


def _dumps(obj) -> str:
    return json.dumps(obj) + "\n"


def dispatch(args: argparse.Namespace) -> tuple[int, str]:
    """Run a parsed invocation; returns (exit status, rendered output)."""
    fmt = args.format
    cmd = args.subcommand

    if cmd == "count":
        n = count_points(args.field, args.weights, args.budget)
        if fmt == "json":
            return 0, _dumps({"q": args.field.q, "p": args.p, "k": args.k, "weights": list(args.weights), "count": n})
        if fmt == "csv":
            return 0, _csv([[args.field.q, args.p, args.k, format_coords(args.weights), n]], ["q", "p", "k", "weights", "count"])
        return 0, f"{n}\n"

    if cmd == "enumerate":
        census = enumerate_space(args.field, args.weights, args.budget)
        if fmt == "json":
            return 0, census.to_json() + "\n"
        if fmt == "csv":
            return 0, census.to_csv()
        lines = [f"{census.count} points of P{args.weights}(F_{args.field.q})"]
        lines += [str(pt) for pt in census.points]
        for i, ts in enumerate(census.t_sets):
            lines.append(f"T_{i}: {len(ts)} points")
        return 0, "\n".join(lines) + "\n"

    if cmd == "fiber":
        if not in_T_i(args.P, args.i):
            brute = len(fiber_bruteforce(args.weights, args.i, args.P, args.budget))
            doc = {"q": args.field.q, "p": args.p, "k": args.k, "target_weights": list(args.weights),
                   "i": args.i, "point": format_coords(args.P.coords), "in_T_i": False, "brute": brute}
            if fmt == "json":
                return 0, _dumps(doc)
            if fmt == "csv":
                return 0, _csv([list(doc.values())], list(doc))
            return 0, f"{args.P} is not in T_{args.i}; brute={brute}\n"
        report = build_fiber_report(args.weights, args.i, args.P, args.budget)
        status = 0 if report.match else 1
        if fmt == "json":
            return status, _dumps(report.to_dict())
        if fmt == "csv":
            return status, _fiber_csv([report])
        return status, report.summary() + "\n"

    if cmd == "verify-lemma":
        report = run_sweep(args.config)
        status = 0 if report.ok else 1
        print(report.summary(), file=sys.stderr)
        if fmt == "json":
            return status, report.to_json()
        if fmt == "csv":
            return status, report.to_csv()
        lines = [report.summary()] + [m.summary() for m in report.mismatches]
        return status, "\n".join(lines) + "\n"

    if cmd == "counterexample":
        report = reproduce_counterexample(args.a0, args.a1)
        if fmt == "json":
            return 0, _dumps(report.to_dict())
        if fmt == "csv":
            return 0, _fiber_csv([report])
        return 0, report.summary() + "\n"

    if cmd == "gcd-identity":
        if args.triple is not None:
            a, d, m = args.triple
            holds, witnesses = check_valuation_identity(a, d, m)
            coprime = gcd(gcd(a, d), m) == 1
            status = 1 if coprime and not holds else 0
            doc = {"a": a, "d": d, "m": m, "hypothesis": coprime, "holds": holds,
                   "witnesses": [w.__dict__ for w in witnesses]}
            if fmt == "json":
                return status, _dumps(doc)
            if fmt == "csv":
                rows = [[a, d, m, w.ell, w.alpha, w.kappa, w.delta, w.lhs, w.rhs] for w in witnesses]
                return status, _csv(rows, ["a", "d", "m", "ell", "alpha", "kappa", "delta", "lhs", "rhs"])
            return status, f"a={a} d={d} m={m} hypothesis={coprime} holds={holds}\n"
        counts = valuation_identity_sweep(args.max)
        status = 1 if counts["identity_failures"] or counts["witness_failures"] else 0
        if fmt == "json":
            return status, _dumps({"max": args.max, **counts})
        if fmt == "csv":
            return status, _csv([[args.max, *counts.values()]], ["max", *counts])
        return status, " ".join(f"{k}={v}" for k, v in counts.items()) + "\n"

    if cmd == "galois-check":
        fixed = frobenius_fixed_count(args.weights, args.p, args.k, args.budget)
        count = count_points(args.field, args.weights, args.budget)
        status = 0 if fixed == count else 1
        doc = {"q": args.field.q, "p": args.p, "k": args.k, "weights": list(args.weights),
               "frobenius_fixed": fixed, "count": count, "equal": fixed == count}
        if fmt == "json":
            return status, _dumps(doc)
        if fmt == "csv":
            return status, _csv([list(doc.values())], list(doc))
        return status, f"frobenius_fixed={fixed} count={count} equal={fixed == count}\n"

    raise UsageError(f"unknown subcommand {cmd!r}")  # argparse rejects these first


def main(argv=None) -> int:
    try:
        args = parse_args(sys.argv[1:] if argv is None else argv)
        status, out = dispatch(args)
    except UsageError as exc:
        print(f"wpsfq: usage error: {exc}", file=sys.stderr)
        return 2
    except (BudgetError, SpaceError, FieldError, ArithmeticError, AssertionError, RuntimeError) as exc:
        print(f"wpsfq: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return status
