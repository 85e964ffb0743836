"""Command-line front end.

Every operation is a subcommand with machine-readable output on stdout
(diagnostics go to stderr). Fractions are passed as two integer
arguments, reduced internally, and the reduced pair is echoed in the
output. Output is deterministic given the flags; ``--jobs`` only affects
wall time.

Exit codes (stable API): 0 ok, 2 domain error, 3 digit guard exceeded,
4 search inconclusive, 5 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from math import gcd

from . import counterexamples, greedy, lemmas, underapprox
from .errors import DigitGuardExceeded, DomainError, SearchInconclusive

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_GUARD = 3
EXIT_INCONCLUSIVE = 4
EXIT_VERIFY_FAILED = 5

DEFAULT_DIGIT_GUARD = 10_000


def _reduced(p: int, q: int) -> tuple[int, int]:
    if q == 0:
        raise DomainError("denominator must be nonzero")
    if p < 1 or q < 1:
        raise DomainError("expected a positive fraction p q")
    g = gcd(p, q)
    return p // g, q // g


def _emit_json(payload) -> None:
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _emit_plain(lines) -> None:
    for line in lines:
        print(line)


def _emit_csv(header, rows) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def cmd_expand(args) -> int:
    p, q = _reduced(args.p, args.q)
    guard = None if args.no_guard else args.digit_guard
    exp = greedy.expand(Fraction(p, q), args.m, digit_guard=guard)
    profile = greedy.upsilon_profile(p, q)
    payload = exp.to_json_dict()
    payload.update({"p": p, "q": q, "ell": profile.ell, "delta": profile.delta})
    if args.format == "plain":
        _emit_plain(
            [
                f"theta = {p}/{q}  (ell = {profile.ell}, delta = {profile.delta})",
                "terms: " + " ".join(str(t) for t in exp.terms),
                f"error = {exp.error}",
                f"recurrence_start = {exp.recurrence_start}",
            ]
        )
    else:
        _emit_json(payload)
    return EXIT_OK


def cmd_best(args) -> int:
    p, q = _reduced(args.p, args.q)
    result = underapprox.best_m_term(Fraction(p, q), args.m, budget=args.budget)
    if args.format == "plain":
        tuples = ", ".join(str(t) for t in result.optimal_tuples)
        _emit_plain(
            [
                f"theta = {p}/{q}, m = {result.m}",
                f"greedy = {tuple(result.greedy_terms)} sum {result.greedy_sum}",
                f"optimal sum {result.optimal_sum}: {tuples}",
                f"greedy_is_best = {result.greedy_is_best}, unique = {result.unique}",
            ]
        )
    else:
        _emit_json(result.to_json_dict())
    return EXIT_OK


def cmd_step(args) -> int:
    p, q = _reduced(args.p, args.q)
    report = greedy.step_report(Fraction(p, q), args.m, args.n)
    if args.format == "plain":
        _emit_plain(
            [
                f"theta = {p}/{q}, m = {report.m}, n = {report.n}",
                f"a_m = {report.a_m}, b_m = {report.b_m}, phi = {report.phi_value}",
                f"conditions hold: {report.holds}",
            ]
        )
    else:
        _emit_json(report.to_json_dict())
    return EXIT_OK


def cmd_upsilon(args) -> int:
    profile = greedy.upsilon_profile(args.p, args.q)
    if args.format == "plain":
        _emit_plain(
            [
                f"p/q = {profile.p}/{profile.q}",
                f"upsilon = {profile.upsilon}, ell = {profile.ell}, "
                f"delta = {profile.delta}, family = {profile.family}",
            ]
        )
    else:
        _emit_json(profile.to_json_dict())
    return EXIT_OK


def cmd_construct(args) -> int:
    ce = counterexamples.construct(args.k)
    if args.format == "plain":
        _emit_plain(
            [
                f"k = {ce.k}: p/q = {ce.p}/{ce.q} (v = {ce.v}, s = {ce.s})",
                f"greedy pair {ce.greedy_pair} beaten by {ce.beating_pair}",
                f"margin = {ce.margin}",
            ]
        )
    else:
        _emit_json(ce.to_json_dict())
    return EXIT_OK


def cmd_phi_samples(args) -> int:
    denom = args.denom
    if denom < 2:
        raise DomainError("--denom must be >= 2")
    lo = args.min_num if args.min_num is not None else (denom + 9) // 10
    lo = max(1, lo)
    rows = []
    for num in range(lo, denom + 1):
        theta = Fraction(num, denom)
        value = greedy.phi(theta)
        rows.append(
            (
                str(theta.numerator),
                str(theta.denominator),
                str(value.numerator),
                str(value.denominator),
            )
        )
    if args.format == "json":
        _emit_json(
            [
                {"theta": {"num": r[0], "den": r[1]}, "phi": {"num": r[2], "den": r[3]}}
                for r in rows
            ]
        )
    else:
        _emit_csv(["theta_num", "theta_den", "phi_num", "phi_den"], rows)
    return EXIT_OK


def _threshold_csv_rows(rows):
    for row in rows:
        yield (
            row["p"],
            row["q"],
            row["upsilon"],
            row["greedy_is_best"],
            row["unique"],
            ";".join(f"{a}:{b}" for a, b in row["ties"]),
            ";".join(f"{a}:{b}" for a, b in row["losses"]),
        )


def cmd_verify(args) -> int:
    suite = args.suite
    reports = []
    if suite == "lp1":
        reports.append(lemmas.verify_lp1(args.q_max, jobs=args.jobs))
    elif suite == "lp11":
        reports.append(lemmas.verify_lp11(args.q_max, jobs=args.jobs))
    elif suite == "lp12":
        reports.append(lemmas.verify_lp12())
    elif suite == "lp50":
        reports.append(lemmas.verify_lp50(args.q_max, jobs=args.jobs))
    elif suite == "threshold":
        rows = underapprox.threshold_sweep(args.q_max, jobs=args.jobs)
        if args.format == "csv":
            _emit_csv(
                ["p", "q", "upsilon", "greedy_is_best", "unique", "ties", "losses"],
                _threshold_csv_rows(rows),
            )
            return EXIT_OK
        report = underapprox.verify_threshold_rows(rows, args.q_max)
        if args.format == "json":
            payload = report.to_json_dict()
            payload["rows"] = [
                {
                    "p": row["p"],
                    "q": row["q"],
                    "upsilon": row["upsilon"],
                    "greedy_is_best": row["greedy_is_best"],
                    "unique": row["unique"],
                    "ties": [list(t) for t in row["ties"]],
                    "losses": [list(t) for t in row["losses"]],
                }
                for row in rows
            ]
            _emit_json(payload)
            return EXIT_OK if report.passed else EXIT_VERIFY_FAILED
        reports.append(report)
    elif suite == "claims":
        for claim in ("cls1", "cls2", "cll5"):
            reports.append(counterexamples.check_fractional_claims(claim, args.j_max))
    elif suite == "roots":
        for case in (1, 2, 3):
            reports.append(counterexamples.check_root_interval(case, args.s_max))
    elif suite == "tables":
        reports.append(counterexamples.verify_tables())
    else:  # argparse choices make this unreachable
        raise DomainError(f"unknown suite {suite!r}")

    all_passed = all(r.passed for r in reports)
    if args.format == "plain":
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            print(
                f"{status} {r.lemma_id}: {r.points_checked} points, "
                f"{len(r.failures)} failure(s), range {r.range_descr}"
            )
            for failure in r.failures:
                print(f"  failure at {failure}")
    elif args.format == "csv":
        raise DomainError(f"csv output is not defined for suite {suite!r}")
    else:
        payload = [r.to_json_dict() for r in reports]
        _emit_json(payload[0] if len(payload) == 1 else payload)
    return EXIT_OK if all_passed else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="egfrac",
        description="Exact greedy Egyptian-fraction expansions, optimal "
        "underapproximation searches, and verification sweeps.",
    )
    parser.add_argument(
        "--format",
        choices=("json", "csv", "plain"),
        default="json",
        help="output format (default json; csv only where documented)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_expand = sub.add_parser("expand", help="greedy expansion of p/q")
    p_expand.add_argument("p", type=int)
    p_expand.add_argument("q", type=int)
    p_expand.add_argument("--m", type=int, required=True, help="number of terms")
    p_expand.add_argument(
        "--digit-guard",
        type=int,
        default=DEFAULT_DIGIT_GUARD,
        help=f"abort when a denominator exceeds this many digits (default {DEFAULT_DIGIT_GUARD})",
    )
    p_expand.add_argument("--no-guard", action="store_true", help="disable the digit guard")
    p_expand.set_defaults(func=cmd_expand)

    p_best = sub.add_parser("best", help="best m-term underapproximation of p/q")
    p_best.add_argument("p", type=int)
    p_best.add_argument("q", type=int)
    p_best.add_argument("--m", type=int, required=True)
    p_best.add_argument("--budget", type=int, default=None, help="search node budget")
    p_best.set_defaults(func=cmd_best)

    p_step = sub.add_parser("step", help="step conditions for numerator n at step m")
    p_step.add_argument("p", type=int)
    p_step.add_argument("q", type=int)
    p_step.add_argument("--m", type=int, required=True)
    p_step.add_argument("--n", type=int, required=True)
    p_step.set_defaults(func=cmd_step)

    p_upsilon = sub.add_parser("upsilon", help="divisibility profile of p/q")
    p_upsilon.add_argument("p", type=int)
    p_upsilon.add_argument("q", type=int)
    p_upsilon.set_defaults(func=cmd_upsilon)

    p_construct = sub.add_parser("construct", help="two-term counterexample for index k")
    p_construct.add_argument("k", type=int)
    p_construct.set_defaults(func=cmd_construct)

    p_verify = sub.add_parser("verify", help="run a verification sweep")
    p_verify.add_argument(
        "suite",
        choices=("lp1", "lp11", "lp12", "lp50", "threshold", "claims", "roots", "tables"),
    )
    p_verify.add_argument("--q-max", type=int, default=500)
    p_verify.add_argument("--j-max", type=int, default=500)
    p_verify.add_argument("--s-max", type=int, default=100)
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.set_defaults(func=cmd_verify)

    p_phi = sub.add_parser("phi-samples", help="exact phi samples on a rational grid")
    p_phi.add_argument("--denom", type=int, required=True, help="common denominator of the grid")
    p_phi.add_argument(
        "--min-num",
        type=int,
        default=None,
        help="first numerator (default: ceil(denom/10), i.e. theta from ~1/10)",
    )
    p_phi.set_defaults(func=cmd_phi_samples)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except DigitGuardExceeded as exc:
        print(f"digit guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except SearchInconclusive as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE


if __name__ == "__main__":
    sys.exit(main())
