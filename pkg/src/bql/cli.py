"""Command line entry point: ``bql <subcommand> ...``.

Exit status is 0 when no check failed.  Inconclusive checks (coset budget
exhausted) do not fail the run but are counted separately.
"""

from __future__ import annotations

import argparse
import time
import json
import sys

from . import cosets, harness
from .fpres import Presentation


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--max-cosets", type=int, default=default,
                        help="live-coset budget (default: $BQL_MAX_COSETS or 2000000)")
    parser.add_argument("--json", action="store_true",
                        default=argparse.SUPPRESS if suppress else False,
                        help="emit a JSON array of check reports")
    parser.add_argument("--seedless", action="store_true",
                        default=argparse.SUPPRESS if suppress else False,
                        help="reserved; every algorithm here is deterministic")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bql", description=__doc__.splitlines()[0])
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help):
        p = sub.add_parser(name, help=help)
        _global_flags(p, suppress=True)
        return p

    p = add("lemma-a", "index of <s1> in B_n modulo a relator (expect 1)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--relator", default="2 -1", help='signed-integer word, e.g. "3 -1"')
    p = add("lemma-2", "index of <s1> in B_n modulo (s2 s1^-1)^2 (expect 1)")
    p.add_argument("--n", type=int, required=True)
    p = add("identities", "braid identity suites via Garside normal form")
    p.add_argument("--n", type=int, required=True)
    p = add("carmichael", "index of <s1> modulo the order-3/order-2 relators (expect n!/2)")
    p.add_argument("--n", type=int, required=True)
    p = add("counts", "3-cycle counts, orbit distinctness and projection onto A_n")
    p.add_argument("--n", type=int, required=True)
    p = add("bound", "orbit-stabilizer bound ledger")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=3)
    p = add("aut", "brute-force automorphism count of A_n")
    p.add_argument("--n", type=int, default=5)
    p = add("pipeline", "run every check for n_min..n_max")
    p.add_argument("--n-min", type=int, default=5)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--jobs", type=int, default=1)
    p = add("enumerate", "coset enumeration on a presentation file")
    p.add_argument("path")
    p.add_argument("--expected", type=int, default=None)
    return parser


def _reports_for(args) -> list[harness.CheckReport]:
    budget = args.max_cosets
    cmd = args.command
    if cmd == "lemma-a":
        return [harness.run_check("lemma_A", {"n": args.n, "relator": args.relator}, budget)]
    if cmd == "lemma-2":
        return [harness.run_check("lemma_2", {"n": args.n}, budget)]
    if cmd == "identities":
        ids = ["lemma_B_identities", "lemma_C_identities"]
        if args.n >= 5:
            ids.append("orbit_conjugators")
        return [harness.run_check(c, {"n": args.n}) for c in ids]
    if cmd == "carmichael":
        return [harness.run_check("carmichael_collapse", {"n": args.n}, budget)]
    if cmd == "counts":
        return [harness.run_check(c, {"n": args.n}) for c in
                ("three_cycle_counts", "lemma_B_distinct", "projection_onto_An")]
    if cmd == "bound":
        return [harness.run_check("orbit_bound", {"n": args.n, "m": args.m})]
    if cmd == "aut":
        return [harness.run_check("aut_footnote", {"n": args.n}, budget)]
    if cmd == "pipeline":
        return harness.pipeline(args.n_min, args.n_max, budget, args.jobs)
    if cmd == "enumerate":
        return [_enumerate_file(args.path, args.expected, budget)]
    raise AssertionError(cmd)


def _enumerate_file(path: str, expected: int | None, budget: int | None) -> harness.CheckReport:
    started = time.perf_counter()
    pres = Presentation.load(path)
    result = cosets.enumerate_cosets(pres, pres.subgroup, max_cosets=budget)
    detail = {k: v for k, v in result.as_dict().items() if k != "elapsed_s"}
    report = harness._report("enumerate", {"path": path}, result.index, expected, started, detail,
                             inconclusive=not result.completed)
    if expected is None and result.completed:
        report.status = "pass"
    return report


def _print_table(reports: list[harness.CheckReport], out) -> None:
    for r in reports:
        params = " ".join(f"{k}={v}" for k, v in r.params.items())
        line = f"{r.status.upper():<13} {r.check_id:<20} {params:<24} observed={r.observed} expected={r.expected}"
        failed = r.detail.get("failed") if isinstance(r.detail, dict) else None
        if failed:
            line += f"  failed={failed}"
        print(line, file=out)
    s = harness.summarize(reports)
    print(f"{s['pass']} passed, {s['fail']} failed, {s['inconclusive']} inconclusive", file=out)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_cosets is not None and args.max_cosets <= 0:
        parser.error("--max-cosets must be positive")
    try:
        reports = _reports_for(args)
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        json.dump([r.as_dict() for r in reports], sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        _print_table(reports, sys.stdout)
    return 1 if any(r.status == "fail" for r in reports) else 0


if __name__ == "__main__":
    sys.exit(main())
