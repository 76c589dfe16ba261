"""Command-line front end.

Exit status: 0 verified, 1 not verified or inconclusive, 2 usage or internal error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import certificate as cert
from .bar import BarChain, alpha_cycle, beta_cycle, ez
from .planner import CellComplexDescription, DescriptionError, projective_sum_preset, synthesize, tc_bracket

log = logging.getLogger("tccert")

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_ERROR = 2


class UsageError(Exception):
    pass


def _emit(args, command: str, reports: list, extra: dict | None = None) -> int:
    verdict = cert.VERIFIED
    for r in reports:
        if r.verdict == cert.INCONCLUSIVE and verdict == cert.VERIFIED:
            verdict = cert.INCONCLUSIVE
        elif r.verdict == cert.NOT_VERIFIED:
            verdict = cert.NOT_VERIFIED
    if extra and "verdict" in extra:
        verdict = extra.pop("verdict")
    if args.format == "json":
        payload = {"command": command, "verdict": verdict, "reports": [r.to_dict() for r in reports]}
        payload.update(extra or {})
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for r in reports:
            print(r.to_text())
        if extra and "text" in extra:
            print(extra["text"])
        print(f"verdict: {verdict}")
    return EXIT_OK if verdict == cert.VERIFIED else EXIT_FAIL


def corrupted_example_chain() -> BarChain:
    """Shuffle product with one term replaced by a non-shuffle."""
    chain = ez(alpha_cycle(2), beta_cycle(2))
    victim = cert.expected_ez_terms()[1]
    a, b = cert.x1(), cert.yx2()
    return BarChain(4, (chain.terms - {victim}) | {(a, b, b, b)})


def cmd_example3(args) -> int:
    chain = corrupted_example_chain() if args.corrupt else None
    report = cert.reproduce_example3(chain)
    for stage in report.stages:
        if not stage.passed:
            log.warning("stage %s mismatch: %s", stage.name, stage.detail)
    return _emit(args, "example3", [report])


def _check_certify_args(n: int, g: int, m_max: int) -> None:
    if n == 2:
        raise UsageError(
            "n = 2 is the nonorientable surface case, where TC = 4 is already known for g >= 2; "
            "this tool certifies n >= 3"
        )
    if n < 3:
        raise UsageError("n must be >= 3")
    if g < 2:
        raise UsageError("g must be >= 2")
    if m_max < 1:
        raise UsageError("--mmax must be >= 1")


def cmd_certify(args) -> int:
    _check_certify_args(args.n, args.g, args.mmax)
    reports = []
    for h in range(args.g, 2, -1):
        log.info("genus reduction %d -> %d", h, h - 1)
        reports.append(cert.genus_reduction_check(args.n, h))
    log.info("two-factor certificate, n=%d", args.n)
    reports.append(cert.certify_g2(args.n, args.mmax, workers=args.workers))
    return _emit(args, "certify", reports)


def cmd_scan(args) -> int:
    if args.n < 3:
        raise UsageError("n must be >= 3")
    return _emit(args, "scan", [cert.scan_report(args.n, workers=args.workers)])


def cmd_planner(args) -> int:
    if args.input:
        if args.bracket:
            raise UsageError("--bracket needs --preset; the lower bound is only certified for that family")
        try:
            cx = CellComplexDescription.load(args.input)
        except (OSError, DescriptionError) as exc:
            raise UsageError(str(exc)) from None
        n = g = None
    else:
        n, g = args.preset
        try:
            cx = projective_sum_preset(n, g)
        except DescriptionError as exc:
            raise UsageError(str(exc)) from None
    table = synthesize(cx)
    extra: dict = {"planner": table.to_dict(), "text": table.to_text()}
    verdict = cert.VERIFIED
    if n is not None and args.bracket:
        bracket = tc_bracket(n, g, lambda n, g: cert.lower_bound_verified(n, g, args.mmax))
        extra["bracket"] = bracket.to_dict()
        extra["text"] += (
            f"\nTC bracket: lower={bracket.lower} upper={bracket.upper} optimal={bracket.optimal}"
            if bracket.supported
            else f"\nTC bracket unsupported: {bracket.reason}"
        )
        if not bracket.optimal:
            verdict = cert.NOT_VERIFIED
    extra["verdict"] = verdict
    if args.format == "json":
        extra.pop("text")
    return _emit(args, "planner", [], extra)


def selftest_reports() -> list[tuple[str, bool]]:
    """Clean runs must verify and both negative controls must be caught."""
    clean = cert.reproduce_example3()
    corrupted = cert.reproduce_example3(corrupted_example_chain())
    wedge = cert.wedge_reduction()
    unprojected = cert.wedge_reduction(project_first=False)
    return [
        ("example3 clean run verifies", clean.ok),
        (
            "corrupted shuffle term breaks stage (ii)",
            not corrupted.stage("(ii) fourth power matches displayed expression").passed,
        ),
        ("wedge reduction verifies", wedge.ok),
        (
            "skipping x -> 1 breaks uniqueness",
            not unprojected.stage("sum equals (y-1) (x) s").passed,
        ),
    ]


def cmd_selftest(args) -> int:
    results = selftest_reports()
    ok = all(passed for _, passed in results)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "command": "selftest",
                    "verdict": cert.VERIFIED if ok else cert.NOT_VERIFIED,
                    "reports": [],
                    "checks": {name: passed for name, passed in results},
                },
                indent=2,
                sort_keys=True,
            )
        )
    else:
        for name, passed in results:
            print(f"[{'PASS' if passed else 'FAIL'}] {name}")
    return EXIT_OK if ok else EXIT_FAIL


def _preset(text: str) -> tuple[int, int]:
    try:
        n, g = (int(s) for s in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("preset must look like N,G") from None
    return n, g


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tccert",
        description="Certificates for the topological complexity of connected sums of real projective spaces.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("-v", "--verbose", action="count", default=0)
    common.add_argument("--workers", type=int, default=1, help="maximum worker processes")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("example3", parents=[common], help="reproduce the degree-4 worked example")
    p.add_argument("--corrupt", action="store_true", help="negative control: corrupt one shuffle term")
    p.set_defaults(func=cmd_example3)

    p = sub.add_parser("certify", parents=[common], help="genus reduction then the two-factor certificate")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--mmax", type=int, default=cert.DEFAULT_M_MAX)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("scan", parents=[common], help="Kunneth scan of the back block")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("planner", parents=[common], help="synthesize the cell-complex motion planner")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", help="JSON cell-complex description")
    source.add_argument("--preset", type=_preset, help="connected-sum preset N,G")
    p.add_argument("--bracket", action="store_true", help="also certify the lower bound (preset only)")
    p.add_argument("--mmax", type=int, default=cert.DEFAULT_M_MAX)
    p.set_defaults(func=cmd_planner)

    p = sub.add_parser("selftest", parents=[common], help="clean runs and negative controls")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.WARNING - 10 * min(args.verbose, 2)
    logging.basicConfig(level=level, format="%(levelname)s %(message)s", stream=sys.stderr)
    if args.workers < 1:
        print("tccert: --workers must be >= 1", file=sys.stderr)
        return EXIT_ERROR
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"tccert: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except Exception:
        log.exception("internal error")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
