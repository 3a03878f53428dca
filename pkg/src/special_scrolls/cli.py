"""Command-line front end: ``special-scrolls {classify,table,project,verify}``.

Exit status is 0 on success, 1 for a domain error (parameters outside the
range a result covers, contradictory incidences, a failing sweep) and 2 for
a usage error (bad arguments, grammar errors, inconsistent parameters).
"""

from __future__ import annotations

import argparse
import inspect
import re
import sys
from typing import Optional, Sequence

from . import classifier, verify
from .curve_divisors import (
    CurveContext,
    DivisorError,
    ScrollNumericsError,
    generic,
    scroll_numerics,
    speciality_degree_bound,
)
from .elem_transform import PointSpec, TransformError, project_scroll
from .report import Report
from .ruled_surface import SurfaceConsistencyError, scroll_R_b

DOMAIN_ERRORS = (classifier.ClassificationError, ScrollNumericsError, DivisorError,
                 TransformError, SurfaceConsistencyError)


class UsageError(Exception):
    pass


def cmd_classify(args) -> Report:
    echo = {"command": "classify", "g": args.g, "N": args.N, "d": args.d, "i": args.i}
    g, N = args.g, args.N
    if args.d is not None or args.i is not None:
        if args.d is None or args.i is None:
            raise UsageError("--d and --i must be given together")
        from_d = scroll_numerics(g, args.d, args.i)
        if N is not None and N != from_d:
            raise UsageError(f"inconsistent parameters: d={args.d}, i={args.i} give N={from_d}, not {N}")
        N = from_d
        if args.d > speciality_degree_bound(g, N):
            raise ScrollNumericsError(
                f"d={args.d} exceeds 2g+N-2 = {speciality_degree_bound(g, N)}: not special")
        if args.i != 1:
            raise classifier.ClassificationError(
                f"the classification covers speciality 1, got i={args.i}")
    if N is None:
        raise UsageError("give --N or both --d and --i")
    report = Report(echo)
    model = classifier.classify_generic(g, N)
    report.add(model, f"generic classification theorem, case {model.case_id}")
    report.warnings.extend(model.notes)
    return report


def cmd_table(args) -> Report:
    echo = {"command": "table", "g": args.g, "hyperelliptic": args.hyperelliptic}
    if args.g == 2:
        if args.hyperelliptic is False:
            raise classifier.ClassificationError("every genus-2 curve is hyperelliptic")
        groups = [(True, classifier.classify_p3(2, True))]
    elif args.g == 3:
        flags = [False, True] if args.hyperelliptic is None else [args.hyperelliptic]
        groups = [(h, classifier.classify_p3(3, h)) for h in flags]
    else:
        raise classifier.ClassificationError(f"tables exist for g = 2 and g = 3 only, got g={args.g}")
    report = Report(echo)
    for hyper, rows in groups:
        source = (f"genus-{args.g} classification table"
                  + (", hyperelliptic" if hyper and args.g == 3 else "")
                  + ("" if hyper or args.g == 2 else ", non-hyperelliptic"))
        for row in rows:
            report.add(row, source)
    return report


_TOKEN = re.compile(r"^(X0|X1|generic|Yc:(\d+)|fiber:(\w+)|singular:X1)$")


def parse_points(text: str) -> list[str]:
    tokens = [t.strip() for t in text.split(",") if t.strip()]
    if not tokens:
        raise UsageError("no projection points given")
    for t in tokens:
        m = _TOKEN.match(t)
        if not m or (m.group(2) is not None and int(m.group(2)) < 1):
            raise UsageError(f"cannot parse point {t!r}; expected X0, X1, generic, Yc:<c>, "
                             "fiber:<label> or singular:X1")
    return tokens


def _point_specs(tokens: Sequence[str]) -> list[PointSpec]:
    specs = []
    for n, t in enumerate(tokens):
        if t == "generic":
            specs.append(PointSpec(f"x{n + 1}"))
        elif t.startswith("fiber:"):
            specs.append(PointSpec(t[6:]))
        elif t.startswith("Yc:"):
            specs.append(PointSpec(f"x{n + 1}", frozenset({f"Y{t[3:]}"})))
        elif t == "singular:X1":
            raise UsageError("singular:X1 only applies to the genus-2 scroll with deg b = 4")
        else:
            specs.append(PointSpec(f"x{n + 1}", frozenset({t})))
    return specs


def cmd_project(args) -> Report:
    tokens = parse_points(args.points)
    echo = {"command": "project", "g": args.g, "deg_b": args.deg_b, "points": tokens,
            "hyperelliptic": args.hyperelliptic, "b_canonical": args.b_canonical,
            "span": args.span}
    report = Report(echo)
    if args.g == 2 and args.deg_b == 4 and len(tokens) == 1 and tokens[0] in classifier.GENUS2_POINTS:
        out = classifier.genus2_projection(tokens[0], b_canonical=args.b_canonical)
        report.add(out, "genus-2 projection analysis")
        return report
    if args.b_canonical:
        raise UsageError("--b-canonical only applies to the genus-2 scroll with deg b = 4")
    if (args.g == 3 and args.deg_b == 6 and len(tokens) == 3 and args.span in (None, 2)
            and set(tokens) <= {"X0", "X1", "generic"}):
        out = classifier.genus3_d7_projection(tokens, hyperelliptic=args.hyperelliptic)
        report.add(out, "genus-3 degree-7 projection analysis")
        return report
    curve = CurveContext(args.g, args.hyperelliptic)
    R = scroll_R_b(curve, generic(args.deg_b, label="b", base_point_free=True))
    out = project_scroll(R, _point_specs(tokens), span_dim=args.span)
    report.add(out, "elementary transformation of S_b")
    return report


def cmd_verify(args) -> Report:
    suite = verify.SUITES[args.suite]
    params = inspect.signature(suite).parameters
    kwargs = {k: v for k, v in (("g_max", args.g_max), ("k_max", args.k_max),
                                ("n_max", args.n_max), ("d_max", args.d_max))
              if v is not None and k in params}
    report = Report({"command": "verify", "suite": args.suite, **kwargs})
    for check in suite(**kwargs):
        report.add({"kind": "check", "name": check.name, "passed": check.passed,
                    "cases": check.cases, "counterexample": check.counterexample,
                    "rr_check": "n/a"}, f"suite {args.suite}")
    return report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="special-scrolls",
                                     description="Classify and simulate special scrolls.")
    parser.add_argument("--format", choices=("text", "structured"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="model of a special scroll of speciality one")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--N", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--i", type=int)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("table", help="linearly normal special scrolls in P^3")
    p.add_argument("--g", type=int, required=True)
    hyp = p.add_mutually_exclusive_group()
    hyp.add_argument("--hyperelliptic", dest="hyperelliptic", action="store_true", default=None)
    hyp.add_argument("--non-hyperelliptic", dest="hyperelliptic", action="store_false")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("project", help="project R_b from points")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--deg-b", type=int, required=True)
    p.add_argument("--points", required=True,
                   help="comma-separated: X0, X1, generic, Yc:<c>, fiber:<label>, singular:X1")
    p.add_argument("--span", type=int, help="dimension of the span of the points (default k-1)")
    p.add_argument("--hyperelliptic", action="store_true")
    p.add_argument("--b-canonical", action="store_true", help="genus 2: take b ~ K")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("verify", help="run an invariant sweep")
    p.add_argument("--suite", required=True, choices=sorted(verify.SUITES))
    p.add_argument("--g-max", type=int)
    p.add_argument("--k-max", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--d-max", type=int)
    p.set_defaults(func=cmd_verify)
    return parser


def _emit(report: Report, fmt: str) -> None:
    if fmt == "structured":
        sys.stdout.write(report.to_json())
    else:
        print(report.to_text())


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report = args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(report, args.format)
    if any(r.get("kind") == "check" and not r["passed"] for r in report.results):
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
