"""Command-line front end: one subcommand per library operation.

Results go to stdout (exact fractions, lowest terms), diagnostics to
stderr.  Exit status 0 on success, 1 on domain errors, 2 on usage errors.
Every subcommand takes --json for machine-readable output carrying the
same values as the text form.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .cycles import (
    SMOOTH_VARIANTS,
    AnticanonicalConfiguration,
    attachment_vector,
    build_configuration,
    fundamental_cycle,
    kodaira_type,
)
from .dynkin import intersection_matrix, parse_dynkin
from .errors import DelPezzoError, InvalidSurfaceError
from .germs import classify_germ
from .lct import lct_config, lct_germ
from .rigidity import FibrationSpec, possible_targets, rigidity_gate
from .surfaces import SurfaceSpec, tlct, validate


def _parse_labels(text: str) -> list[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def _load_fibration(text: str) -> FibrationSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidSurfaceError(f"not valid JSON: {exc}") from exc
    return FibrationSpec.from_dict(data)


def _configuration(args) -> AnticanonicalConfiguration:
    if args.smooth is not None:
        if args.type is not None or args.variant is not None:
            raise InvalidSurfaceError(
                "--smooth excludes a singularity type and --variant"
            )
        return build_configuration(smooth=args.smooth)
    if args.type is None:
        raise InvalidSurfaceError("give a singularity type or --smooth")
    t = parse_dynkin(args.type)
    if args.variant is not None:
        return build_configuration([(t, args.variant)])
    return build_configuration([(t, _default_variant(t))])


def _default_variant(t) -> str:
    return {"A1": "transverse", "A2": "two-points"}.get(t.label, "standard")


def _cmd_matrix(args) -> str:
    m = intersection_matrix(parse_dynkin(args.type))
    if args.json:
        return json.dumps({"type": args.type, "matrix": m.as_lists()})
    return "\n".join(" ".join(str(v) for v in row) for row in m.as_lists())


def _cmd_cycle(args) -> str:
    t = parse_dynkin(args.type)
    if args.attachment:
        d = attachment_vector(t)
        if args.json:
            return json.dumps({"type": t.label, "d": list(d.d)})
        return " ".join(str(v) for v in d.d)
    cycle = fundamental_cycle(t)
    if args.json:
        return json.dumps(cycle.as_dict())
    return " ".join(str(v) for v in cycle.coeffs)


def _cmd_config(args) -> str:
    c = _configuration(args)
    if args.json:
        return json.dumps(c.as_dict())
    lines = [
        f"{comp.id} {comp.multiplicity} {comp.kind}" for comp in c.components
    ]
    for meeting in c.incidence:
        tail = ""
        if meeting.contact != 1:
            tail = f" contact={meeting.contact}"
        if meeting.cuspidal:
            tail = " cuspidal"
        lines.append("meet " + " ".join(meeting.members) + tail)
    return "\n".join(lines)


def _cmd_kodaira(args) -> str:
    label = kodaira_type(_configuration(args))
    if args.json:
        return json.dumps({"kodaira": label.text})
    return label.text


def _cmd_lct_germ(args) -> str:
    value = lct_germ(args.poly)
    if args.json:
        return json.dumps({"lct": str(value)})
    return str(value)


def _cmd_lct_config(args) -> str:
    value = lct_config(_configuration(args))
    if args.json:
        return json.dumps({"lct": str(value)})
    return str(value)


def _cmd_classify(args) -> str:
    kind = classify_germ(args.poly)
    if args.json:
        return json.dumps({"class": kind})
    return kind


def _surface_from_flags(args) -> SurfaceSpec:
    return SurfaceSpec(_parse_labels(args.sings), args.cusp)


def _cmd_tlct(args) -> str:
    result = tlct(_surface_from_flags(args))
    if args.json:
        return json.dumps(result.as_dict())
    return str(result)


def _cmd_validate(args) -> str:
    report = validate(_surface_from_flags(args))
    if args.json:
        return json.dumps(report.as_dict())
    if report.passed:
        return "pass"
    reasons = "; ".join(f"({c}) {reason}" for c, reason in report.violations)
    return f"fail: {reasons}"


def _cmd_rigidity(args) -> str:
    verdict = rigidity_gate(_load_fibration(args.x), _load_fibration(args.y))
    if args.json:
        return json.dumps(verdict.as_dict())
    lines = [f"{verdict.outcome} {verdict.tlct_sum}"]
    if verdict.missing_assumptions:
        lines.append("missing: " + ", ".join(verdict.missing_assumptions))
    lines += [
        f"{cls.tlct_value} {cls.description}" for cls in verdict.detail
    ]
    return "\n".join(lines)


def _cmd_targets(args) -> str:
    classes = possible_targets(_load_fibration(args.x))
    if args.json:
        return json.dumps({"targets": [cls.as_dict() for cls in classes]})
    return "\n".join(f"{cls.tlct_value} {cls.description}" for cls in classes)


def _add_config_flags(sub) -> None:
    sub.add_argument("type", nargs="?", help="Dynkin label, e.g. E8")
    sub.add_argument(
        "--variant",
        choices=["standard", "transverse", "tangential", "two-points", "one-point"],
        help="contact variant at the point (defaults to the generic one)",
    )
    sub.add_argument(
        "--smooth",
        choices=list(SMOOTH_VARIANTS),
        help="member in the smooth locus instead of through a point",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="delpezzo1",
        description="Exact invariants of degree-1 del Pezzo surfaces and fibrations",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    def command(name, handler, help_text):
        sub = subs.add_parser(name, help=help_text)
        sub.set_defaults(handler=handler)
        sub.add_argument("--json", action="store_true", help="JSON output")
        return sub

    sub = command("matrix", _cmd_matrix, "intersection matrix of a Dynkin type")
    sub.add_argument("type", help="Dynkin label, e.g. D5")

    sub = command("cycle", _cmd_cycle, "fundamental cycle coefficients")
    sub.add_argument("type", help="Dynkin label, e.g. E8")
    sub.add_argument(
        "--attachment",
        action="store_true",
        help="print the anticanonical attachment numbers instead",
    )

    sub = command("config", _cmd_config, "anticanonical configuration")
    _add_config_flags(sub)

    sub = command("kodaira", _cmd_kodaira, "Kodaira fiber type of a configuration")
    _add_config_flags(sub)

    sub = command("lct-germ", _cmd_lct_germ, "threshold of a curve germ")
    sub.add_argument("poly", help='germ polynomial, e.g. "y^2 - x^3"')

    sub = command("lct-config", _cmd_lct_config, "threshold of a configuration")
    _add_config_flags(sub)

    sub = command("classify", _cmd_classify, "smooth/node/cusp/other")
    sub.add_argument("poly", help='germ polynomial, e.g. "x*y"')

    for name, handler, help_text in (
        ("tlct", _cmd_tlct, "total threshold of a surface spec"),
        ("validate", _cmd_validate, "check a singularity multiset"),
    ):
        sub = command(name, handler, help_text)
        sub.add_argument("--sings", default="", help="comma list, e.g. E7,A1")
        sub.add_argument(
            "--cusp",
            default="none",
            choices=["none", "smooth", "A1", "A2"],
            help="worst cusp behavior asserted for |-K| members",
        )

    sub = command("rigidity", _cmd_rigidity, "rigidity gate for a fibration pair")
    sub.add_argument("--x", required=True, help="fibration spec JSON")
    sub.add_argument("--y", required=True, help="fibration spec JSON")

    sub = command("targets", _cmd_targets, "admissible partner classes")
    sub.add_argument("--x", required=True, help="fibration spec JSON")

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        output = args.handler(args)
    except DelPezzoError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if output:
        print(output)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
