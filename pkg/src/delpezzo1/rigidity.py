"""Birational rigidity of degree-1 del Pezzo fibrations over a curve germ.

The criterion: a birational map between two such fibrations X/T and Y/T is
biregular provided the special fibers are reduced and irreducible with plt
pairs (X, S_X), (Y, S_Y), anticanonical 1-complements extend, restriction
maps surject, and

    tlct(S_X) + tlct(S_Y) > 1.

The three structural conditions are assertions supplied by the caller
(they are not computable from a singularity multiset); the threshold
inequality is exact arithmetic.  When the gate fails, the contrapositive
bounds the partner fiber: tlct(S_Y) <= 1 - tlct(S_X), which cuts the
eight threshold classes down to the admissible targets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    AssumptionNotAssertedError,
    InvalidSurfaceError,
    UnsupportedClassError,
)
from .surfaces import (
    CUSP_AT_A1,
    CUSP_AT_A2,
    CUSP_AT_SMOOTH_POINT,
    NO_CUSPIDAL_MEMBER,
    SurfaceSpec,
    tlct,
    validate,
)

RIGID = "rigid"
INCONCLUSIVE = "inconclusive"

ASSUMPTIONS = ("special_fiber_plt", "one_complement", "surjectivity")


@dataclass(frozen=True)
class FibrationSpec:
    """A fibration side: its special fiber plus the structural assertions."""

    fiber: SurfaceSpec
    special_fiber_plt: bool = True
    one_complement: bool = True
    surjectivity: bool = True

    @property
    def missing_assumptions(self) -> tuple[str, ...]:
        return tuple(name for name in ASSUMPTIONS if not getattr(self, name))

    def as_dict(self) -> dict:
        out = {"fiber": self.fiber.as_dict()}
        if self.missing_assumptions:
            out["assumptions"] = {
                name: getattr(self, name) for name in ASSUMPTIONS
            }
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "FibrationSpec":
        if isinstance(data, dict) and "fiber" in data:
            flags = data.get("assumptions", {})
            extra = set(flags) - set(ASSUMPTIONS)
            if extra:
                raise InvalidSurfaceError(f"unknown assumption flags {sorted(extra)}")
            return cls(
                SurfaceSpec.from_dict(data["fiber"]),
                **{name: bool(flags.get(name, True)) for name in ASSUMPTIONS},
            )
        return cls(SurfaceSpec.from_dict(data))


@dataclass(frozen=True)
class TargetClass:
    """One threshold class of special fibers, with a validated witness."""

    tlct_value: Fraction
    description: str
    witness: SurfaceSpec

    def as_dict(self) -> dict:
        return {"tlct": str(self.tlct_value), "description": self.description}


TARGET_CLASSES = (
    TargetClass(
        Fraction(1, 6),
        "unique singular point, of type E8",
        SurfaceSpec(["E8"]),
    ),
    TargetClass(
        Fraction(1, 4),
        "E7 present, no E8; at most one extra singularity, of type A1",
        SurfaceSpec(["E7"]),
    ),
    TargetClass(
        Fraction(1, 3),
        "E6 present, no E7 or E8; at most one extra singularity, of type A1 or A2",
        SurfaceSpec(["E6"]),
    ),
    TargetClass(
        Fraction(1, 2),
        "some Dn present, no exceptional type",
        SurfaceSpec(["D4"]),
    ),
    TargetClass(
        Fraction(2, 3),
        "only An singularities; a member cusps at an A2 point",
        SurfaceSpec(["A2"], CUSP_AT_A2),
    ),
    TargetClass(
        Fraction(3, 4),
        "only An singularities; a member cusps at an A1 point, none at an A2",
        SurfaceSpec(["A1"], CUSP_AT_A1),
    ),
    TargetClass(
        Fraction(5, 6),
        "only An singularities; a cuspidal member, none cusping at a singular point",
        SurfaceSpec([], CUSP_AT_SMOOTH_POINT),
    ),
    TargetClass(
        Fraction(1),
        "only An singularities; no cuspidal member",
        SurfaceSpec([], NO_CUSPIDAL_MEMBER),
    ),
)


def target_class_for(value: Fraction) -> TargetClass:
    for cls in TARGET_CLASSES:
        if cls.tlct_value == value:
            return cls
    raise UnsupportedClassError(f"no threshold class takes the value {value}")


@dataclass(frozen=True)
class RigidityVerdict:
    """Gate outcome with the exact threshold sum and admissible targets."""

    outcome: str
    tlct_sum: Fraction
    detail: tuple[TargetClass, ...] = ()
    missing_assumptions: tuple[str, ...] = ()

    @property
    def deficit(self) -> Fraction:
        return Fraction(1) - self.tlct_sum

    def as_dict(self) -> dict:
        out = {
            "outcome": self.outcome,
            "tlct_sum": str(self.tlct_sum),
            "targets": [cls.as_dict() for cls in self.detail],
        }
        if self.missing_assumptions:
            out["missing_assumptions"] = list(self.missing_assumptions)
        return out


def _checked_fiber(side: FibrationSpec | SurfaceSpec, name: str) -> FibrationSpec:
    fib = side if isinstance(side, FibrationSpec) else FibrationSpec(side)
    report = validate(fib.fiber)
    if not report:
        reasons = "; ".join(reason for _, reason in report.violations)
        raise InvalidSurfaceError(f"{name} fiber fails validation: {reasons}")
    return fib


def _admissible(threshold: Fraction) -> tuple[TargetClass, ...]:
    return tuple(c for c in TARGET_CLASSES if c.tlct_value <= 1 - threshold)


def rigidity_gate(
    x: FibrationSpec | SurfaceSpec, y: FibrationSpec | SurfaceSpec
) -> RigidityVerdict:
    """Decide the rigidity gate for a pair of fibrations.

    Rigid iff all six assumption flags hold and the threshold sum exceeds 1;
    otherwise Inconclusive (the criterion does not apply — no birational
    map is asserted to exist).  On an inconclusive verdict, detail lists the
    threshold classes an alternative model of x could inhabit: those cut
    out by the sum condition when the flags hold, or every class when an
    assumption is missing.
    """
    fx, fy = _checked_fiber(x, "x"), _checked_fiber(y, "y")
    total = tlct(fx.fiber).value + tlct(fy.fiber).value
    missing = tuple(f"x:{n}" for n in fx.missing_assumptions)
    missing += tuple(f"y:{n}" for n in fy.missing_assumptions)
    if total > 1 and not missing:
        return RigidityVerdict(RIGID, total)
    if missing:
        detail = TARGET_CLASSES
    else:
        detail = _admissible(tlct(fx.fiber).value)
    return RigidityVerdict(INCONCLUSIVE, total, detail, missing)


def possible_targets(x: FibrationSpec | SurfaceSpec) -> list[TargetClass]:
    """Threshold classes a non-biregular partner of x could have.

    With all assumptions asserted, a partner fiber must satisfy
    tlct <= 1 - tlct(S_X); the list is ascending and empty exactly when
    tlct(S_X) = 1 (every birational map is then biregular).
    """
    fib = _checked_fiber(x, "x")
    if fib.missing_assumptions:
        raise AssumptionNotAssertedError(
            "possible_targets needs every assumption asserted; missing: "
            + ", ".join(fib.missing_assumptions)
        )
    return list(_admissible(tlct(fib.fiber).value))


def source_constraints(y_class: TargetClass) -> tuple[str, ...]:
    """Cusp assertions forced on an all-An source by a given target class.

    A target in the E6 class needs the source threshold at most 2/3, which
    for An-only fibers means a member cusping at an A2 point; the E7 class
    allows 3/4 as well, so a cusp at an A1 or an A2 point.
    """
    if y_class.tlct_value == Fraction(1, 3):
        return (CUSP_AT_A2,)
    if y_class.tlct_value == Fraction(1, 4):
        return (CUSP_AT_A1, CUSP_AT_A2)
    raise UnsupportedClassError(
        f"source constraints are defined for the E6 and E7 classes only, "
        f"not {y_class.description!r}"
    )
