"""Gorenstein del Pezzo surfaces of degree 1 with Du Val singularities.

A surface is described combinatorially: the multiset of its singularity
types together with an assertion about the worst cuspidal behavior found
among anticanonical members (cusp data is an input, not computed — whether
a cuspidal member exists depends on moduli this description does not see).
validate() checks the necessary constraints on which multisets can occur,
and tlct() evaluates the total log canonical threshold

    tlct(S) = inf { lct(S, D) : D in |-K_S| }

by the priority table over singularity types, reporting the Kodaira fiber
type of a minimizing member.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .cycles import (
    CUSPIDAL,
    ELLIPTIC,
    NODAL,
    ONE_POINT,
    STANDARD,
    TANGENTIAL,
    TRANSVERSE,
    TWO_POINTS,
    AnticanonicalConfiguration,
    KodairaLabel,
    build_configuration,
)
from .dynkin import ALL_TYPES, DynkinType, parse_dynkin
from .errors import InvalidSurfaceError

# worst cuspidal behavior over the members of |-K_S|
NO_CUSPIDAL_MEMBER = "none"
CUSP_AT_SMOOTH_POINT = "smooth"
CUSP_AT_A1 = "A1"
CUSP_AT_A2 = "A2"
CUSP_DATA = (NO_CUSPIDAL_MEMBER, CUSP_AT_SMOOTH_POINT, CUSP_AT_A1, CUSP_AT_A2)

MAX_RANK_SUM = 8  # the minimal resolution has Picard rank 9


def _as_type(t: DynkinType | str) -> DynkinType:
    return t if isinstance(t, DynkinType) else parse_dynkin(t)


@dataclass(frozen=True)
class SurfaceSpec:
    """Multiset of Du Val singularities plus the asserted cusp behavior."""

    singularities: tuple[DynkinType, ...] = ()
    cusp_data: str = NO_CUSPIDAL_MEMBER

    def __init__(
        self,
        singularities: Iterable[DynkinType | str] = (),
        cusp_data: str = NO_CUSPIDAL_MEMBER,
    ):
        types = tuple(sorted(_as_type(t) for t in singularities))
        object.__setattr__(self, "singularities", types)
        object.__setattr__(self, "cusp_data", cusp_data)
        if cusp_data not in CUSP_DATA:
            raise InvalidSurfaceError(
                f"unknown cusp data {cusp_data!r}; choose from {CUSP_DATA}"
            )
        for needed in ("A1", "A2"):
            if cusp_data == needed and parse_dynkin(needed) not in types:
                raise InvalidSurfaceError(
                    f"cusp data {cusp_data!r} needs an {needed} singularity"
                )

    @property
    def rank_sum(self) -> int:
        return sum(t.rank for t in self.singularities)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(t.label for t in self.singularities)

    def ranks_of(self, kind: str) -> tuple[int, ...]:
        return tuple(t.rank for t in self.singularities if t.kind == kind)

    def as_dict(self) -> dict:
        return {"singularities": list(self.labels), "cusp": self.cusp_data}

    @classmethod
    def from_dict(cls, data: dict) -> "SurfaceSpec":
        if not isinstance(data, dict):
            raise InvalidSurfaceError("surface spec must be a JSON object")
        extra = set(data) - {"singularities", "cusp"}
        if extra:
            raise InvalidSurfaceError(f"unknown spec keys {sorted(extra)}")
        return cls(
            data.get("singularities", ()),
            data.get("cusp", NO_CUSPIDAL_MEMBER),
        )

    def __str__(self) -> str:
        inside = ", ".join(self.labels) if self.labels else "smooth"
        return f"{{{inside}}}/{self.cusp_data}"


@dataclass(frozen=True)
class ValidationReport:
    """Violated necessary conditions; empty means not excluded."""

    violations: tuple[tuple[str, str], ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def clauses(self) -> tuple[str, ...]:
        return tuple(c for c, _ in self.violations)

    def __bool__(self) -> bool:
        return self.passed

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "violations": [
                {"clause": c, "reason": reason} for c, reason in self.violations
            ],
        }


def validate(s: SurfaceSpec) -> ValidationReport:
    """Check the necessary conditions on the singularity multiset.

    (a) rank sum at most 8; (b) a rank-8 point is the unique singularity;
    (c) an A7/D7/E7 point allows at most one extra singularity, of type A1;
    (d) an E6 point allows at most one extra, of type A1 or A2.  Passing
    means "not excluded", not a guarantee that the surface exists.
    """
    found: list[tuple[str, str]] = []
    if s.rank_sum > MAX_RANK_SUM:
        found.append(
            ("a", f"rank sum {s.rank_sum} exceeds {MAX_RANK_SUM}")
        )
    counts: dict[str, int] = {}
    for t in s.singularities:
        counts[t.label] = counts.get(t.label, 0) + 1
    total = len(s.singularities)
    for label in ("A8", "D8", "E8"):
        if counts.get(label) and total > 1:
            found.append(("b", f"{label} must be the unique singularity"))
    for label in ("A7", "D7", "E7"):
        if counts.get(label):
            extras = total - 1
            extra_a1 = counts.get("A1", 0)
            if extras > 1 or extras != extra_a1:
                found.append(
                    ("c", f"{label} allows at most one extra singularity, of type A1")
                )
    if counts.get("E6"):
        extras = total - 1
        allowed = counts.get("A1", 0) + counts.get("A2", 0)
        if extras > 1 or extras != allowed:
            found.append(
                ("d", "E6 allows at most one extra singularity, of type A1 or A2")
            )
    return ValidationReport(tuple(found))


@dataclass(frozen=True)
class TlctResult:
    """Total threshold with the Kodaira type of a minimizing member."""

    value: Fraction
    kodaira: KodairaLabel

    def as_dict(self) -> dict:
        return {"value": str(self.value), "kodaira": self.kodaira.text}

    def __str__(self) -> str:
        return f"{self.value} ({self.kodaira})"


def tlct(s: SurfaceSpec) -> TlctResult:
    """Total log canonical threshold by the singularity priority table.

    Exceptional and D types force the threshold regardless of cusp data
    (members through them always cusp there); with only A types the cusp
    assertion decides among 2/3, 3/4, 5/6 and 1.
    """
    report = validate(s)
    if not report:
        raise InvalidSurfaceError(
            "; ".join(reason for _, reason in report.violations)
        )
    for rank, value, label in (
        (8, Fraction(1, 6), "II*"),
        (7, Fraction(1, 4), "III*"),
        (6, Fraction(1, 3), "IV*"),
    ):
        if rank in s.ranks_of("E"):
            return TlctResult(value, KodairaLabel(label))
    d_ranks = s.ranks_of("D")
    if d_ranks:
        return TlctResult(Fraction(1, 2), KodairaLabel("I*", max(d_ranks) - 4))
    if s.cusp_data == CUSP_AT_A2:
        return TlctResult(Fraction(2, 3), KodairaLabel("IV"))
    if s.cusp_data == CUSP_AT_A1:
        return TlctResult(Fraction(3, 4), KodairaLabel("III"))
    if s.cusp_data == CUSP_AT_SMOOTH_POINT:
        return TlctResult(Fraction(5, 6), KodairaLabel("II"))
    a_ranks = s.ranks_of("A")
    if a_ranks:
        return TlctResult(Fraction(1), KodairaLabel("I", max(a_ranks) + 1))
    return TlctResult(Fraction(1), KodairaLabel("I", 0))


def realizable_configurations(s: SurfaceSpec) -> Iterator[AnticanonicalConfiguration]:
    """Anticanonical-member configurations the spec admits.

    One configuration per singular point (with the degenerate A1/A2
    variants only when the cusp assertion licenses them) plus the
    smooth-locus members.  tlct(s) is the minimum of lct_config over these.
    """
    yield build_configuration(smooth=ELLIPTIC)
    yield build_configuration(smooth=NODAL)
    if s.cusp_data != NO_CUSPIDAL_MEMBER:
        yield build_configuration(smooth=CUSPIDAL)
    for t in sorted(set(s.singularities)):
        if t.label == "A1":
            yield build_configuration([(t, TRANSVERSE)])
            if s.cusp_data == CUSP_AT_A1:
                yield build_configuration([(t, TANGENTIAL)])
        elif t.label == "A2":
            yield build_configuration([(t, TWO_POINTS)])
            if s.cusp_data == CUSP_AT_A2:
                yield build_configuration([(t, ONE_POINT)])
        else:
            yield build_configuration([(t, STANDARD)])


def _multisets(budget: int, pool: tuple[DynkinType, ...]) -> Iterator[tuple]:
    if not pool:
        yield ()
        return
    head, rest = pool[0], pool[1:]
    for count in range(budget // head.rank + 1):
        for tail in _multisets(budget - count * head.rank, rest):
            yield (head,) * count + tail


def iter_valid_specs() -> Iterator[SurfaceSpec]:
    """Every SurfaceSpec passing validate, with every compatible cusp assertion."""
    for types in _multisets(MAX_RANK_SUM, tuple(ALL_TYPES)):
        labels = {t.label for t in types}
        cusps = [NO_CUSPIDAL_MEMBER, CUSP_AT_SMOOTH_POINT]
        cusps += [c for c in (CUSP_AT_A1, CUSP_AT_A2) if c in labels]
        for cusp in cusps:
            s = SurfaceSpec(types, cusp)
            if validate(s):
                yield s
