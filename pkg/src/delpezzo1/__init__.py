"""Exact invariants of degree-1 del Pezzo surfaces and their fibrations.

Fundamental cycles of Du Val singularities, log canonical thresholds of
curve germs and anticanonical configurations, total thresholds of surface
specs with Kodaira fiber types, and the birational-rigidity gate for
fibration pairs.  All arithmetic is exact (integers, fractions, algebraic
numbers); nothing here floats.
"""

from .cycles import (
    AnticanonicalConfiguration,
    AttachmentVector,
    Component,
    FundamentalCycle,
    KodairaLabel,
    Meeting,
    allowed_variants,
    attachment_vector,
    build_configuration,
    fundamental_cycle,
    kodaira_type,
)
from .dynkin import (
    ALL_TYPES,
    DynkinType,
    IntersectionMatrix,
    intersection_matrix,
    is_negative_definite,
    parse_dynkin,
)
from .errors import (
    AssumptionNotAssertedError,
    DelPezzoError,
    DepthExceededError,
    InvalidConfigurationError,
    InvalidGermError,
    InvalidSurfaceError,
    MalformedLabelError,
    NonSquarefreeError,
    NonTerminationError,
    NotAtOriginError,
    NotQuasihomogeneousError,
    NotSymmetricError,
    OutOfRangeError,
    UnrecognizedConfigurationError,
    UnsupportedClassError,
    VariantMismatchError,
)
from .germs import CurveGerm, classify_germ, lct_quasihomogeneous
from .lct import (
    germ_blowup_tree,
    lct_config,
    lct_germ,
    lct_weighted_germs,
)
from .rigidity import (
    TARGET_CLASSES,
    FibrationSpec,
    RigidityVerdict,
    TargetClass,
    possible_targets,
    rigidity_gate,
    source_constraints,
    target_class_for,
)
from .surfaces import (
    SurfaceSpec,
    TlctResult,
    ValidationReport,
    iter_valid_specs,
    realizable_configurations,
    tlct,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_TYPES",
    "AnticanonicalConfiguration",
    "AssumptionNotAssertedError",
    "AttachmentVector",
    "Component",
    "CurveGerm",
    "DelPezzoError",
    "DepthExceededError",
    "DynkinType",
    "FibrationSpec",
    "FundamentalCycle",
    "IntersectionMatrix",
    "InvalidConfigurationError",
    "InvalidGermError",
    "InvalidSurfaceError",
    "KodairaLabel",
    "MalformedLabelError",
    "Meeting",
    "NonSquarefreeError",
    "NonTerminationError",
    "NotAtOriginError",
    "NotQuasihomogeneousError",
    "NotSymmetricError",
    "OutOfRangeError",
    "RigidityVerdict",
    "SurfaceSpec",
    "TARGET_CLASSES",
    "TargetClass",
    "TlctResult",
    "UnrecognizedConfigurationError",
    "UnsupportedClassError",
    "ValidationReport",
    "VariantMismatchError",
    "allowed_variants",
    "attachment_vector",
    "build_configuration",
    "classify_germ",
    "fundamental_cycle",
    "germ_blowup_tree",
    "intersection_matrix",
    "is_negative_definite",
    "iter_valid_specs",
    "kodaira_type",
    "lct_config",
    "lct_germ",
    "lct_quasihomogeneous",
    "lct_weighted_germs",
    "parse_dynkin",
    "possible_targets",
    "realizable_configurations",
    "rigidity_gate",
    "source_constraints",
    "target_class_for",
    "tlct",
    "validate",
]
