"""Exact local analysis of ordinary double points of plane curves.

Branch parametrisations by Weierstrass preparation and completing the square,
branched intersection multiplicities, and the two-point behaviour of a node
under small translations, all as identities of truncated power series.
"""
from .errors import (
    ConsistencyError,
    FieldError,
    InsufficientPrecision,
    NeedsExtension,
    NodalisError,
    NotSquareError,
    OracleError,
    ParseError,
    PreconditionError,
)
from .field import QQ, FieldDescriptor, FieldElement, adjoin_sqrt, is_square, parse_field, prime_field, rationals, sqrt
from .intersect import (
    Contact,
    IntersectionReport,
    branch_multiplicity,
    classify_smooth_contact,
    intersect_at_node,
    oracle_total_multiplicity,
)
from .kernels import BACKEND
from .node import Classification, NodeReport, classify_point, line_multiplicity, verify_odp_by_lines
from .parsing import parse_polynomial
from .poly import (
    AffinePoint,
    BivariatePoly,
    LinearForm,
    homogeneous_part,
    restrict_to_line,
    resultant_y,
    split_binary_quadratic,
    translate_to_origin,
)
from .prep import (
    BranchPair,
    Verdict,
    analyze_discriminant,
    factor_node_branches,
    hensel_branch_oracle,
    node_branches,
    weierstrass_prepare,
)
from .series import AtLeast, TruncatedSeries, revert_unit_times_x
from .translate import TranslationReport, branch_gap_unit, check_direction, translation_intersections, transversality

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "FieldError",
    "InsufficientPrecision",
    "NeedsExtension",
    "NodalisError",
    "NotSquareError",
    "OracleError",
    "ParseError",
    "PreconditionError",
    "QQ",
    "FieldDescriptor",
    "FieldElement",
    "adjoin_sqrt",
    "is_square",
    "parse_field",
    "prime_field",
    "rationals",
    "sqrt",
    "Contact",
    "IntersectionReport",
    "branch_multiplicity",
    "classify_smooth_contact",
    "intersect_at_node",
    "oracle_total_multiplicity",
    "BACKEND",
    "Classification",
    "NodeReport",
    "classify_point",
    "line_multiplicity",
    "verify_odp_by_lines",
    "parse_polynomial",
    "AffinePoint",
    "BivariatePoly",
    "LinearForm",
    "homogeneous_part",
    "restrict_to_line",
    "resultant_y",
    "split_binary_quadratic",
    "translate_to_origin",
    "BranchPair",
    "Verdict",
    "analyze_discriminant",
    "factor_node_branches",
    "hensel_branch_oracle",
    "node_branches",
    "weierstrass_prepare",
    "AtLeast",
    "TruncatedSeries",
    "revert_unit_times_x",
    "TranslationReport",
    "branch_gap_unit",
    "check_direction",
    "translation_intersections",
    "transversality",
    "__version__",
]

