"""identity-forge: exact weighted-sum identities for second-order recurrences.

Evaluate bi-infinite second-order linear recurrence sequences at any integer
index, generate Sury-type weighted-sum identities mechanically, and verify
them exactly over arbitrary ranges — all in arbitrary-precision rational
arithmetic, never floating point.
"""

from .catalog import CatalogEntry, all_entries, catalog_ids, entry
from .engine import (
    DegenerateRatioError,
    GeometricTerm,
    IdentityDescriptor,
    OffsetInvalidError,
    SumSide,
    Summand,
    cassini_general,
    classical_eval,
    descriptor_eval,
    docagne_general,
    rewrite_scale,
    theorem1_descriptor,
    theorem2_descriptor,
)
from .numeric import (
    Mat2,
    companion,
    format_rational,
    mat2_det,
    mat2_inverse,
    mat2_mul,
    mat2_pow,
    parse_rational,
    rat_pow,
)
from .sequences import (
    A015530,
    BRONZE,
    FIBONACCI,
    LUCAS,
    PELL,
    PELL_LUCAS,
    SequenceDef,
    generalized_u,
    generalized_v,
    generalized_v_def,
    named_def,
    subsequence_def,
    term,
)
from .serialize import ParseError, from_json, to_json, to_latex
from .verifier import (
    FuzzConfig,
    VerificationReport,
    fuzz_theorem1,
    fuzz_theorem2,
    verify,
    verify_catalog,
)

__version__ = "0.1.0"

__all__ = [
    "A015530",
    "BRONZE",
    "CatalogEntry",
    "DegenerateRatioError",
    "FIBONACCI",
    "FuzzConfig",
    "GeometricTerm",
    "IdentityDescriptor",
    "LUCAS",
    "Mat2",
    "OffsetInvalidError",
    "PELL",
    "PELL_LUCAS",
    "ParseError",
    "SequenceDef",
    "SumSide",
    "Summand",
    "VerificationReport",
    "all_entries",
    "cassini_general",
    "catalog_ids",
    "classical_eval",
    "companion",
    "descriptor_eval",
    "docagne_general",
    "entry",
    "format_rational",
    "from_json",
    "fuzz_theorem1",
    "fuzz_theorem2",
    "generalized_u",
    "generalized_v",
    "generalized_v_def",
    "mat2_det",
    "mat2_inverse",
    "mat2_mul",
    "mat2_pow",
    "named_def",
    "parse_rational",
    "rat_pow",
    "rewrite_scale",
    "subsequence_def",
    "term",
    "theorem1_descriptor",
    "theorem2_descriptor",
    "to_json",
    "to_latex",
    "verify",
    "verify_catalog",
]
