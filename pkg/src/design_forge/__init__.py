"""design-forge: mixed Steiner systems and group divisible designs.

A mixed Steiner system MS(t, k, Q) over a product alphabet
Q = Z_{q_1} x ... x Z_{q_n} is a set of weight-k words such that every
weight-t word is covered by exactly one of them and any two of them are at
Hamming distance >= 2(k - t) + 1.  Dropping the distance requirement gives
the covering law of a group divisible design whose groups are the nonzero
symbols of each coordinate.  This package constructs such objects from
finite fields, orthogonal arrays, and resolvable designs, and verifies
every claimed property exhaustively.
"""

from __future__ import annotations

from .constructions import (
    CatalogRecord,
    Ms1Feasibility,
    PartitionedCover,
    ReplacePlan,
    base_system,
    combine_partition,
    construct_from_oa,
    construct_hybrid_ms,
    expand_design,
    gdd_catalog,
    gdd_to_largeset,
    largeset_to_gdd,
    ms1_construct,
    ms1_feasible,
    resolvable_affine,
    validate_cover,
)
from .core import (
    Codeword,
    DistanceResult,
    GddType,
    LargeSet,
    MixedAlphabet,
    MixedDesign,
    Resolution,
    covers,
    enumerate_t_words,
    gdd_type_of,
    hamming_distance,
    min_distance,
    word_count,
)
from .errors import (
    AlphabetMismatch,
    ConstructionFailed,
    CopyCountMismatch,
    CoverInvariantViolated,
    DesignForgeError,
    FormatError,
    Infeasible,
    LargeSetInvalid,
    NonBinaryAlphabet,
    NotAPartition,
    NotPrimePower,
    NotResolvable,
    ROutOfRange,
    StrengthExceedsColumns,
    TypeMismatch,
    VerificationLimitExceeded,
)
from .fields import FiniteField, field_create, prime_power
from .formats import (
    cover_from_json,
    cover_to_json,
    design_from_json,
    design_to_json,
    largeset_from_json,
    largeset_to_json,
    oa_from_text,
    oa_to_text,
    report_to_json,
)
from .oa import (
    LatinSquare,
    OaReport,
    OrthogonalArray,
    mols_complete,
    oa_extended,
    oa_square,
    oa_sum,
    verify_oa,
)
from .verify import (
    BoundCheck,
    Counterexample,
    VerificationReport,
    ms_bound_check,
    verify_gdd,
    verify_large_set,
    verify_mixed_steiner,
    verify_resolution,
    verify_steiner,
)

__version__ = "0.1.0"

__all__ = [
    "AlphabetMismatch",
    "BoundCheck",
    "CatalogRecord",
    "Codeword",
    "ConstructionFailed",
    "CopyCountMismatch",
    "Counterexample",
    "CoverInvariantViolated",
    "DesignForgeError",
    "DistanceResult",
    "FiniteField",
    "FormatError",
    "GddType",
    "Infeasible",
    "LargeSet",
    "LargeSetInvalid",
    "LatinSquare",
    "MixedAlphabet",
    "MixedDesign",
    "Ms1Feasibility",
    "NonBinaryAlphabet",
    "NotAPartition",
    "NotPrimePower",
    "NotResolvable",
    "OaReport",
    "OrthogonalArray",
    "PartitionedCover",
    "ReplacePlan",
    "Resolution",
    "ROutOfRange",
    "StrengthExceedsColumns",
    "TypeMismatch",
    "VerificationLimitExceeded",
    "VerificationReport",
    "base_system",
    "combine_partition",
    "construct_from_oa",
    "construct_hybrid_ms",
    "cover_from_json",
    "cover_to_json",
    "covers",
    "design_from_json",
    "design_to_json",
    "enumerate_t_words",
    "expand_design",
    "field_create",
    "gdd_catalog",
    "gdd_to_largeset",
    "gdd_type_of",
    "hamming_distance",
    "largeset_from_json",
    "largeset_to_gdd",
    "largeset_to_json",
    "min_distance",
    "mols_complete",
    "ms1_construct",
    "ms1_feasible",
    "ms_bound_check",
    "oa_extended",
    "oa_from_text",
    "oa_square",
    "oa_sum",
    "oa_to_text",
    "prime_power",
    "report_to_json",
    "resolvable_affine",
    "validate_cover",
    "verify_gdd",
    "verify_large_set",
    "verify_mixed_steiner",
    "verify_oa",
    "verify_resolution",
    "verify_steiner",
    "word_count",
    "__version__",
]
