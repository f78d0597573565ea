"""Exclusion sieve for integral modular fusion-category types.

Decides whether a candidate type (a multiset of integer dimensions) is
ruled out by a necessary arithmetic criterion: some grading partition of
the type must have a neutral block in which every (dimension, prime) pair
finds a partner dimension y with p not dividing y and
lcm(x, y)**2 + x*x*pt <= d.
"""

from .arith import gcd, lcm, prime_factors
from .batch import (
    BatchRecord,
    emit_report,
    parse_input_line,
    record_to_json,
    run_batch,
    type_from_json,
)
from .criterion import (
    CriterionVerdict,
    ExclusionWitness,
    Mode,
    check_type,
    neutral_failure,
)
from .fusion import (
    CompactType,
    FusionType,
    compact_type,
    expand_compact,
    make_type,
)
from .golden import GoldenDataset, load_golden_datasets, run_golden
from .partitions import (
    Part,
    Partition,
    modular_partitions,
    submultisets_with_sum,
    vector_partitions,
)

__version__ = "0.1.0"

__all__ = [
    "BatchRecord",
    "CompactType",
    "CriterionVerdict",
    "ExclusionWitness",
    "FusionType",
    "GoldenDataset",
    "Mode",
    "Part",
    "Partition",
    "check_type",
    "compact_type",
    "emit_report",
    "expand_compact",
    "gcd",
    "lcm",
    "load_golden_datasets",
    "make_type",
    "modular_partitions",
    "neutral_failure",
    "parse_input_line",
    "prime_factors",
    "record_to_json",
    "run_batch",
    "run_golden",
    "submultisets_with_sum",
    "type_from_json",
    "vector_partitions",
    "__version__",
]
