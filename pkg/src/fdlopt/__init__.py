"""Optimal fiber-delay-line allocation for optical queues with a bounded
number of recirculations."""

from .construction import (
    Construction,
    build_construction,
    max_representable,
    prefix_B,
    subset_sum_B,
)
from .errors import CapExceededError, DomainError, PatternError
from .euclid import EuclidTrace, euclid_trace
from .optimizer import (
    Classification,
    DesignResult,
    Ordering,
    compare_profiles,
    design,
    lift_sequence,
    predicted_count,
)
from .oracle import (
    DEFAULT_BRUTE_CAP,
    CheckResult,
    OptimalSet,
    RuleCheck,
    StageDiff,
    agrees_with_design,
    brute_force_optimal,
    check_comparison_rule_A,
    check_comparison_rule_B,
    lemma_suites,
    stagewise_diff,
    verify_design,
)
from .profiles import (
    Profile,
    TransformContext,
    compositions,
    design_profile,
    enumerate_profiles,
    left_imbedded,
    left_presequence,
    right_imbedded,
    right_presequence,
)
from .tables import TableRow, table_rows, tables_csv

__version__ = "0.1.0"

__all__ = [
    "CapExceededError",
    "CheckResult",
    "Classification",
    "Construction",
    "DEFAULT_BRUTE_CAP",
    "DesignResult",
    "DomainError",
    "EuclidTrace",
    "OptimalSet",
    "Ordering",
    "PatternError",
    "Profile",
    "RuleCheck",
    "StageDiff",
    "TableRow",
    "TransformContext",
    "agrees_with_design",
    "brute_force_optimal",
    "build_construction",
    "check_comparison_rule_A",
    "check_comparison_rule_B",
    "compare_profiles",
    "compositions",
    "design",
    "design_profile",
    "enumerate_profiles",
    "euclid_trace",
    "left_imbedded",
    "left_presequence",
    "lemma_suites",
    "lift_sequence",
    "max_representable",
    "predicted_count",
    "prefix_B",
    "right_imbedded",
    "right_presequence",
    "stagewise_diff",
    "subset_sum_B",
    "table_rows",
    "tables_csv",
    "verify_design",
    "__version__",
]
