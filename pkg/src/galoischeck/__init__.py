"""Exhaustive verification of easy/hard split specifications and
adjoint-pair laws for sequence combinators over small finite universes."""

from .combinators import (
    SEPARATOR,
    drop_while,
    filter_p,
    head_fails,
    lines_split,
    take_n,
    take_while,
    unlines_join,
    unwords_join,
    unzip_pair,
    words_split,
    zip_pair,
)
from .connections import (
    GC_TARGETS,
    LAW_NAMES,
    PAIR_NAMES,
    SPEC_NAMES,
    CanonicalGC,
    WitnessNotFoundError,
    build_gcs,
    check_canonical_gc,
    check_cancellation,
    check_easy_hard,
    check_fusion,
    check_gc_instance,
    check_idempotent,
    check_indirect_equality,
    check_injective_adjoint,
    check_law,
    check_semi_inverse,
    check_split_append,
    find_non_gc_counterexample,
    merge_reports,
    order_laws_report,
    run_check,
)
from .core import (
    DEFAULT_BUDGET,
    Carrier,
    CarrierKind,
    CheckReport,
    Pred,
    Universe,
    UniverseTooLargeError,
    all_satisfy,
    count_pair_seqs,
    count_seq_lists,
    count_seqs,
    enum_pair_seqs,
    enum_preds,
    enum_seq_lists,
    enum_seqs,
    enumerate_carrier,
    materialize_carrier,
    nat_bound,
    pred_and,
)
from .oracle import (
    EasyCondition,
    EmptyCandidatesError,
    NoGreatestError,
    OracleError,
    best_under,
    candidates_below,
    oracle_spec,
)
from .orders import (
    ORDERS,
    OrderDef,
    OrderLawReport,
    check_order_laws,
    is_prefix,
    is_sublist,
    is_suffix,
    pair_prefix,
    product_order,
    seq_list_prefix,
    seq_pair_prefix,
)

__version__ = "0.1.0"

__all__ = [
    "SEPARATOR", "drop_while", "filter_p", "head_fails", "lines_split",
    "take_n", "take_while", "unlines_join", "unwords_join", "unzip_pair",
    "words_split", "zip_pair",
    "GC_TARGETS", "LAW_NAMES", "PAIR_NAMES", "SPEC_NAMES", "CanonicalGC",
    "WitnessNotFoundError", "build_gcs", "check_canonical_gc",
    "check_cancellation", "check_easy_hard", "check_fusion",
    "check_gc_instance", "check_idempotent", "check_indirect_equality",
    "check_injective_adjoint",
    "check_law", "check_semi_inverse", "check_split_append",
    "find_non_gc_counterexample", "merge_reports", "order_laws_report",
    "run_check",
    "DEFAULT_BUDGET", "Carrier", "CarrierKind", "CheckReport", "Pred",
    "Universe", "UniverseTooLargeError", "all_satisfy", "count_pair_seqs",
    "count_seq_lists", "count_seqs", "enum_pair_seqs", "enum_preds",
    "enum_seq_lists", "enum_seqs", "enumerate_carrier",
    "materialize_carrier", "nat_bound", "pred_and",
    "EasyCondition", "EmptyCandidatesError", "NoGreatestError",
    "OracleError", "best_under", "candidates_below", "oracle_spec",
    "ORDERS", "OrderDef", "OrderLawReport", "check_order_laws", "is_prefix",
    "is_sublist", "is_suffix", "pair_prefix", "product_order",
    "seq_list_prefix", "seq_pair_prefix",
    "__version__",
]
