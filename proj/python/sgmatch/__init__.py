"""Matching strings against walks in vertex-labeled graphs.

Thin wrapper over the C++ core: exact and minimum-substitution matching,
the color-coding compatibility decider, exhaustive oracles, and the
hardness reductions with their witness extractors.
"""

from ._core import (
    BudgetError,
    CompatResult,
    Error,
    Graph,
    ParseError,
    Query,
    Reduction,
    ValidationError,
    Witness,
    WitnessError,
    compat,
    exact_match,
    gen_instance,
    is_dag,
    materialize_restricted_witness,
    min_edits_dag,
    min_edits_query_only,
    oracle_compatible,
    oracle_hpath,
    oracle_min_edits,
    oracle_set_cover,
    reduce_hpath_binary,
    reduce_hpath_unit,
    reduce_setcover,
    restrict_alphabet,
)

__all__ = [
    "BudgetError",
    "CompatResult",
    "Error",
    "Graph",
    "ParseError",
    "Query",
    "Reduction",
    "ValidationError",
    "Witness",
    "WitnessError",
    "compat",
    "exact_match",
    "gen_instance",
    "is_dag",
    "materialize_restricted_witness",
    "min_edits_dag",
    "min_edits_query_only",
    "oracle_compatible",
    "oracle_hpath",
    "oracle_min_edits",
    "oracle_set_cover",
    "reduce_hpath_binary",
    "reduce_hpath_unit",
    "reduce_setcover",
    "restrict_alphabet",
]

__version__ = "1.0.0"
