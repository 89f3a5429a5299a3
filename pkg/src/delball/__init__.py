"""Deletion-ball sizes of q-ary words: exact computation and sharp bounds."""

from .balanced import (
    BalancedBallCalculator,
    StepProfile,
    ball_closed,
    ball_recursive,
    composition_count,
    enumerate_step_profiles,
    restricted_sequence_count,
    sequence_count,
    step_alphabet,
    tail_ball_closed,
    tail_ball_recursive,
)
from .binomials import binomial
from .bounds import (
    BoundReport,
    balanced_upper_bound,
    calabi_hartnett_max,
    hirschberg_regnier_bounds,
    levenshtein_bounds,
    report_for_params,
    report_for_word,
    sweep_reports,
    unbalanced_lower_bound,
)
from .exact import (
    EnumerationBudgetError,
    ball_size,
    ball_size_all,
    canonical_ball_size,
    enumerate_ball,
)
from .ops import (
    ChainStep,
    apply_permutation,
    balance_step,
    balancing_chain,
    cyclicize,
    insert_symbol,
    reduce_to_binary,
)
from .words import (
    RunProfile,
    Word,
    balanced_tail_word,
    balanced_word,
    canonical_profile,
    canonical_word,
    cyclic_word,
    encode_runs,
    parse_run_profile,
    parse_word,
    unbalanced_binary_word,
)

__all__ = [
    "BalancedBallCalculator",
    "BoundReport",
    "ChainStep",
    "EnumerationBudgetError",
    "RunProfile",
    "StepProfile",
    "Word",
    "apply_permutation",
    "balance_step",
    "balanced_tail_word",
    "balanced_upper_bound",
    "balanced_word",
    "balancing_chain",
    "ball_closed",
    "ball_recursive",
    "ball_size",
    "ball_size_all",
    "binomial",
    "calabi_hartnett_max",
    "canonical_ball_size",
    "canonical_profile",
    "canonical_word",
    "composition_count",
    "cyclic_word",
    "cyclicize",
    "encode_runs",
    "enumerate_ball",
    "enumerate_step_profiles",
    "hirschberg_regnier_bounds",
    "insert_symbol",
    "levenshtein_bounds",
    "parse_run_profile",
    "parse_word",
    "reduce_to_binary",
    "report_for_params",
    "report_for_word",
    "restricted_sequence_count",
    "sequence_count",
    "step_alphabet",
    "sweep_reports",
    "tail_ball_closed",
    "tail_ball_recursive",
    "unbalanced_binary_word",
    "unbalanced_lower_bound",
]
