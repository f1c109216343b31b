"""Learning a hidden strict total order over rules with counted queries."""

from .complexity import (
    ComplexityReport,
    binary_steps,
    binary_steps_approx,
    block_steps_exact,
    block_steps_sum,
    ceil_log2,
    learning_duration,
    log_factorial,
    naive_steps,
    report,
    scientific,
    speedup,
)
from .harness import (
    TableRow,
    TrialResult,
    TrialSummary,
    WorstCaseReport,
    adversarial_ground_truth,
    adversarial_worst_case,
    exhaustive_worst_case,
    random_trials,
    comparison_table,
    run_trial,
)
from .ordering import (
    STRATEGIES,
    STRATEGY_BINARY,
    STRATEGY_BLOCK,
    CostModel,
    CountingOracle,
    DuplicateRuleError,
    EmptyUniverseError,
    GroundTruthOrder,
    InvalidPermutationError,
    InvalidQueryError,
    OrderingError,
    RuleId,
    SizeLimitError,
    binary_insert,
    block_insert,
    learn_order,
)

__version__ = "0.1.0"

__all__ = [
    "ComplexityReport",
    "CostModel",
    "CountingOracle",
    "DuplicateRuleError",
    "EmptyUniverseError",
    "GroundTruthOrder",
    "InvalidPermutationError",
    "InvalidQueryError",
    "OrderingError",
    "RuleId",
    "SizeLimitError",
    "STRATEGIES",
    "STRATEGY_BINARY",
    "STRATEGY_BLOCK",
    "TableRow",
    "TrialResult",
    "TrialSummary",
    "WorstCaseReport",
    "adversarial_ground_truth",
    "adversarial_worst_case",
    "binary_insert",
    "binary_steps",
    "binary_steps_approx",
    "block_insert",
    "block_steps_exact",
    "block_steps_sum",
    "ceil_log2",
    "exhaustive_worst_case",
    "learn_order",
    "learning_duration",
    "log_factorial",
    "naive_steps",
    "random_trials",
    "report",
    "comparison_table",
    "run_trial",
    "scientific",
    "speedup",
]
