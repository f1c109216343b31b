"""Experiment harness: generate instances, run learners, check counts.

Instances come in three flavours: exhaustive (every permutation, small n),
adversarial (constructions that attain the worst-case formulas), and random
(seeded unbiased shuffles).  Every run uses a fresh counting oracle, so
trials share nothing and can be executed in any order.
"""

from __future__ import annotations

import itertools
import random
import statistics
from dataclasses import dataclass

from . import complexity
from .ordering import (
    STRATEGIES,
    CostModel,
    CountingOracle,
    GroundTruthOrder,
    InvalidPermutationError,
    RuleId,
    SizeLimitError,
    learn_order,
)

# Full enumeration costs n! runs with a fixed presentation order and n!^2
# when presentation orders vary; these caps keep either mode desk-scale.
EXHAUSTIVE_CAP_FIXED = 8
EXHAUSTIVE_CAP_VARY = 5

# Generator recorded in summaries so identical seeds are comparable across
# runs: Mersenne Twister driving a Fisher-Yates shuffle (random.shuffle).
RNG_ALGORITHM = "mt19937-fisher-yates"

TABLE_STEPS_PER_DAY = 2.0
TABLE_SIZES = (27, 1000)

MODE_EXHAUSTIVE = "exhaustive"
MODE_ADVERSARIAL = "adversarial"


@dataclass(frozen=True)
class TrialResult:
    """One learning run: counts, correctness, and instance provenance."""

    strategy: str
    n: int
    queries: int
    steps: int
    correct: bool
    cost_model: str
    source: str


@dataclass(frozen=True)
class WorstCaseReport:
    """Maximum step count found for one size, with an achieving instance."""

    strategy: str
    n: int
    mode: str
    vary_presentation: bool
    cost_model: str
    max_steps: int
    ground_truth_ranks: tuple[int, ...]
    presentation: tuple[int, ...]


@dataclass(frozen=True)
class TrialSummary:
    """Aggregate of a seeded batch of random trials."""

    strategy: str
    n: int
    trials: int
    seed: int
    cost_model: str
    shuffle_presentation: bool
    rng_algorithm: str
    min_queries: int
    max_queries: int
    mean_queries: float
    all_correct: bool


@dataclass(frozen=True)
class TableRow:
    """Predictor comparison for one universe size at two steps per day."""

    n: int
    naive: int
    s_n: int
    b_n: int
    speedup: float
    block_years: float
    binary_years: float


def _validate_permutation(values, n: int, what: str) -> tuple[int, ...]:
    out = tuple(values)
    if sorted(out) != list(range(n)):
        raise InvalidPermutationError(
            f"{what} must be a permutation of 0..{n - 1}: {out!r}"
        )
    return out


def run_trial(
    n: int,
    strategy: str,
    ground_truth: GroundTruthOrder,
    presentation_order: list[RuleId] | None = None,
    model: CostModel = CostModel.COMPARISONS_ONLY,
    source: str = "explicit",
) -> TrialResult:
    """Run one learner against a fresh oracle and report its counts."""
    if ground_truth.n != n:
        raise InvalidPermutationError(
            f"ground truth has {ground_truth.n} rules, expected {n}"
        )
    if presentation_order is None:
        presentation = tuple(range(n))
    else:
        presentation = _validate_permutation(presentation_order, n, "presentation order")

    oracle = CountingOracle(ground_truth)
    learned, steps = learn_order(presentation, oracle, strategy, model)
    return TrialResult(
        strategy=strategy,
        n=n,
        queries=oracle.query_count,
        steps=steps,
        correct=learned == ground_truth.true_sequence(),
        cost_model=model.value,
        source=source,
    )


def exhaustive_worst_case(
    n: int,
    strategy: str,
    model: CostModel = CostModel.COMPARISONS_ONLY,
    vary_presentation: bool = False,
) -> WorstCaseReport:
    """Enumerate every ground truth (and optionally every presentation order)
    and return the maximum step count with the first instance attaining it.
    """
    cap = EXHAUSTIVE_CAP_VARY if vary_presentation else EXHAUSTIVE_CAP_FIXED
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if n > cap:
        raise SizeLimitError(
            f"exhaustive search with vary_presentation={vary_presentation} "
            f"is capped at n = {cap}, got n = {n}"
        )

    presentations = (
        itertools.permutations(range(n)) if vary_presentation else [tuple(range(n))]
    )
    best = -1
    best_ranks: tuple[int, ...] = ()
    best_presentation: tuple[int, ...] = ()
    for presentation in presentations:
        for ranks in itertools.permutations(range(n)):
            oracle = CountingOracle(GroundTruthOrder(ranks))
            _, steps = learn_order(presentation, oracle, strategy, model)
            if steps > best:
                best = steps
                best_ranks = ranks
                best_presentation = presentation
    return WorstCaseReport(
        strategy=strategy,
        n=n,
        mode=MODE_EXHAUSTIVE,
        vary_presentation=vary_presentation,
        cost_model=model.value,
        max_steps=best,
        ground_truth_ranks=best_ranks,
        presentation=best_presentation,
    )


def adversarial_ground_truth(
    n: int, strategy: str
) -> tuple[GroundTruthOrder, list[RuleId]]:
    """Instance on which the strategy spends its worst-case step count.

    block: ground truth equal to the presentation order, so every insertion
    scans the whole learned sequence and appends.

    binary: ground truth reversed against the presentation order, so every
    insertion lands at the front.  The front position sits at maximal depth
    of the search tree for every window size (each halving keeps the larger,
    left half), so each insertion into m rules costs ceil(log2(m + 1)).
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if strategy not in STRATEGIES:
        raise ValueError(
            f"unknown strategy {strategy!r} (choose from: {', '.join(STRATEGIES)})"
        )
    presentation = list(range(n))
    if strategy == "block":
        return GroundTruthOrder.identity(n), presentation
    return GroundTruthOrder.reversed_identity(n), presentation


def adversarial_worst_case(
    n: int, strategy: str, model: CostModel = CostModel.COMPARISONS_ONLY
) -> WorstCaseReport:
    """Measure the adversarial instance instead of enumerating."""
    ground_truth, presentation = adversarial_ground_truth(n, strategy)
    result = run_trial(n, strategy, ground_truth, presentation, model, source=MODE_ADVERSARIAL)
    assert result.correct
    return WorstCaseReport(
        strategy=strategy,
        n=n,
        mode=MODE_ADVERSARIAL,
        vary_presentation=False,
        cost_model=model.value,
        max_steps=result.steps,
        ground_truth_ranks=ground_truth.ranks,
        presentation=tuple(presentation),
    )


def random_trials(
    n: int,
    strategy: str,
    trials: int,
    seed: int,
    model: CostModel = CostModel.COMPARISONS_ONLY,
    shuffle_presentation: bool = False,
) -> TrialSummary:
    """Run seeded random instances and summarise their query counts.

    The same seed always yields the same summary; ground truths (and, when
    requested, presentation orders) are drawn from one deterministic stream.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if trials < 1:
        raise ValueError(f"trials must be a positive integer, got {trials}")

    rng = random.Random(seed)
    counts: list[int] = []
    all_correct = True
    for index in range(trials):
        ground_truth = GroundTruthOrder.shuffled(n, rng)
        presentation = list(range(n))
        if shuffle_presentation:
            rng.shuffle(presentation)
        result = run_trial(
            n, strategy, ground_truth, presentation, model,
            source=f"seed={seed}/trial={index}",
        )
        counts.append(result.queries)
        all_correct = all_correct and result.correct
    return TrialSummary(
        strategy=strategy,
        n=n,
        trials=trials,
        seed=seed,
        cost_model=model.value,
        shuffle_presentation=shuffle_presentation,
        rng_algorithm=RNG_ALGORITHM,
        min_queries=min(counts),
        max_queries=max(counts),
        mean_queries=statistics.fmean(counts),
        all_correct=all_correct,
    )


def comparison_table(sizes: tuple[int, ...] = TABLE_SIZES) -> list[TableRow]:
    """Predictor comparison rows for the standard showcase sizes."""
    rows = []
    for n in sizes:
        s_n = complexity.block_steps_exact(n)
        b_n = complexity.binary_steps(n)
        rows.append(
            TableRow(
                n=n,
                naive=complexity.naive_steps(n),
                s_n=s_n,
                b_n=b_n,
                speedup=s_n / b_n,
                block_years=complexity.learning_duration(s_n, TABLE_STEPS_PER_DAY),
                binary_years=complexity.learning_duration(b_n, TABLE_STEPS_PER_DAY),
            )
        )
    return rows
