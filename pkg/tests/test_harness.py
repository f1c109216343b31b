import dataclasses
import itertools
import json

import pytest

from ruleorder import (
    CostModel,
    GroundTruthOrder,
    InvalidPermutationError,
    SizeLimitError,
    adversarial_ground_truth,
    adversarial_worst_case,
    binary_steps,
    block_steps_exact,
    exhaustive_worst_case,
    harness,
    random_trials,
    comparison_table,
    run_trial,
)

PLACEMENT = CostModel.COMPARISONS_PLUS_PLACEMENT


def binary_search_cost(m, target):
    """Simulate the insertion loop for a newcomer landing at ``target``."""
    lo, hi, queries = 0, m, 0
    while lo < hi:
        mid = (lo + hi) // 2
        queries += 1
        if target <= mid:
            hi = mid
        else:
            lo = mid + 1
    assert lo == target
    return queries


class TestRunTrial:
    def test_single_rule(self):
        result = run_trial(1, "block", GroundTruthOrder.identity(1))
        assert (result.queries, result.steps, result.correct) == (0, 0, True)

    def test_block_identity_n3(self):
        result = run_trial(3, "block", GroundTruthOrder.identity(3))
        assert result.queries == 3
        assert result.correct

    def test_binary_identity_n3(self):
        result = run_trial(3, "binary", GroundTruthOrder.identity(3))
        assert result.queries == 2  # 0 + 1 + 1 per insertion
        assert result.correct

    def test_steps_follow_cost_model(self):
        gt = GroundTruthOrder.identity(4)
        plain = run_trial(4, "block", gt)
        placed = run_trial(4, "block", gt, model=PLACEMENT)
        assert placed.steps - plain.steps == 3
        assert placed.queries == plain.queries

    def test_rejects_size_mismatch(self):
        with pytest.raises(InvalidPermutationError):
            run_trial(4, "block", GroundTruthOrder.identity(3))

    def test_rejects_bad_presentation(self):
        with pytest.raises(InvalidPermutationError):
            run_trial(3, "block", GroundTruthOrder.identity(3), [0, 1, 1])

    def test_explicit_presentation_order(self):
        gt = GroundTruthOrder((2, 1, 0))
        result = run_trial(3, "binary", gt, [2, 0, 1])
        assert result.correct


class TestExhaustiveWorstCase:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_block_comparisons_max(self, n):
        report = exhaustive_worst_case(n, "block")
        assert report.max_steps == n * (n - 1) // 2

    @pytest.mark.parametrize("n", range(1, 7))
    def test_block_placement_max_matches_closed_form(self, n):
        report = exhaustive_worst_case(n, "block", PLACEMENT)
        assert report.max_steps == block_steps_exact(n)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_binary_max_matches_summed_formula(self, n):
        report = exhaustive_worst_case(n, "binary")
        assert report.max_steps == binary_steps(n)

    def test_achieving_instance_reproduces_the_maximum(self):
        report = exhaustive_worst_case(5, "binary")
        rerun = run_trial(
            5, "binary", GroundTruthOrder(report.ground_truth_ranks),
            list(report.presentation),
        )
        assert rerun.queries == report.max_steps

    @pytest.mark.parametrize("n", range(1, 6))
    def test_varying_presentation_changes_nothing(self, n):
        fixed = exhaustive_worst_case(n, "binary")
        both = exhaustive_worst_case(n, "binary", vary_presentation=True)
        assert fixed.max_steps == both.max_steps
        fixed_b = exhaustive_worst_case(n, "block")
        both_b = exhaustive_worst_case(n, "block", vary_presentation=True)
        assert fixed_b.max_steps == both_b.max_steps

    def test_caps_enforced(self):
        with pytest.raises(SizeLimitError):
            exhaustive_worst_case(9, "block")
        with pytest.raises(SizeLimitError):
            exhaustive_worst_case(6, "block", vary_presentation=True)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            exhaustive_worst_case(0, "block")

    def test_deterministic_report(self):
        assert exhaustive_worst_case(4, "binary") == exhaustive_worst_case(4, "binary")


class TestAdversarialGroundTruth:
    def test_binary_n2_single_query(self):
        gt, presentation = adversarial_ground_truth(2, "binary")
        assert run_trial(2, "binary", gt, presentation).queries == 1

    @pytest.mark.parametrize("n", [1, 2, 3, 6, 27, 100])
    def test_binary_attains_formula(self, n):
        gt, presentation = adversarial_ground_truth(n, "binary")
        result = run_trial(n, "binary", gt, presentation)
        assert result.correct
        assert result.queries == binary_steps(n)

    @pytest.mark.parametrize("n", [1, 2, 3, 6, 27, 100])
    def test_block_attains_formula_with_placement(self, n):
        gt, presentation = adversarial_ground_truth(n, "block")
        result = run_trial(n, "block", gt, presentation, PLACEMENT)
        assert result.correct
        assert result.steps == block_steps_exact(n)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_matches_exhaustive_maximum_at_small_n(self, n):
        for strategy in ("block", "binary"):
            adversarial = adversarial_worst_case(n, strategy)
            exhaustive = exhaustive_worst_case(n, strategy)
            assert adversarial.max_steps == exhaustive.max_steps

    def test_rejects_unknown_strategy(self):
        with pytest.raises(ValueError):
            adversarial_ground_truth(5, "bogus")

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            adversarial_ground_truth(0, "binary")

    @pytest.mark.parametrize("m", range(0, 200))
    def test_front_position_has_maximal_search_depth(self, m):
        # premise of the construction: the front slot always sits on the
        # deepest branch, so forcing every insertion there is adversarial
        costs = [binary_search_cost(m, p) for p in range(m + 1)]
        assert binary_search_cost(m, 0) == max(costs) == m.bit_length()


class TestRandomTrials:
    def test_summary_is_seed_deterministic(self):
        a = random_trials(30, "binary", 50, seed=123)
        b = random_trials(30, "binary", 50, seed=123)
        assert a == b
        assert json.dumps(dataclasses.asdict(a)) == json.dumps(dataclasses.asdict(b))

    def test_different_seeds_differ(self):
        a = random_trials(30, "binary", 50, seed=1)
        b = random_trials(30, "binary", 50, seed=2)
        assert a != b

    def test_all_correct_and_under_ceiling(self):
        summary = random_trials(50, "binary", 200, seed=9)
        assert summary.all_correct
        assert summary.max_queries <= binary_steps(50) == 237
        block = random_trials(50, "block", 200, seed=9)
        assert block.all_correct
        assert block.max_queries <= 50 * 49 // 2 == 1225

    def test_single_rule_all_zero(self):
        summary = random_trials(1, "block", 10, seed=0)
        assert (summary.min_queries, summary.max_queries, summary.mean_queries) == (0, 0, 0.0)

    def test_shuffled_presentation_still_correct(self):
        summary = random_trials(40, "block", 100, seed=5, shuffle_presentation=True)
        assert summary.all_correct

    def test_large_universe_correct_and_bounded(self):
        binary = random_trials(500, "binary", 500, seed=17)
        assert binary.all_correct
        assert binary.max_queries <= binary_steps(500)
        block = random_trials(500, "block", 100, seed=17)
        assert block.all_correct
        assert block.max_queries <= 500 * 499 // 2

    def test_metadata_recorded(self):
        summary = random_trials(5, "block", 3, seed=11)
        assert summary.rng_algorithm == harness.RNG_ALGORITHM
        assert summary.seed == 11
        assert summary.trials == 3

    def test_rejects_zero_trials(self):
        with pytest.raises(ValueError):
            random_trials(5, "block", 0, seed=1)

    def test_rejects_zero_rules(self):
        with pytest.raises(ValueError):
            random_trials(0, "block", 5, seed=1)


class TestWorstCaseAggregate:
    def test_binary_never_above_block_and_equal_only_at_tiny_n(self):
        # comparing pure comparison counts; they coincide up to n = 3
        for n in range(1, 300):
            block_wc = n * (n - 1) // 2
            binary_wc = binary_steps(n)
            assert binary_wc <= block_wc
            assert (binary_wc == block_wc) == (n <= 3)


class TestComparisonTable:
    def test_row_sizes(self):
        rows = comparison_table()
        assert [row.n for row in rows] == [27, 1000]

    def test_row_27(self):
        row = comparison_table()[0]
        assert (row.s_n, row.b_n) == (377, 104)
        assert row.speedup == pytest.approx(3.625)
        assert row.naive == 10888869450418352160768000000

    def test_row_1000(self):
        row = comparison_table()[1]
        assert (row.s_n, row.b_n) == (500499, 8977)
        assert row.speedup > 55
        assert row.block_years == pytest.approx(685.15, abs=0.01)
        assert row.binary_years == pytest.approx(12.29, abs=0.01)

    def test_exhaustive_cross_check_of_every_instance_n4(self):
        # every permutation, both presentations fixed: measured counts never
        # beat the formulas, and some instance attains each of them
        n = 4
        block_counts, binary_counts = [], []
        for ranks in itertools.permutations(range(n)):
            gt = GroundTruthOrder(ranks)
            block_counts.append(run_trial(n, "block", gt).queries)
            binary_counts.append(run_trial(n, "binary", gt).queries)
        assert max(block_counts) == n * (n - 1) // 2
        assert max(binary_counts) == binary_steps(n)
