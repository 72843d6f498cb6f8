"""Baseline similarity metrics and the pairwise-average reduction.

Brute-force oracles: set arithmetic for the mask metrics (enumerated
exhaustively at small t) and a literal term-by-term sum for Spearman.
"""

import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stabrank import (
    FullRanking,
    MetricMismatchError,
    RunSet,
    TopKMask,
    jaccard,
    kuncheva,
    pairwise_stability,
    spearman,
)
from conftest import EXAMPLE_MASKS


def oracle_spearman(a, b):
    t = len(a)
    return 1 - 6 * sum((x - y) ** 2 for x, y in zip(a, b)) / (t * (t**2 - 1))


def mask_to_set(mask):
    return {i for i, v in enumerate(mask) if v == 1}


class TestSpearman:
    def test_identical_is_one(self):
        assert spearman((1, 3, 2), (1, 3, 2)) == 1.0

    def test_reversal_reaches_minus_one(self):
        # the coefficient is computed as defined, without clamping to [0, 1]
        assert spearman((1, 2, 3), (3, 2, 1)) == pytest.approx(-1.0, abs=1e-15)
        assert spearman((1, 2), (2, 1)) == pytest.approx(-1.0, abs=1e-15)

    def test_requires_two_features(self):
        with pytest.raises(ValueError):
            spearman((1,), (1,))

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            spearman((1, 2), (1, 2, 3))

    @given(st.permutations(list(range(1, 8))), st.permutations(list(range(1, 8))))
    @settings(max_examples=60, deadline=None)
    def test_symmetry_and_oracle(self, a, b):
        value = spearman(a, b)
        assert value == spearman(b, a)
        assert value == pytest.approx(oracle_spearman(a, b), abs=1e-12)

    def test_accepts_typed_rankings(self):
        assert spearman(FullRanking((2, 1, 3)), FullRanking((2, 1, 3))) == 1.0


class TestKuncheva:
    def test_identical_masks_score_exactly_one(self):
        mask = (1, 0, 1, 1, 0, 0)
        assert kuncheva(mask, mask) == 1.0

    def test_chance_level_overlap_scores_zero(self):
        # t=8, k=4: chance overlap k^2/t = 2 features
        a = (1, 1, 1, 1, 0, 0, 0, 0)
        b = (0, 0, 1, 1, 1, 1, 0, 0)
        assert kuncheva(a, b) == 0.0

    def test_example_runs_1_and_2(self):
        assert kuncheva(EXAMPLE_MASKS[0], EXAMPLE_MASKS[1]) == pytest.approx(
            1 / 6, abs=1e-15
        )

    def test_negative_below_chance(self):
        a = (1, 1, 0, 0)
        b = (0, 0, 1, 1)
        assert kuncheva(a, b) < 0

    def test_degenerate_k(self):
        with pytest.raises(ValueError):
            kuncheva((0, 0, 0), (0, 0, 0))
        with pytest.raises(ValueError):
            kuncheva((1, 1, 1), (1, 1, 1))

    def test_mismatched_counts(self):
        with pytest.raises(ValueError):
            kuncheva((1, 1, 0, 0), (1, 0, 0, 0))

    def test_exhaustive_set_arithmetic_oracle(self):
        t = 6
        for k in (1, 2, 3, 5):
            for sa in itertools.combinations(range(t), k):
                for sb in itertools.combinations(range(t), k):
                    a = tuple(1 if i in sa else 0 for i in range(t))
                    b = tuple(1 if i in sb else 0 for i in range(t))
                    o = len(set(sa) & set(sb))
                    expected = (o * t - k * k) / (k * (t - k))
                    assert kuncheva(a, b) == pytest.approx(expected, abs=1e-14)


class TestJaccard:
    def test_identical_is_one(self):
        assert jaccard((1, 0, 1), (1, 0, 1)) == 1.0

    def test_disjoint_is_zero(self):
        assert jaccard((1, 1, 0, 0), (0, 0, 1, 1)) == 0.0

    def test_example_runs_1_and_2(self):
        assert jaccard(EXAMPLE_MASKS[0], EXAMPLE_MASKS[1]) == pytest.approx(
            1 / 3, abs=1e-15
        )

    def test_both_empty_rejected(self):
        with pytest.raises(ValueError):
            jaccard((0, 0), (0, 0))

    def test_exhaustive_set_arithmetic_oracle(self):
        t = 5
        for k in (1, 2, 4):
            for sa in itertools.combinations(range(t), k):
                for sb in itertools.combinations(range(t), k):
                    a = tuple(1 if i in sa else 0 for i in range(t))
                    b = tuple(1 if i in sb else 0 for i in range(t))
                    o = len(set(sa) & set(sb))
                    union = len(set(sa) | set(sb))
                    assert jaccard(a, b) == pytest.approx(o / union, abs=1e-14)
                    assert 0.0 <= jaccard(a, b) <= 1.0

    def test_accepts_typed_masks(self):
        assert jaccard(TopKMask((1, 0, 1), 2), TopKMask((1, 0, 1), 2)) == 1.0


class TestPairwiseStability:
    def test_identical_lists_give_phi_one(self):
        rows = np.tile([2, 1, 4, 3, 5], (6, 1))
        rs = RunSet("full", rows)
        assert pairwise_stability(rs, "spearman").phi == 1.0

    def test_two_runs_equal_single_pair(self, mask_run_set):
        rs = RunSet("topk", mask_run_set.matrix[:2], mask_run_set.k)
        result = pairwise_stability(rs, "kuncheva")
        assert result.phi == pytest.approx(1 / 6, abs=1e-15)

    def test_pair_values_mean_matches_phi(self, mask_run_set):
        result = pairwise_stability(mask_run_set, "kuncheva", include_pairs=True)
        assert len(result.pair_values) == 10
        assert result.phi == pytest.approx(
            math.fsum(result.pair_values) / 10, abs=1e-12
        )
        assert result.pair_values[0] == pytest.approx(1 / 6, abs=1e-15)

    def test_vectorised_matches_scalar_loop(self):
        rng = np.random.default_rng(12)
        rows = np.array([rng.permutation(9) + 1 for _ in range(6)])
        full = RunSet("full", rows)
        result = pairwise_stability(full, "spearman", include_pairs=True)
        direct = [
            spearman(rows[i], rows[j])
            for i in range(6)
            for j in range(i + 1, 6)
        ]
        assert list(result.pair_values) == pytest.approx(direct, abs=0)

        masks = full.to_topk(3)
        for metric, func in (("kuncheva", kuncheva), ("jaccard", jaccard)):
            got = pairwise_stability(masks, metric, include_pairs=True).pair_values
            want = [
                func(masks.matrix[i], masks.matrix[j])
                for i in range(6)
                for j in range(i + 1, 6)
            ]
            assert list(got) == pytest.approx(want, abs=0)

    def test_list_order_invariance(self, mask_run_set):
        reference = pairwise_stability(mask_run_set, "jaccard").phi
        shuffled = RunSet("topk", mask_run_set.matrix[::-1], mask_run_set.k)
        assert pairwise_stability(shuffled, "jaccard").phi == pytest.approx(
            reference, abs=1e-13
        )

    def test_kind_mismatch_raises(self, full_run_set, mask_run_set):
        with pytest.raises(MetricMismatchError):
            pairwise_stability(full_run_set, "kuncheva")
        with pytest.raises(MetricMismatchError):
            pairwise_stability(mask_run_set, "spearman")

    def test_unknown_metric(self, full_run_set):
        with pytest.raises(ValueError, match="unknown metric"):
            pairwise_stability(full_run_set, "kendall")

    def test_pairs_omitted_by_default(self, mask_run_set):
        assert pairwise_stability(mask_run_set, "kuncheva").pair_values is None

    def test_random_rankings_average_near_zero(self):
        rng = np.random.default_rng(77)
        rows = np.array([rng.permutation(2000) + 1 for _ in range(100)])
        phi = pairwise_stability(RunSet("full", rows), "spearman").phi
        assert abs(phi) <= 0.05
