import logging
from unittest import TestCase

import numpy as np
import pytest

from azwordvec.lib.balance import class_targets, same_class_neighbors, seed_quotas, smote
from azwordvec.lib.exceptions import InsufficientClassMembersError
from azwordvec.lib.sentvec import FeatureMatrix
from azwordvec.models.enums.category import CATEGORY_ORDER, Category
from azwordvec.models.enums.evaluation import TargetPolicy
from azwordvec.view_models.smote_config import SmoteConfig

from tests.helpers.constants import AZ_BALANCED_TOTAL, AZ_CLASS_COUNTS, AZ_MAJORITY_COUNT


def random_features(counts: dict[Category, int], dim: int, seed: int) -> FeatureMatrix:
    rng = np.random.default_rng(seed)
    labels = [category for category, count in counts.items() for _ in range(count)]
    order = rng.permutation(len(labels))
    return FeatureMatrix(rng.normal(size=(len(labels), dim)), [labels[i] for i in order])


def brute_force_neighbors(rows: np.ndarray, i: int, k: int) -> np.ndarray:
    distances = np.linalg.norm(rows - rows[i], axis=1)
    distances[i] = np.inf
    return np.argsort(distances)[:k]


def segment_residual(point: np.ndarray, start: np.ndarray, end: np.ndarray) -> float:
    """Distance from `point` to the segment between `start` and `end`."""
    direction = end - start
    lam = np.clip((point - start) @ direction / (direction @ direction), 0.0, 1.0)
    return float(np.linalg.norm(start + lam * direction - point))


@pytest.mark.parametrize("seed", range(8))
def test_synthetic_rows_lie_between_a_seed_and_one_of_its_neighbors(seed):
    rng = np.random.default_rng(100 + seed)
    counts = {Category.OWN: 120, Category.AIM: int(rng.integers(5, 20)), Category.TXT: int(rng.integers(8, 40))}
    features = random_features(counts, dim=int(rng.integers(2, 6)), seed=seed)
    k = 3
    balanced = smote(features, SmoteConfig(k_neighbors=k, seed=seed))

    checked = 0
    for i in np.flatnonzero(balanced.synthetic):
        category = balanced.labels[i]
        members = np.array([j for j in range(len(features)) if features.labels[j] == category])
        seed_row = int(np.flatnonzero(members == balanced.provenance[i])[0])
        candidates = brute_force_neighbors(features.rows[members], seed_row, k)

        point = balanced.rows[i]
        start = features.rows[members[seed_row]]
        residual = min(segment_residual(point, start, features.rows[members[c]]) for c in candidates)
        assert residual < 1e-9
        checked += 1

    assert checked == 2 * 120 - counts[Category.AIM] - counts[Category.TXT]


def test_match_majority_balances_the_az_class_counts():
    features = FeatureMatrix(
        np.random.default_rng(0).normal(size=(sum(AZ_CLASS_COUNTS.values()), 2)),
        [category for category, count in AZ_CLASS_COUNTS.items() for _ in range(count)],
    )
    balanced = smote(features, SmoteConfig(seed=1))

    assert len(balanced) == AZ_BALANCED_TOTAL
    for category in CATEGORY_ORDER:
        assert balanced.labels.count(category) == AZ_MAJORITY_COUNT
    assert int(balanced.synthetic.sum()) == AZ_BALANCED_TOTAL - len(features)


def test_original_rows_come_first_and_unchanged():
    features = random_features({Category.OWN: 30, Category.BAS: 6, Category.CTR: 9}, dim=3, seed=2)
    balanced = smote(features, SmoteConfig(seed=3))

    np.testing.assert_array_equal(balanced.rows[: len(features)], features.rows)
    assert balanced.labels[: len(features)] == features.labels
    assert not balanced.synthetic[: len(features)].any()
    assert balanced.synthetic[len(features) :].all()

    synthetic_labels = balanced.labels[len(features) :]
    assert synthetic_labels == sorted(synthetic_labels, key=CATEGORY_ORDER.index)


def test_smote_is_deterministic_for_a_seed():
    features = random_features({Category.OWN: 30, Category.BAS: 6}, dim=3, seed=4)
    first = smote(features, SmoteConfig(seed=9))
    second = smote(features, SmoteConfig(seed=9))
    other = smote(features, SmoteConfig(seed=10))

    np.testing.assert_array_equal(first.rows, second.rows)
    np.testing.assert_array_equal(first.provenance, second.provenance)
    assert not np.array_equal(first.rows, other.rows)


def test_balanced_input_is_returned_unchanged():
    features = random_features({Category.OWN: 10, Category.BAS: 10}, dim=2, seed=5)
    assert smote(features) is features


def test_multiplier_policy_only_grows_listed_categories():
    features = random_features({Category.OWN: 40, Category.AIM: 10, Category.TXT: 5}, dim=2, seed=6)
    config = SmoteConfig(target_policy=TargetPolicy.multiplier, multipliers={Category.AIM: 2.5}, seed=1)
    balanced = smote(features, config)

    assert balanced.labels.count(Category.AIM) == 25
    assert balanced.labels.count(Category.TXT) == 5
    assert balanced.labels.count(Category.OWN) == 40


class TestSmoteEdgeCases(TestCase):
    def test_single_member_class_cannot_be_oversampled(self):
        features = random_features({Category.OWN: 10, Category.TXT: 1}, dim=2, seed=7)
        with self.assertRaises(InsufficientClassMembersError):
            smote(features)

    def test_k_is_clamped_to_the_class_size(self):
        features = random_features({Category.OWN: 20, Category.AIM: 3}, dim=2, seed=8)
        with self.assertLogs("azwordvec.lib.balance", level=logging.WARNING):
            balanced = smote(features, SmoteConfig(k_neighbors=5))
        self.assertEqual(balanced.labels.count(Category.AIM), 20)

    def test_identical_rows_interpolate_to_the_same_point(self):
        rows = np.vstack([np.zeros((5, 2)), np.ones((2, 2))])
        labels = [Category.OWN] * 5 + [Category.AIM] * 2
        balanced = smote(FeatureMatrix(rows, labels), SmoteConfig(k_neighbors=1))
        np.testing.assert_array_equal(balanced.rows[balanced.synthetic], np.ones((3, 2)))


def test_seed_quotas_add_exactly_what_is_needed():
    rng = np.random.default_rng(0)
    for members, needed in [(5, 12), (7, 3), (4, 8), (10, 0)]:
        quotas = seed_quotas(members, needed, rng)
        assert quotas.sum() == needed
        assert quotas.max() - quotas.min() <= 1


def test_same_class_neighbors_exclude_the_row_itself():
    rows = np.array([[0.0], [1.0], [3.0], [7.0]])
    np.testing.assert_array_equal(same_class_neighbors(rows, 2), [[1, 2], [0, 2], [1, 0], [2, 1]])


def test_class_targets():
    counts = {Category.OWN: 10, Category.AIM: 4}
    assert class_targets(counts, SmoteConfig()) == {Category.OWN: 10, Category.AIM: 10}
    multiplier = SmoteConfig(target_policy=TargetPolicy.multiplier, multipliers={Category.AIM: 0.5, Category.OWN: 1.5})
    assert class_targets(counts, multiplier) == {Category.OWN: 15, Category.AIM: 4}
