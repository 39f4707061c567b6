"""
SMOTE oversampling of minority categories in sentence-vector space.
"""

import logging
from typing import Optional

import numpy as np
from sklearn.neighbors import NearestNeighbors

from azwordvec.lib.exceptions import InsufficientClassMembersError
from azwordvec.lib.sentvec import FeatureMatrix
from azwordvec.models.enums.category import CATEGORY_ORDER, Category
from azwordvec.models.enums.evaluation import TargetPolicy
from azwordvec.view_models.smote_config import SmoteConfig

logger = logging.getLogger(__name__)


def class_targets(counts: dict[Category, int], config: SmoteConfig) -> dict[Category, int]:
    """
    Target row count per category.

    Under MATCH_MAJORITY every category is brought up to the largest count; under MULTIPLIER category c is brought
    up to round(m_c * n_c). Targets never fall below the current count; SMOTE only adds rows.
    """
    if config.target_policy == TargetPolicy.match_majority:
        majority = max(counts.values(), default=0)
        return {category: max(majority, count) for category, count in counts.items()}

    multipliers = config.multipliers or {}
    return {
        category: max(count, int(round(multipliers.get(category, 1.0) * count))) for category, count in counts.items()
    }


def seed_quotas(members: int, needed: int, rng: np.random.Generator) -> np.ndarray:
    """
    Number of synthetic rows to draw from each member of a class so that exactly `needed` rows are added.

    Every member seeds `needed // members` rows; the remainder goes to a random choice of distinct members.
    """
    quotas = np.full(members, needed // members, dtype=np.int64)
    remainder = needed % members
    if remainder:
        quotas[rng.choice(members, size=remainder, replace=False)] += 1
    return quotas


def same_class_neighbors(rows: np.ndarray, k: int) -> np.ndarray:
    """Indices of the k nearest other rows (Euclidean) for every row, nearest first."""
    neighbors = NearestNeighbors(n_neighbors=k + 1).fit(rows)
    _, indices = neighbors.kneighbors(rows)

    result = np.empty((len(rows), k), dtype=np.int64)
    for i, row_neighbors in enumerate(indices):
        # With duplicate points the row itself is not necessarily returned first.
        others = row_neighbors[row_neighbors != i]
        result[i] = others[:k]
    return result


def smote(features: FeatureMatrix, config: Optional[SmoteConfig] = None) -> FeatureMatrix:
    """
    Add synthetic rows to minority categories.

    Each synthetic row is `x + lambda * (x_nn - x)`, with `lambda` uniform in [0, 1] and `x_nn` drawn from the
    k nearest same-class neighbours of the seed row x. The original rows come first and unchanged; synthetic rows
    follow, grouped by category in canonical order, carry their seed's label, and record the seed's provenance.
    The output is a deterministic function of the input and `config.seed`.

    Raises
    ------
    InsufficientClassMembersError
        If a category that needs oversampling has fewer than two members.
    """
    config = config or SmoteConfig()
    rng = np.random.default_rng(config.seed)

    labels = np.array([category.value for category in features.labels])
    counts = {category: int((labels == category.value).sum()) for category in CATEGORY_ORDER}
    counts = {category: count for category, count in counts.items() if count}
    targets = class_targets(counts, config)

    new_rows: list[np.ndarray] = []
    new_labels: list[Category] = []
    new_provenance: list[np.ndarray] = []

    for category in CATEGORY_ORDER:
        if category not in counts:
            continue
        needed = targets[category] - counts[category]
        if needed <= 0:
            continue

        members = np.flatnonzero(labels == category.value)
        if len(members) < 2:
            raise InsufficientClassMembersError(
                f"cannot oversample {category}: SMOTE needs at least 2 members, found {len(members)}"
            )
        k = config.k_neighbors
        if k >= len(members):
            logger.warning(
                "k_neighbors=%i is not below the %i members of %s; using k=%i",
                k,
                len(members),
                category,
                len(members) - 1,
            )
            k = len(members) - 1

        class_rows = features.rows[members]
        neighbors = same_class_neighbors(class_rows, k)
        seeds = np.repeat(np.arange(len(members)), seed_quotas(len(members), needed, rng))
        chosen = neighbors[seeds, rng.integers(0, k, size=len(seeds))]
        lam = rng.random(len(seeds))[:, np.newaxis]

        new_rows.append(class_rows[seeds] + lam * (class_rows[chosen] - class_rows[seeds]))
        new_labels.extend([category] * len(seeds))
        new_provenance.append(features.provenance[members[seeds]])
        logger.debug("oversampled %s from %i to %i rows", category, len(members), targets[category])

    if not new_rows:
        return features

    synthetic_rows = np.vstack(new_rows)
    return FeatureMatrix(
        np.vstack((features.rows, synthetic_rows)),
        list(features.labels) + new_labels,
        features.method,
        list(features.zero_rows),
        np.concatenate([features.provenance] + new_provenance),
        np.concatenate((features.synthetic, np.ones(len(synthetic_rows), dtype=bool))),
    )
