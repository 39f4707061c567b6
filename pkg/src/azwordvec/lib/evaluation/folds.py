import logging
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from azwordvec.lib.exceptions import ConfigurationError
from azwordvec.models.enums.category import CATEGORY_ORDER, Category

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class FoldPlan:
    n_folds: int
    # Fold index of every row.
    assignments: np.ndarray
    seed: int

    def test_indices(self, fold: int) -> np.ndarray:
        return np.flatnonzero(self.assignments == fold)

    def train_indices(self, fold: int) -> np.ndarray:
        return np.flatnonzero(self.assignments != fold)

    def fold_sizes(self) -> list[int]:
        return np.bincount(self.assignments, minlength=self.n_folds).tolist()


def stratified_folds(labels: Sequence[Category], n_folds: int, seed: int) -> FoldPlan:
    """
    Assign every row to one of `n_folds` folds, stratified by category.

    Rows are shuffled within each category, the categories are laid end to end in canonical order, and the row at
    position p goes to fold p mod n_folds. Each category is therefore spread over consecutive folds, so its count
    in any two folds differs by at most one, and fold sizes differ by at most one overall. With n_folds equal to
    the number of rows this is leave-one-out.

    Raises
    ------
    ConfigurationError
        If n_folds is below 2 or above the number of rows.
    """
    if n_folds < 2:
        raise ConfigurationError(f"n_folds must be at least 2, got {n_folds}")
    if n_folds > len(labels):
        raise ConfigurationError(f"cannot split {len(labels)} rows into {n_folds} folds")

    rng = np.random.default_rng(seed)
    label_values = np.array([category.value for category in labels])
    ordered = [rng.permutation(np.flatnonzero(label_values == category.value)) for category in CATEGORY_ORDER]

    assignments = np.empty(len(labels), dtype=np.int64)
    assignments[np.concatenate(ordered)] = np.arange(len(labels)) % n_folds

    small = sorted(category.value for category, count in Counter(labels).items() if count < n_folds)
    if small:
        logger.warning("categories with fewer rows than folds (%s) are missing from some test folds", ", ".join(small))
    return FoldPlan(n_folds, assignments, seed)
