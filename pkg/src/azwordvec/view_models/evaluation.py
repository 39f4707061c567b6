from typing import Optional

from azwordvec.lib.validation.exceptions import ValidationError
from azwordvec.models.enums.category import Category
from azwordvec.models.enums.evaluation import FoldAveraging, SentenceVectorMethod, SmotePlacement
from azwordvec.settings import DEFAULT_SEED
from azwordvec.view_models.base.base import BaseModel, validator


class VectorizerConfig(BaseModel):
    method: SentenceVectorMethod = SentenceVectorMethod.avgwvec
    paravec_steps: int = 50
    paravec_learning_rate: float = 0.025
    # Seed for PARAVEC inference; the embedding model's training seed when unset.
    seed: Optional[int] = None
    workers: int = 1

    @validator("paravec_steps")
    def non_negative_steps(cls, v):
        if v < 0:
            raise ValidationError(f"paravec_steps must be non-negative, got {v}")
        return v

    @validator("workers")
    def at_least_one_worker(cls, v):
        if v < 1:
            raise ValidationError(f"workers must be at least 1, got {v}")
        return v


class FoldConfig(BaseModel):
    n_folds: int = 10
    seed: int = DEFAULT_SEED
    averaging: FoldAveraging = FoldAveraging.macro
    workers: int = 1

    @validator("n_folds")
    def at_least_two_folds(cls, v):
        if v < 2:
            raise ValidationError(f"n_folds must be at least 2, got {v}")
        return v

    @validator("workers")
    def at_least_one_worker(cls, v):
        if v < 1:
            raise ValidationError(f"workers must be at least 1, got {v}")
        return v


class CategoryScores(BaseModel):
    precision: float
    recall: float
    f_measure: float

    @validator("precision", "recall", "f_measure")
    def unit_interval(cls, v, field):
        if not 0.0 <= v <= 1.0:
            raise ValidationError(f"{field.name} must lie in [0, 1], got {v}")
        return v

    def cell(self) -> str:
        return f"{self.precision:.2f}/{self.recall:.2f}/{self.f_measure:.2f}"


class FoldResult(BaseModel):
    fold: int
    scores: dict[Category, CategoryScores]
    # Rows are gold categories and columns predictions, both in `EvaluationReport.categories` order.
    confusion: list[list[int]]
    test_rows: int
    synthetic_test_rows: int = 0


class EvaluationReport(BaseModel):
    """Per-category precision, recall and F-measure for one configuration, per fold and averaged over folds."""

    name: str
    corpus: Optional[str]
    method: Optional[str]
    dim: Optional[int]
    smote_placement: Optional[SmotePlacement]
    averaging: FoldAveraging = FoldAveraging.macro
    categories: list[Category]
    folds: list[FoldResult]
    averaged: dict[Category, CategoryScores]

    def macro_f(self) -> float:
        """Unweighted mean F-measure over the categories that occur in the data."""
        if not self.averaged:
            return 0.0
        return sum(scores.f_measure for scores in self.averaged.values()) / len(self.averaged)

    def pooled_confusion(self) -> list[list[int]]:
        size = len(self.categories)
        pooled = [[0] * size for _ in range(size)]
        for fold in self.folds:
            for i, row in enumerate(fold.confusion):
                for j, value in enumerate(row):
                    pooled[i][j] += value
        return pooled
