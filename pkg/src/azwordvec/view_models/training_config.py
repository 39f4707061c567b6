from pydantic import root_validator

from azwordvec.lib.validation.exceptions import ValidationError
from azwordvec.models.enums.embedding import Architecture, OutputLayer
from azwordvec.settings import DEFAULT_SEED, DEFAULT_WORKERS
from azwordvec.view_models.base.base import BaseModel, validator

# Full softmax is exact but costs O(V) per example; it exists for small oracle vocabularies.
FULL_SOFTMAX_MAX_VOCABULARY = 1000

MAX_SEED = 2**64 - 1


class TrainingConfig(BaseModel):
    """Hyperparameters shared by the word2vec, PV-DM and category-specific trainers."""

    dim: int = 100
    window: int = 10
    min_count: int = 40
    epochs: int = 5
    initial_learning_rate: float = 0.025
    architecture: Architecture = Architecture.cbow
    output: OutputLayer = OutputLayer.hierarchical_softmax
    negative: int = 5
    workers: int = DEFAULT_WORKERS
    seed: int = DEFAULT_SEED
    subsample: bool = False
    subsample_threshold: float = 1e-3

    @validator("dim", "window", "min_count", "epochs", "workers")
    def at_least_one(cls, v, field):
        if v < 1:
            raise ValidationError(f"{field.name} must be at least 1, got {v}")
        return v

    @validator("initial_learning_rate", "subsample_threshold")
    def positive(cls, v, field):
        if not v > 0:
            raise ValidationError(f"{field.name} must be positive, got {v}")
        return v

    @validator("seed")
    def seed_fits_64_bits(cls, v):
        if not 0 <= v <= MAX_SEED:
            raise ValidationError(f"seed must be an unsigned 64-bit integer, got {v}")
        return v

    @root_validator(skip_on_failure=True)
    def negatives_when_sampling(cls, values):
        if values["output"] == OutputLayer.negative_sampling and values["negative"] < 1:
            raise ValidationError(f"negative sampling needs at least one negative, got {values['negative']}")
        return values

    @property
    def minimum_learning_rate(self) -> float:
        return self.initial_learning_rate * 1e-4
