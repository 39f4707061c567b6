from azwordvec.lib.validation.exceptions import ValidationError
from azwordvec.settings import DEFAULT_SEED
from azwordvec.view_models.base.base import BaseModel, validator


class ClassifierConfig(BaseModel):
    l2: float = 1e-4
    epochs: int = 200
    learning_rate: float = 0.1
    batch_size: int = 32
    seed: int = DEFAULT_SEED
    # Precondition SGD with z-scored features. The objective and the returned weights stay in raw feature space.
    standardize: bool = True

    @validator("l2")
    def non_negative_l2(cls, v):
        if v < 0:
            raise ValidationError(f"l2 must be non-negative, got {v}")
        return v

    @validator("epochs", "batch_size")
    def at_least_one(cls, v, field):
        if v < 1:
            raise ValidationError(f"{field.name} must be at least 1, got {v}")
        return v

    @validator("learning_rate")
    def positive_learning_rate(cls, v):
        if not v > 0:
            raise ValidationError(f"learning_rate must be positive, got {v}")
        return v
