from typing import Optional

from pydantic import root_validator

from azwordvec.lib.validation.exceptions import ValidationError
from azwordvec.models.enums.category import Category
from azwordvec.models.enums.evaluation import SmotePlacement, TargetPolicy
from azwordvec.settings import DEFAULT_SEED
from azwordvec.view_models.base.base import BaseModel, validator


class SmoteConfig(BaseModel):
    k_neighbors: int = 5
    target_policy: TargetPolicy = TargetPolicy.match_majority
    # Target size of each class as a multiple of its current size, for the multiplier policy. Missing classes keep
    # their size.
    multipliers: Optional[dict[Category, float]] = None
    seed: int = DEFAULT_SEED
    placement: SmotePlacement = SmotePlacement.within_folds

    @validator("k_neighbors")
    def k_at_least_one(cls, v):
        if v < 1:
            raise ValidationError(f"k_neighbors must be at least 1, got {v}")
        return v

    @validator("multipliers")
    def non_negative_multipliers(cls, v):
        if v is not None:
            for category, multiplier in v.items():
                if multiplier < 0:
                    raise ValidationError(f"multiplier for {category} must be non-negative, got {multiplier}")
        return v

    @root_validator(skip_on_failure=True)
    def multipliers_for_multiplier_policy(cls, values):
        if values["target_policy"] == TargetPolicy.multiplier and not values.get("multipliers"):
            raise ValidationError("the multiplier target policy needs at least one per-class multiplier")
        return values
