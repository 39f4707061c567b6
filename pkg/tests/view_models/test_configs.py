import pydantic
import pytest

from azwordvec.models.enums.category import Category
from azwordvec.models.enums.embedding import Architecture, OutputLayer
from azwordvec.models.enums.evaluation import SmotePlacement, TargetPolicy
from azwordvec.view_models.classifier_config import ClassifierConfig
from azwordvec.view_models.evaluation import CategoryScores, FoldConfig, VectorizerConfig
from azwordvec.view_models.smote_config import SmoteConfig
from azwordvec.view_models.training_config import TrainingConfig


def test_training_defaults():
    config = TrainingConfig()

    assert (config.dim, config.window, config.min_count, config.epochs) == (100, 10, 40, 5)
    assert config.initial_learning_rate == 0.025
    assert config.architecture == Architecture.cbow
    assert config.output == OutputLayer.hierarchical_softmax
    assert config.minimum_learning_rate == pytest.approx(0.025 * 1e-4)


@pytest.mark.parametrize(
    "field,value",
    [
        ("dim", 0),
        ("window", 0),
        ("epochs", 0),
        ("min_count", 0),
        ("workers", 0),
        ("initial_learning_rate", 0.0),
        ("seed", -1),
        ("seed", 2**64),
    ],
)
def test_invalid_training_config(field, value):
    with pytest.raises(pydantic.ValidationError):
        TrainingConfig(**{field: value})


def test_negative_sampling_needs_negatives():
    with pytest.raises(pydantic.ValidationError):
        TrainingConfig(output=OutputLayer.negative_sampling, negative=0)
    TrainingConfig(output=OutputLayer.hierarchical_softmax, negative=0)


def test_configs_accept_camel_case_aliases():
    config = TrainingConfig.parse_obj({"minCount": 3, "initialLearningRate": 0.05})
    assert config.min_count == 3
    assert config.initial_learning_rate == 0.05


def test_blank_values_fall_back_to_optional_defaults():
    assert VectorizerConfig(seed="").seed is None


def test_configs_are_immutable():
    config = TrainingConfig()
    with pytest.raises(TypeError):
        config.dim = 5


def test_smote_config():
    assert SmoteConfig().placement == SmotePlacement.within_folds
    with pytest.raises(pydantic.ValidationError):
        SmoteConfig(k_neighbors=0)
    with pytest.raises(pydantic.ValidationError):
        SmoteConfig(target_policy=TargetPolicy.multiplier)
    with pytest.raises(pydantic.ValidationError):
        SmoteConfig(target_policy=TargetPolicy.multiplier, multipliers={Category.AIM: -1.0})
    SmoteConfig(target_policy=TargetPolicy.multiplier, multipliers={"AIM": 2.0})


def test_classifier_config():
    assert ClassifierConfig().l2 >= 0
    for invalid in ({"l2": -0.1}, {"epochs": 0}, {"batch_size": 0}, {"learning_rate": 0.0}):
        with pytest.raises(pydantic.ValidationError):
            ClassifierConfig(**invalid)


def test_fold_config():
    assert FoldConfig().n_folds == 10
    with pytest.raises(pydantic.ValidationError):
        FoldConfig(n_folds=1)
    with pytest.raises(pydantic.ValidationError):
        FoldConfig(workers=0)


def test_vectorizer_config():
    with pytest.raises(pydantic.ValidationError):
        VectorizerConfig(paravec_steps=-1)


def test_category_scores_cell():
    assert CategoryScores(precision=0.291, recall=0.8249, f_measure=0.4302).cell() == "0.29/0.82/0.43"
    with pytest.raises(pydantic.ValidationError):
        CategoryScores(precision=1.2, recall=0.5, f_measure=0.5)


def test_unknown_fields_are_rejected():
    with pytest.raises(pydantic.ValidationError):
        TrainingConfig(dimension=50)
