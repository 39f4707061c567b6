import sys

import numpy as np
import pytest

from azwordvec.lib.vocabulary import Vocabulary, build_vocabulary
from azwordvec.models.enums.embedding import Architecture, OutputLayer
from azwordvec.view_models.training_config import TrainingConfig

sys.path.append(".")

from tests.helpers.constants import DISJOINT_CLASS_COUNTS  # noqa: E402
from tests.helpers.util import disjoint_vocabulary_dataset, interchangeable_corpus, numbered_vocabulary  # noqa: E402


@pytest.fixture
def toy_corpus():
    return interchangeable_corpus()


@pytest.fixture
def toy_vocabulary(toy_corpus) -> Vocabulary:
    return build_vocabulary(toy_corpus, min_count=1)


@pytest.fixture
def small_vocabulary() -> Vocabulary:
    return numbered_vocabulary(12)


@pytest.fixture
def toy_config() -> TrainingConfig:
    return TrainingConfig(
        dim=10,
        window=2,
        min_count=1,
        epochs=5,
        architecture=Architecture.cbow,
        output=OutputLayer.full_softmax,
        workers=1,
        seed=11,
    )


@pytest.fixture
def disjoint_dataset():
    return disjoint_vocabulary_dataset(DISJOINT_CLASS_COUNTS, seed=5)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(2024)
