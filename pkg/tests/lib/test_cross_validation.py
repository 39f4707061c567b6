import numpy as np
import pytest

from azwordvec.lib.embeddings.training import train_word2vec
from azwordvec.lib.evaluation.cross_validation import (
    average_scores,
    evaluate_features,
    fold_seed,
    present_categories,
    run_cv,
    score_fold,
)
from azwordvec.lib.evaluation.metrics import prf_from_confusion
from azwordvec.lib.sentvec import FeatureMatrix
from azwordvec.lib.vocabulary import build_vocabulary
from azwordvec.models.enums.category import Category
from azwordvec.models.enums.embedding import OutputLayer
from azwordvec.models.enums.evaluation import FoldAveraging, SmotePlacement
from azwordvec.view_models.classifier_config import ClassifierConfig
from azwordvec.view_models.evaluation import FoldConfig
from azwordvec.view_models.smote_config import SmoteConfig
from azwordvec.view_models.training_config import TrainingConfig

from tests.helpers.constants import DISJOINT_CLASS_COUNTS
from tests.helpers.util import disjoint_vocabulary_dataset

CLASSIFIER_CONFIG = ClassifierConfig(epochs=50)


@pytest.fixture(scope="module")
def disjoint_model():
    data = disjoint_vocabulary_dataset(DISJOINT_CLASS_COUNTS, seed=5)
    corpus = [record.sentence for record in data]
    config = TrainingConfig(
        dim=25, window=5, min_count=1, epochs=5, output=OutputLayer.negative_sampling, workers=1, seed=7
    )
    return data, train_word2vec(corpus, build_vocabulary(corpus, min_count=1), config)


def test_disjoint_vocabularies_are_classified_almost_perfectly(disjoint_model):
    data, model = disjoint_model
    report = run_cv(
        data,
        model,
        smote_config=SmoteConfig(seed=3),
        classifier_config=CLASSIFIER_CONFIG,
        fold_config=FoldConfig(n_folds=10, seed=3),
    )

    assert report.name == "AVGWVEC 25"
    assert report.dim == 25
    assert report.smote_placement == SmotePlacement.within_folds
    assert len(report.folds) == 10
    assert sum(fold.test_rows for fold in report.folds) == len(data)
    assert all(fold.synthetic_test_rows == 0 for fold in report.folds)
    assert report.categories == present_categories([record.category for record in data])
    assert report.macro_f() >= 0.95


def test_cross_validation_is_reproducible(disjoint_model):
    data, model = disjoint_model
    configs = dict(
        smote_config=SmoteConfig(seed=1),
        classifier_config=CLASSIFIER_CONFIG,
        fold_config=FoldConfig(n_folds=5, seed=1),
    )
    first = run_cv(data, model, **configs)
    second = run_cv(data, model, **configs)

    assert first.json() == second.json()


def test_fold_workers_do_not_change_results(disjoint_model):
    data, model = disjoint_model
    single = run_cv(data, model, classifier_config=CLASSIFIER_CONFIG, fold_config=FoldConfig(n_folds=4, workers=1))
    threaded = run_cv(data, model, classifier_config=CLASSIFIER_CONFIG, fold_config=FoldConfig(n_folds=4, workers=4))

    assert single.json() == threaded.json()


def test_oversampling_before_the_split_is_recorded(disjoint_model):
    data, model = disjoint_model
    report = run_cv(
        data,
        model,
        smote_config=SmoteConfig(placement=SmotePlacement.before_split),
        classifier_config=CLASSIFIER_CONFIG,
        fold_config=FoldConfig(n_folds=5),
    )

    assert report.smote_placement == SmotePlacement.before_split
    assert sum(fold.test_rows for fold in report.folds) == 7 * 150
    assert sum(fold.synthetic_test_rows for fold in report.folds) == 7 * 150 - len(data)


def test_without_oversampling(disjoint_model):
    data, model = disjoint_model
    report = run_cv(data, model, classifier_config=CLASSIFIER_CONFIG, fold_config=FoldConfig(n_folds=3), name="plain")

    assert report.name == "plain"
    assert report.smote_placement is None


def test_pooled_averaging_uses_the_summed_confusion(disjoint_model):
    data, model = disjoint_model
    report = run_cv(
        data,
        model,
        classifier_config=CLASSIFIER_CONFIG,
        fold_config=FoldConfig(n_folds=3, averaging=FoldAveraging.pooled),
    )
    expected = prf_from_confusion(np.array(report.pooled_confusion()))

    assert report.averaging == FoldAveraging.pooled
    assert [scores.f_measure for scores in report.averaged.values()] == pytest.approx(
        [scores.f_measure for scores in expected]
    )


def test_macro_averaging_is_the_mean_over_folds():
    categories = [Category.AIM, Category.OWN]
    folds = [
        score_fold(0, [Category.AIM, Category.OWN], [Category.AIM, Category.OWN], categories),
        score_fold(1, [Category.AIM, Category.OWN], [Category.OWN, Category.OWN], categories),
    ]
    averaged = average_scores(folds, categories, FoldAveraging.macro)

    assert averaged[Category.AIM].recall == pytest.approx(0.5)
    assert averaged[Category.AIM].precision == pytest.approx(0.5)
    assert averaged[Category.OWN].precision == pytest.approx(0.75)
    assert averaged[Category.OWN].recall == pytest.approx(1.0)


def test_absent_categories_are_not_reported():
    rng = np.random.default_rng(0)
    rows = np.vstack([rng.normal(size=(20, 2)), rng.normal(loc=5.0, size=(20, 2))])
    features = FeatureMatrix(rows, [Category.OWN] * 20 + [Category.CTR] * 20)
    report = evaluate_features(features, classifier_config=CLASSIFIER_CONFIG, fold_config=FoldConfig(n_folds=4))

    assert report.categories == [Category.CTR, Category.OWN]
    assert set(report.averaged) == {Category.CTR, Category.OWN}
    assert report.method is None
    assert report.dim == 2


def test_fold_seeds_are_distinct_and_stable():
    seeds = [fold_seed(1, fold) for fold in range(10)]
    assert len(set(seeds)) == 10
    assert seeds == [fold_seed(1, fold) for fold in range(10)]
    assert fold_seed(2, 0) != seeds[0]
