"""
Stratified k-fold evaluation of sentence-vector classifiers.

The embedding model is trained beforehand and stays fixed. Sentences are vectorised once; then, for each fold,
SMOTE is applied to the training rows only, a classifier is trained and the held-out rows are predicted. Per-fold
precision, recall and F-measure are averaged over folds (or recomputed from the pooled confusion counts).

With `SmotePlacement.before_split` the whole dataset is oversampled first and then split, so synthetic copies of
held-out rows can reach the training folds and synthetic rows are tested. Reports record which placement was used.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Optional, Sequence

import numpy as np

from azwordvec.lib.balance import smote
from azwordvec.lib.classify import predict_batch, train_classifier
from azwordvec.lib.embeddings.model import EmbeddingModel, ParagraphTable
from azwordvec.lib.evaluation.folds import FoldPlan, stratified_folds
from azwordvec.lib.evaluation.metrics import confusion_matrix, prf_from_confusion
from azwordvec.lib.logging import LogType, log_record
from azwordvec.lib.sentvec import FeatureMatrix, vectorize_dataset
from azwordvec.models.enums.category import CATEGORY_ORDER, Category
from azwordvec.models.enums.evaluation import FoldAveraging, SmotePlacement
from azwordvec.models.sentence import LabeledSentence
from azwordvec.view_models.classifier_config import ClassifierConfig
from azwordvec.view_models.evaluation import (
    CategoryScores,
    EvaluationReport,
    FoldConfig,
    FoldResult,
    VectorizerConfig,
)
from azwordvec.view_models.smote_config import SmoteConfig

logger = logging.getLogger(__name__)


def fold_seed(seed: int, fold: int) -> int:
    """Independent, reproducible seed for one fold."""
    return int(np.random.SeedSequence([seed, fold]).generate_state(1, dtype=np.uint64)[0])


def present_categories(labels: Sequence[Category]) -> list[Category]:
    present = set(labels)
    return [category for category in CATEGORY_ORDER if category in present]


def score_fold(
    fold: int,
    gold: Sequence[Category],
    predicted: Sequence[Category],
    categories: Sequence[Category],
    synthetic_test_rows: int = 0,
) -> FoldResult:
    counts = confusion_matrix(gold, predicted, categories)
    scores = dict(zip(categories, prf_from_confusion(counts)))
    return FoldResult(
        fold=fold,
        scores=scores,
        confusion=counts.tolist(),
        test_rows=len(gold),
        synthetic_test_rows=synthetic_test_rows,
    )


def average_scores(
    folds: Sequence[FoldResult], categories: Sequence[Category], averaging: FoldAveraging
) -> dict[Category, CategoryScores]:
    """Per-category scores over all folds: the mean of the fold scores, or the scores of the summed confusion."""
    if not folds:
        return {}
    if averaging == FoldAveraging.pooled:
        pooled = np.sum([np.asarray(fold.confusion) for fold in folds], axis=0)
        return dict(zip(categories, prf_from_confusion(pooled)))

    averaged = {}
    for category in categories:
        fold_scores = [fold.scores[category] for fold in folds]
        averaged[category] = CategoryScores(
            precision=float(np.mean([scores.precision for scores in fold_scores])),
            recall=float(np.mean([scores.recall for scores in fold_scores])),
            f_measure=float(np.mean([scores.f_measure for scores in fold_scores])),
        )
    return averaged


def run_folds(
    plan: FoldPlan,
    evaluate_fold: Callable[[int], FoldResult],
    workers: int = 1,
) -> list[FoldResult]:
    """Evaluate every fold, concurrently when `workers > 1`. Results are returned in fold order."""
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(evaluate_fold, range(plan.n_folds)))
    return [evaluate_fold(fold) for fold in range(plan.n_folds)]


def evaluate_features(
    features: FeatureMatrix,
    smote_config: Optional[SmoteConfig] = None,
    classifier_config: Optional[ClassifierConfig] = None,
    fold_config: Optional[FoldConfig] = None,
    name: str = "features",
    corpus: Optional[str] = None,
    dim: Optional[int] = None,
) -> EvaluationReport:
    """
    Cross-validate a classifier on precomputed sentence vectors.

    `smote_config=None` disables oversampling. Every fold derives its SMOTE and classifier seeds from
    (fold seed, fold index), so results do not depend on `fold_config.workers`.
    """
    classifier_config = classifier_config or ClassifierConfig()
    fold_config = fold_config or FoldConfig()
    placement = smote_config.placement if smote_config is not None else None

    if smote_config is not None and placement == SmotePlacement.before_split:
        logger.warning("oversampling before the fold split; synthetic rows will appear in test folds")
        features = smote(features, smote_config)

    categories = present_categories(features.labels)
    plan = stratified_folds(features.labels, fold_config.n_folds, fold_config.seed)

    def evaluate_fold(fold: int) -> FoldResult:
        start = time.time_ns()
        seed = fold_seed(fold_config.seed, fold)
        train = features.subset(plan.train_indices(fold))
        test = features.subset(plan.test_indices(fold))

        if smote_config is not None and placement == SmotePlacement.within_folds:
            train = smote(train, smote_config.copy(update={"seed": seed}))
        classifier = train_classifier(train, config=classifier_config.copy(update={"seed": seed}))
        predicted = predict_batch(classifier, test.rows)

        result = score_fold(fold, test.labels, predicted, categories, int(test.synthetic.sum()))
        log_record(
            LogType.fold_result,
            start,
            config=name,
            fold=fold,
            macro_f=float(np.mean([scores.f_measure for scores in result.scores.values()])),
            rows=len(test),
        )
        return result

    folds = run_folds(plan, evaluate_fold, fold_config.workers)
    report = EvaluationReport(
        name=name,
        corpus=corpus,
        method=features.method.value if features.method is not None else None,
        dim=dim if dim is not None else features.dim,
        smote_placement=placement,
        averaging=fold_config.averaging,
        categories=categories,
        folds=folds,
        averaged=average_scores(folds, categories, fold_config.averaging),
    )
    logger.info("%s: macro-F %.4f over %i folds", name, report.macro_f(), plan.n_folds)
    return report


def run_cv(
    data: Sequence[LabeledSentence],
    model: EmbeddingModel,
    vectorizer_config: Optional[VectorizerConfig] = None,
    smote_config: Optional[SmoteConfig] = None,
    classifier_config: Optional[ClassifierConfig] = None,
    fold_config: Optional[FoldConfig] = None,
    paragraphs: Optional[ParagraphTable] = None,
    name: Optional[str] = None,
    corpus: Optional[str] = None,
) -> EvaluationReport:
    """
    Vectorise a labelled dataset with a pre-trained embedding model and cross-validate a classifier on it.

    Deterministic for fixed seeds. Errors from vectorisation, oversampling and training propagate.
    """
    vectorizer_config = vectorizer_config or VectorizerConfig()
    features = vectorize_dataset(model, data, paragraphs=paragraphs, config=vectorizer_config)
    return evaluate_features(
        features,
        smote_config=smote_config,
        classifier_config=classifier_config,
        fold_config=fold_config,
        name=name or f"{vectorizer_config.method.value.upper()} {model.dim}",
        corpus=corpus,
        dim=model.dim,
    )
