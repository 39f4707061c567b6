from typing import Sequence

import numpy as np
from sklearn.metrics import confusion_matrix as sklearn_confusion_matrix

from azwordvec.models.enums.category import Category
from azwordvec.view_models.evaluation import CategoryScores


def confusion_matrix(
    gold: Sequence[Category], predicted: Sequence[Category], categories: Sequence[Category]
) -> np.ndarray:
    """Counts with gold categories as rows and predictions as columns, both in `categories` order."""
    if not len(gold):
        return np.zeros((len(categories), len(categories)), dtype=np.int64)
    labels = [category.value for category in categories]
    return sklearn_confusion_matrix(
        [category.value for category in gold], [category.value for category in predicted], labels=labels
    ).astype(np.int64)


def _ratio(numerator: float, denominator: float) -> float:
    return numerator / denominator if denominator else 0.0


def f_measure(precision: float, recall: float) -> float:
    return _ratio(2 * precision * recall, precision + recall)


def prf_from_confusion(counts: np.ndarray) -> list[CategoryScores]:
    """
    Precision, recall and F-measure of every category (row/column) of a confusion matrix.

    P = TP / (TP + FP), R = TP / (TP + FN), F = 2PR / (P + R); every 0/0 is taken as 0.
    """
    counts = np.asarray(counts)
    true_positives = np.diag(counts).astype(np.float64)
    predicted = counts.sum(axis=0)
    gold = counts.sum(axis=1)

    scores = []
    for tp, n_predicted, n_gold in zip(true_positives, predicted, gold):
        precision = _ratio(tp, n_predicted)
        recall = _ratio(tp, n_gold)
        scores.append(CategoryScores(precision=precision, recall=recall, f_measure=f_measure(precision, recall)))
    return scores


def micro_recall(counts: np.ndarray) -> float:
    """Recall with true positives and false negatives summed over all categories."""
    counts = np.asarray(counts)
    tp = np.diag(counts).sum()
    fn = counts.sum() - tp
    return _ratio(float(tp), float(tp + fn))


def accuracy(counts: np.ndarray) -> float:
    counts = np.asarray(counts)
    return _ratio(float(np.trace(counts)), float(counts.sum()))
