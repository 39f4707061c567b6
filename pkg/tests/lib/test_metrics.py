import numpy as np
import pytest

from azwordvec.lib.evaluation.metrics import accuracy, confusion_matrix, f_measure, micro_recall, prf_from_confusion
from azwordvec.models.enums.category import Category

CATEGORIES = [Category.AIM, Category.OWN, Category.BAS]


def test_confusion_matrix_rows_are_gold():
    gold = [Category.AIM, Category.AIM, Category.OWN, Category.BAS]
    predicted = [Category.AIM, Category.OWN, Category.OWN, Category.OWN]

    np.testing.assert_array_equal(confusion_matrix(gold, predicted, CATEGORIES), [[1, 1, 0], [0, 1, 0], [0, 1, 0]])


def test_confusion_matrix_of_empty_fold():
    np.testing.assert_array_equal(confusion_matrix([], [], CATEGORIES), np.zeros((3, 3)))


def test_prf_from_confusion():
    counts = np.array([[8, 2, 0], [4, 16, 0], [0, 0, 0]])
    aim, own, bas = prf_from_confusion(counts)

    assert aim.precision == pytest.approx(8 / 12)
    assert aim.recall == pytest.approx(0.8)
    assert aim.f_measure == pytest.approx(2 * (8 / 12) * 0.8 / (8 / 12 + 0.8))
    assert own.precision == pytest.approx(16 / 18)
    assert own.recall == pytest.approx(0.8)
    assert (bas.precision, bas.recall, bas.f_measure) == (0.0, 0.0, 0.0)


def test_category_never_predicted_has_zero_precision():
    counts = np.array([[5, 0], [3, 0]])
    _, never = prf_from_confusion(counts)
    assert never.precision == 0.0
    assert never.recall == 0.0


@pytest.mark.parametrize("precision,recall,expected", [(0.5, 0.5, 0.5), (1.0, 0.0, 0.0), (0.0, 0.0, 0.0)])
def test_f_measure(precision, recall, expected):
    assert f_measure(precision, recall) == pytest.approx(expected)


def test_micro_recall_equals_accuracy():
    counts = np.array([[8, 2, 0], [4, 16, 0], [0, 1, 3]])
    assert micro_recall(counts) == pytest.approx(27 / 34)
    assert accuracy(counts) == pytest.approx(27 / 34)
    assert accuracy(np.zeros((2, 2))) == 0.0
