"""
Multinomial logistic regression over sentence vectors.

The classifier is fit by seeded mini-batch SGD on mean cross-entropy plus `(l2 / 2) * ||W||^2`. The L2 term is
applied as a proximal step, `W <- (W - lr * g) / (1 + lr * l2)`, which is the exact minimiser of the penalised
linearisation and stays stable for any l2. Features may be standardised during training as a preconditioner: the
penalty stays on the raw-space weights, the objective history is measured in raw space, and the learned weights are
mapped back, so a trained classifier always predicts from raw sentence vectors.
"""

import logging
import os
from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np
import pandas as pd
from scipy.special import logsumexp, softmax
from sklearn.preprocessing import StandardScaler

from azwordvec.lib.exceptions import DegenerateLabelsError, DimensionMismatchError
from azwordvec.lib.sentvec import FeatureMatrix
from azwordvec.lib.validation.corpus import validate_category
from azwordvec.lib.validation.exceptions import ValidationError
from azwordvec.models.enums.category import CATEGORY_ORDER, Category
from azwordvec.view_models.classifier_config import ClassifierConfig

logger = logging.getLogger(__name__)

PathLike = Union[str, "os.PathLike[str]"]


@dataclass
class Classifier:
    weights: np.ndarray
    biases: np.ndarray
    # The trained categories, in canonical order. Row c of `weights` scores categories[c].
    categories: list[Category]
    config: ClassifierConfig = field(default_factory=ClassifierConfig)
    loss_history: list[float] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return int(self.weights.shape[1])

    def distribution(self, x: np.ndarray) -> np.ndarray:
        if x.shape != (self.dim,):
            raise DimensionMismatchError(f"classifier expects a {self.dim}-vector, got shape {x.shape}")
        return softmax(self.weights @ x + self.biases)


def softmax_cross_entropy(
    weights: np.ndarray, biases: np.ndarray, x: np.ndarray, y: np.ndarray, l2: float = 0.0
) -> tuple[float, np.ndarray, np.ndarray]:
    """
    Mean cross-entropy of integer labels `y` under softmax(x W^T + b), plus `(l2 / 2) * ||W||^2`.

    Returns the objective and its gradients with respect to W and b.
    """
    logits = x @ weights.T + biases
    log_probs = logits - logsumexp(logits, axis=1, keepdims=True)
    rows = np.arange(len(y))
    loss = -log_probs[rows, y].mean() + 0.5 * l2 * float(np.sum(weights**2))

    error = np.exp(log_probs)
    error[rows, y] -= 1.0
    error /= len(y)
    return float(loss), error.T @ x + l2 * weights, error.sum(axis=0)


def train_classifier(
    features: FeatureMatrix,
    l2: Optional[float] = None,
    epochs: Optional[int] = None,
    lr: Optional[float] = None,
    seed: Optional[int] = None,
    config: Optional[ClassifierConfig] = None,
) -> Classifier:
    """
    Fit a multinomial logistic regression classifier.

    Explicit keyword arguments override the matching `config` fields. Training is single-threaded and
    deterministic for a fixed seed: rows are reshuffled every epoch with an RNG seeded from `seed`.

    Raises
    ------
    DegenerateLabelsError
        If the training rows carry fewer than two distinct categories.
    """
    config = config or ClassifierConfig()
    overrides = {"l2": l2, "epochs": epochs, "learning_rate": lr, "seed": seed}
    config = config.copy(update={key: value for key, value in overrides.items() if value is not None})

    present = set(features.labels)
    categories = [category for category in CATEGORY_ORDER if category in present]
    if len(categories) < 2:
        raise DegenerateLabelsError(f"a classifier needs at least two categories, got {len(categories)}")

    position = {category: i for i, category in enumerate(categories)}
    y = np.array([position[label] for label in features.labels], dtype=np.int64)
    x = features.rows

    scaler = None
    scale = np.ones(x.shape[1])
    if config.standardize:
        scaler = StandardScaler().fit(x)
        x = scaler.transform(x)
        scale = scaler.scale_

    def raw_parameters(weights: np.ndarray, biases: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        if scaler is None:
            return weights, biases
        # w . (x - mean) / scale == (w / scale) . x - (w / scale) . mean
        raw_weights = weights / scaler.scale_
        return raw_weights, biases - raw_weights @ scaler.mean_

    rng = np.random.default_rng(config.seed)
    weights = np.zeros((len(categories), x.shape[1]))
    biases = np.zeros(len(categories))
    rate = config.learning_rate
    # The penalty is on raw-space weights w / scale, so each standardized column shrinks by its own factor.
    shrink = 1.0 + rate * config.l2 / scale**2
    history: list[float] = []

    for _ in range(config.epochs):
        order = rng.permutation(len(y))
        for start in range(0, len(order), config.batch_size):
            batch = order[start : start + config.batch_size]
            _, grad_w, grad_b = softmax_cross_entropy(weights, biases, x[batch], y[batch])
            weights = (weights - rate * grad_w) / shrink
            biases = biases - rate * grad_b
        history.append(softmax_cross_entropy(*raw_parameters(weights, biases), features.rows, y, config.l2)[0])

    weights, biases = raw_parameters(weights, biases)

    logger.debug(
        "trained %i-class classifier on %i rows; objective %.4f -> %.4f",
        len(categories),
        len(y),
        history[0],
        history[-1],
    )
    return Classifier(weights, biases, categories, config, history)


def predict(classifier: Classifier, x: np.ndarray) -> tuple[Category, np.ndarray]:
    """
    Most probable category and the full distribution over `classifier.categories`.

    Ties go to the category that comes first in canonical order.
    """
    distribution = classifier.distribution(np.asarray(x, dtype=np.float64))
    return classifier.categories[int(np.argmax(distribution))], distribution


def predict_batch(classifier: Classifier, rows: np.ndarray) -> list[Category]:
    if rows.ndim != 2 or rows.shape[1] != classifier.dim:
        raise DimensionMismatchError(f"classifier expects {classifier.dim}-column rows, got shape {rows.shape}")
    if len(rows) == 0:
        return []
    scores = rows @ classifier.weights.T + classifier.biases
    return [classifier.categories[i] for i in np.argmax(scores, axis=1)]


def save_classifier(classifier: Classifier, path: PathLike) -> None:
    """Header `C d`, then `CATEGORY<TAB>bias<TAB>w1...wd` per class, 6 decimals."""
    frame = pd.DataFrame(classifier.weights)
    frame.insert(0, "bias", classifier.biases)
    frame.insert(0, "category", [category.value for category in classifier.categories])
    with open(path, "w", encoding="utf-8") as classifier_file:
        classifier_file.write(f"{len(classifier.categories)} {classifier.dim}\n")
        frame.to_csv(classifier_file, sep="\t", header=False, index=False, float_format="%.6f")


def load_classifier(path: PathLike) -> Classifier:
    with open(path, encoding="utf-8") as classifier_file:
        header = classifier_file.readline().split()
        if len(header) != 2 or not all(part.isdigit() for part in header):
            raise ValidationError("line 1: expected a `C d` header of two integers", custom_loc=("line", 1))
        size, dim = int(header[0]), int(header[1])
        frame = pd.read_csv(classifier_file, sep="\t", header=None, dtype={0: str})

    if frame.shape != (size, dim + 2):
        raise ValidationError(f"expected {size} rows of a category, a bias and {dim} weights, got {frame.shape}")
    categories = [validate_category(label, line_number) for line_number, label in enumerate(frame[0], start=2)]
    values = frame.drop(columns=0).to_numpy(dtype=np.float64)
    return Classifier(values[:, 1:], values[:, 0], categories)
