"""
Loss and gradient of the output layers for a single training example.

Every function receives the projection h and the parameters it reads, and returns the example's negative log
likelihood with its gradient. Nothing is modified here: the trainers apply the gradients, and gradient checks call
the same functions with perturbed parameters.
"""

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from scipy.special import expit


@dataclass
class OutputGradient:
    """
    Loss and gradient of one output layer.

    The gradient of the touched output rows is the outer product of `error` and `h`; it is kept factored so the
    trainers can update the rows without materializing it.
    """

    loss: float
    grad_h: np.ndarray
    # Output-matrix rows the gradient touches; None means every row, in order.
    rows: Optional[np.ndarray]
    error: np.ndarray
    h: np.ndarray
    grad_bias: Optional[np.ndarray] = None
    # False when `rows` lists a row more than once.
    unique_rows: bool = True

    @property
    def grad_rows(self) -> np.ndarray:
        return np.outer(self.error, self.h)

    def scaled(self, factor: float) -> "OutputGradient":
        return OutputGradient(
            self.loss * factor,
            self.grad_h * factor,
            self.rows,
            self.error * factor,
            self.h,
            self.grad_bias * factor if self.grad_bias is not None else None,
            self.unique_rows,
        )


def full_softmax(h: np.ndarray, target: int, weights: np.ndarray, bias: np.ndarray) -> OutputGradient:
    """-log softmax(b + U h)[target]."""
    logits = bias + weights @ h
    shifted = logits - logits.max()
    exp = np.exp(shifted)
    total = exp.sum()
    log_probs = shifted - np.log(total)
    error = exp / total
    error[target] -= 1.0
    return OutputGradient(
        loss=float(-log_probs[target]),
        grad_h=weights.T @ error,
        rows=None,
        error=error,
        h=h,
        grad_bias=error,
    )


def hierarchical_softmax(h: np.ndarray, code: np.ndarray, point: np.ndarray, inner: np.ndarray) -> OutputGradient:
    """
    -log of the product of binary decisions along a Huffman path.

    At inner node n the walk takes branch 0 with probability sigmoid(v_n . h) and branch 1 otherwise.
    """
    nodes = inner[point]
    scores = nodes @ h
    sign = 1.0 - 2.0 * code
    error = expit(scores) - (1.0 - code)
    # A root-to-leaf path never visits a node twice.
    return OutputGradient(
        loss=float(np.logaddexp(0.0, -sign * scores).sum()),
        grad_h=error @ nodes,
        rows=point,
        error=error,
        h=h,
    )


def negative_sampling(h: np.ndarray, target: int, negatives: Sequence[int], output: np.ndarray) -> OutputGradient:
    """-log sigmoid(u_target . h) - sum over negatives of log sigmoid(-u_neg . h)."""
    rows = np.concatenate(([target], np.asarray(negatives, dtype=np.int64)))
    vectors = output[rows]
    scores = vectors @ h
    labels = np.zeros(len(rows))
    labels[0] = 1.0
    error = expit(scores) - labels
    loss = np.logaddexp(0.0, -scores[0]) + np.logaddexp(0.0, scores[1:]).sum()
    return OutputGradient(
        loss=float(loss),
        grad_h=error @ vectors,
        rows=rows,
        error=error,
        h=h,
        unique_rows=len(set(rows.tolist())) == len(rows),
    )


def draw_negatives(rng: np.random.Generator, noise_table: np.ndarray, target: int, count: int) -> np.ndarray:
    """Draw `count` noise words from the cumulative noise table, redrawing any that hit the target."""
    negatives = np.empty(0, dtype=np.int64)
    while negatives.size < count:
        draws = np.searchsorted(noise_table, rng.random(count - negatives.size), side="right")
        negatives = np.concatenate((negatives, draws[draws != target]))
    return negatives


def hierarchical_softmax_distribution(
    h: np.ndarray, codes: Sequence[np.ndarray], points: Sequence[np.ndarray], inner: np.ndarray
) -> np.ndarray:
    """Probability of every word under hierarchical softmax, by walking each word's path."""
    probabilities = np.empty(len(codes))
    for word, (code, point) in enumerate(zip(codes, points)):
        sign = 1.0 - 2.0 * code
        probabilities[word] = np.exp(-np.logaddexp(0.0, -sign * (inner[point] @ h)).sum())
    return probabilities
