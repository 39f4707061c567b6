"""
SGD trainers for word2vec (CBOW / skip-gram), PV-DM paragraph vectors and category-specific (BSWE) embeddings.

All three share one loop. For each in-vocabulary position a window radius is drawn uniformly from [1, window], the
projection h is formed from the context (CBOW: mean of the context word vectors; skip-gram: the centre word's vector,
once per context word; PV-DM: mean of the paragraph vector and the context word vectors), and one SGD step is taken
on the chosen output layer. The learning rate decays linearly from its initial value to 1/10,000 of it over all
scheduled token positions.

With `workers > 1` the sentences of each epoch are split into shards trained by threads that update the shared
parameter matrices without locking; lost updates are accepted. Only `workers == 1` is reproducible.
"""

import logging
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

import numpy as np
from scipy.special import softmax

from azwordvec.lib.embeddings.model import EmbeddingModel, ParagraphTable
from azwordvec.lib.embeddings.objectives import (
    OutputGradient,
    draw_negatives,
    full_softmax,
    hierarchical_softmax,
    negative_sampling,
)
from azwordvec.lib.exceptions import (
    ConfigurationError,
    DegenerateLabelsError,
    DimensionMismatchError,
    EmptyCorpusError,
    ModelMismatchError,
    OutOfVocabularyError,
)
from azwordvec.lib.lexicon import CuewordLexicon
from azwordvec.lib.logging import LogType, log_record
from azwordvec.lib.vocabulary import Vocabulary
from azwordvec.models.enums.embedding import Architecture, ModelKind, OutputLayer
from azwordvec.models.sentence import Sentence
from azwordvec.view_models.training_config import FULL_SOFTMAX_MAX_VOCABULARY, TrainingConfig

logger = logging.getLogger(__name__)

DEFAULT_MIX_ALPHA = 0.5
DEFAULT_INFERENCE_STEPS = 50
DEFAULT_INFERENCE_LEARNING_RATE = 0.025

Seed = Union[int, Sequence[int], None]


@dataclass
class ExampleGradient:
    loss: float
    # Input word rows averaged into h, and the gradient each of them receives.
    inputs: np.ndarray
    grad_input: np.ndarray
    grad_paragraph: Optional[np.ndarray]
    output: OutputGradient
    category: Optional[OutputGradient] = None


def output_gradient(
    model: EmbeddingModel, h: np.ndarray, target: int, rng: np.random.Generator
) -> OutputGradient:
    """Loss and gradient of the model's output layer for predicting `target` from h."""
    config = model.config
    assert config is not None and model.output_weights is not None

    if config.output == OutputLayer.full_softmax:
        assert model.output_bias is not None
        return full_softmax(h, target, model.output_weights, model.output_bias)
    if config.output == OutputLayer.hierarchical_softmax:
        vocabulary = model.vocabulary
        assert vocabulary.codes is not None and vocabulary.points is not None
        return hierarchical_softmax(h, vocabulary.codes[target], vocabulary.points[target], model.output_weights)

    negatives = draw_negatives(rng, model.vocabulary.noise_table(), target, config.negative)
    return negative_sampling(h, target, negatives, model.output_weights)


def example_gradient(
    model: EmbeddingModel,
    inputs: np.ndarray,
    target: int,
    rng: np.random.Generator,
    paragraph: Optional[np.ndarray] = None,
    weak_label: Optional[int] = None,
    mix_alpha: float = 1.0,
) -> ExampleGradient:
    """
    Loss and gradients of one training example.

    h is the mean of the input word vectors and, for PV-DM, the paragraph vector. With a weak label and
    `mix_alpha < 1` the loss is `mix_alpha * L_lm + (1 - mix_alpha) * L_cat`, where L_cat is the log-loss of the
    binary category head reading the same h. Negative samples are drawn from `rng`.
    """
    count = len(inputs) + (1 if paragraph is not None else 0)
    if count == 0:
        raise ValueError("a training example needs at least one input vector")

    h = model.vectors[inputs].sum(axis=0) if len(inputs) else np.zeros(model.dim)
    if paragraph is not None:
        h = h + paragraph
    h = h / count

    output = output_gradient(model, h, target, rng)
    category = None
    loss = output.loss
    grad_h = output.grad_h

    if weak_label is not None and mix_alpha < 1.0:
        assert model.category_weights is not None and model.category_bias is not None
        category = full_softmax(h, weak_label, model.category_weights, model.category_bias).scaled(1.0 - mix_alpha)
        output = output.scaled(mix_alpha)
        loss = output.loss + category.loss
        grad_h = output.grad_h + category.grad_h

    grad_input = grad_h / count
    return ExampleGradient(
        loss=loss,
        inputs=inputs,
        grad_input=grad_input,
        grad_paragraph=grad_input if paragraph is not None else None,
        output=output,
        category=category,
    )


def subtract_rows(matrix: np.ndarray, rows: np.ndarray, delta: np.ndarray, unique: bool) -> None:
    """
    `matrix[rows] -= delta`, accumulating over repeated rows.

    `delta` is one row per entry of `rows`, or a single row applied to each of them. Fancy-index assignment keeps
    only the last write to a repeated row, so repeats go through the slower `np.add.at`.
    """
    if unique:
        matrix[rows] -= delta
    else:
        np.add.at(matrix, rows, -delta)


def _apply_output(weights: np.ndarray, bias: Optional[np.ndarray], gradient: OutputGradient, rate: float) -> None:
    delta = np.outer(rate * gradient.error, gradient.h)
    if gradient.rows is None:
        weights -= delta
    else:
        subtract_rows(weights, gradient.rows, delta, gradient.unique_rows)
    if gradient.grad_bias is not None and bias is not None:
        bias -= rate * gradient.grad_bias


def apply_gradient(
    model: EmbeddingModel,
    example: ExampleGradient,
    rate: float,
    paragraph: Optional[np.ndarray] = None,
    update_model: bool = True,
) -> None:
    """Take one SGD step. With `update_model=False` only the paragraph vector moves."""
    if paragraph is not None and example.grad_paragraph is not None:
        paragraph -= rate * example.grad_paragraph
    if not update_model:
        return

    assert model.output_weights is not None
    _apply_output(model.output_weights, model.output_bias, example.output, rate)
    if example.category is not None:
        assert model.category_weights is not None
        _apply_output(model.category_weights, model.category_bias, example.category, rate)
    inputs = example.inputs
    if len(inputs):
        unique = len(inputs) == 1 or len(set(inputs.tolist())) == len(inputs)
        subtract_rows(model.vectors, inputs, rate * example.grad_input, unique)


def initialize_model(
    vocabulary: Vocabulary, config: TrainingConfig, kind: ModelKind, rng: np.random.Generator
) -> EmbeddingModel:
    """
    Fresh parameters: word vectors uniform in [-0.5/d, 0.5/d], output parameters (and category head) zero.

    Raises
    ------
    ConfigurationError
        For full softmax over more than 1,000 words, or negative sampling over a single word.
    """
    size, dim = len(vocabulary), config.dim
    if config.output == OutputLayer.full_softmax and size > FULL_SOFTMAX_MAX_VOCABULARY:
        raise ConfigurationError(
            f"full softmax is limited to {FULL_SOFTMAX_MAX_VOCABULARY} words; the vocabulary has {size}"
        )
    if config.output == OutputLayer.negative_sampling and size < 2:
        raise ConfigurationError("negative sampling needs a vocabulary of at least two words")

    if config.output == OutputLayer.hierarchical_softmax:
        vocabulary = vocabulary.with_huffman()

    vectors = (rng.random((size, dim)) - 0.5) / dim
    output_bias = None
    if config.output == OutputLayer.hierarchical_softmax:
        output_weights = np.zeros((max(size - 1, 0), dim))
    else:
        output_weights = np.zeros((size, dim))
        if config.output == OutputLayer.full_softmax:
            output_bias = np.zeros(size)

    category_weights = category_bias = None
    if kind == ModelKind.category_specific:
        category_weights = np.zeros((2, dim))
        category_bias = np.zeros(2)

    return EmbeddingModel(
        vocabulary,
        vectors,
        config,
        kind,
        output_weights=output_weights,
        output_bias=output_bias,
        category_weights=category_weights,
        category_bias=category_bias,
    )


def window_context(ids: np.ndarray, position: int, radius: int) -> np.ndarray:
    """Word ids within `radius` positions of `position`, excluding the position itself."""
    return np.concatenate((ids[max(0, position - radius) : position], ids[position + 1 : position + 1 + radius]))


@dataclass
class _Document:
    ids: np.ndarray
    paragraph: Optional[int] = None
    weak_label: Optional[int] = None


class _Schedule:
    """Linear learning-rate decay over all scheduled positions, shared by the worker threads."""

    def __init__(self, config: TrainingConfig, total_positions: int):
        self.initial = config.initial_learning_rate
        self.minimum = config.minimum_learning_rate
        self.total = max(total_positions, 1)
        self.processed = 0
        self.loss = 0.0
        self.examples = 0
        self.lock = threading.Lock()

    def rate(self, offset: int = 0) -> float:
        progress = (self.processed + offset) / self.total
        return max(self.initial - (self.initial - self.minimum) * progress, self.minimum)

    def advance(self, positions: int, loss: float, examples: int) -> None:
        with self.lock:
            self.processed += positions
            self.loss += loss
            self.examples += examples

    def take_epoch_loss(self) -> float:
        with self.lock:
            average = self.loss / self.examples if self.examples else float("nan")
            self.loss, self.examples = 0.0, 0
        return average


class _Trainer:
    def __init__(
        self,
        model: EmbeddingModel,
        documents: list[_Document],
        paragraphs: Optional[np.ndarray] = None,
        mix_alpha: float = 1.0,
    ):
        assert model.config is not None
        self.model = model
        self.config = model.config
        self.documents = documents
        self.paragraphs = paragraphs
        self.mix_alpha = mix_alpha
        self.keep = None
        if self.config.subsample:
            self.keep = model.vocabulary.keep_probabilities(self.config.subsample_threshold)
        self.schedule = _Schedule(self.config, self.config.epochs * sum(len(doc.ids) for doc in documents))

    def train(self, rng: np.random.Generator) -> EmbeddingModel:
        workers = self.config.workers
        worker_rngs = [rng] if workers == 1 else rng.spawn(workers)

        for epoch in range(self.config.epochs):
            start = time.time_ns()
            if workers == 1:
                self._train_shard(self.documents, rng)
            else:
                with ThreadPoolExecutor(max_workers=workers) as pool:
                    shards = [self.documents[i::workers] for i in range(workers)]
                    list(pool.map(self._train_shard, shards, worker_rngs))

            loss = self.schedule.take_epoch_loss()
            self.model.epoch_losses.append(loss)
            log_record(
                LogType.training_epoch,
                start,
                model_kind=self.model.kind.value,
                epoch=epoch + 1,
                loss=loss,
                learning_rate=self.schedule.rate(),
            )
        return self.model

    def _train_shard(self, documents: Sequence[_Document], rng: np.random.Generator) -> None:
        for document in documents:
            ids = document.ids
            if self.keep is not None:
                ids = ids[rng.random(len(ids)) < self.keep[ids]]
            loss, examples = self._train_document(document, ids, rng)
            self.schedule.advance(len(document.ids), loss, examples)

    def _train_document(self, document: _Document, ids: np.ndarray, rng: np.random.Generator) -> tuple[float, int]:
        model, window = self.model, self.config.window
        paragraph = self.paragraphs[document.paragraph] if document.paragraph is not None else None
        skipgram = paragraph is None and self.config.architecture == Architecture.skipgram

        loss, examples = 0.0, 0
        radii = rng.integers(1, window + 1, size=len(ids))
        for position, target in enumerate(ids):
            rate = self.schedule.rate(position)
            context = window_context(ids, position, int(radii[position]))

            if skipgram:
                centre = ids[position : position + 1]
                for word in context:
                    example = example_gradient(
                        model, centre, int(word), rng, weak_label=document.weak_label, mix_alpha=self.mix_alpha
                    )
                    apply_gradient(model, example, rate)
                    loss += example.loss
                    examples += 1
                continue

            if len(context) == 0 and paragraph is None:
                continue
            example = example_gradient(
                model,
                context,
                int(target),
                rng,
                paragraph=paragraph,
                weak_label=document.weak_label,
                mix_alpha=self.mix_alpha,
            )
            apply_gradient(model, example, rate, paragraph=paragraph)
            loss += example.loss
            examples += 1
        return loss, examples


def _documents(corpus: Iterable[Sentence], vocabulary: Vocabulary) -> tuple[list[Sentence], list[_Document]]:
    sentences = list(corpus)
    documents = [_Document(vocabulary.indices(sentence.tokens)) for sentence in sentences]
    if not sentences or not any(len(document.ids) for document in documents):
        raise EmptyCorpusError(f"no in-vocabulary tokens in a corpus of {len(sentences)} sentences")
    return sentences, documents


def train_word2vec(corpus: Iterable[Sentence], vocabulary: Vocabulary, config: TrainingConfig) -> EmbeddingModel:
    """
    Train word embeddings by SGD on the CBOW or skip-gram objective with the configured output layer.

    Raises
    ------
    EmptyCorpusError
        If the corpus has no in-vocabulary tokens.
    """
    _, documents = _documents(corpus, vocabulary)
    rng = np.random.default_rng(config.seed)
    model = initialize_model(vocabulary, config, ModelKind.word2vec, rng)
    logger.info(
        "training %s/%s word2vec on %i sentences, vocabulary %i, dim %i",
        config.architecture.value,
        config.output.value,
        len(documents),
        len(vocabulary),
        config.dim,
    )
    return _Trainer(model, documents).train(rng)


def paragraph_key(sentence: Sentence, position: int) -> str:
    return sentence.source_id or f"#{position}"


def train_pvdm(
    corpus: Iterable[Sentence], vocabulary: Vocabulary, config: TrainingConfig
) -> tuple[EmbeddingModel, ParagraphTable]:
    """
    Train PV-DM: word vectors and one paragraph vector per distinct sentence source id, jointly.

    h is the mean of the paragraph vector and the context word vectors; both matrices are updated. Sentences sharing
    a source id share a paragraph row; sentences without one are keyed by corpus position ("#0", "#1", ...).
    """
    sentences, documents = _documents(corpus, vocabulary)
    if config.architecture == Architecture.skipgram:
        logger.warning("PV-DM always averages context and paragraph vectors; ignoring architecture=skipgram")

    id_map: dict[str, int] = {}
    for position, (sentence, document) in enumerate(zip(sentences, documents)):
        document.paragraph = id_map.setdefault(paragraph_key(sentence, position), len(id_map))

    rng = np.random.default_rng(config.seed)
    model = initialize_model(vocabulary, config, ModelKind.paragraph, rng)
    paragraphs = (rng.random((len(id_map), config.dim)) - 0.5) / config.dim
    logger.info("training PV-DM on %i paragraphs, vocabulary %i, dim %i", len(id_map), len(vocabulary), config.dim)

    _Trainer(model, documents, paragraphs=paragraphs).train(rng)
    return model, ParagraphTable(paragraphs, id_map)


def infer_paragraph_vector(
    model: EmbeddingModel,
    table: ParagraphTable,
    sentence: Sentence,
    steps: int = DEFAULT_INFERENCE_STEPS,
    learning_rate: float = DEFAULT_INFERENCE_LEARNING_RATE,
    seed: Seed = None,
) -> np.ndarray:
    """
    Infer a paragraph vector for an unseen sentence with all trained parameters frozen.

    A fresh vector is drawn from an RNG seeded with `seed` (the model's training seed by default) and updated for
    `steps` passes over the sentence at a fixed learning rate. Word vectors and output parameters are not modified.
    """
    if model.kind != ModelKind.paragraph or model.config is None:
        raise ModelMismatchError(f"paragraph vector inference needs a PV-DM model, got {model.kind.value}")
    if table.dim != model.dim:
        raise DimensionMismatchError(f"paragraph table has dimension {table.dim}, model has {model.dim}")

    ids = model.vocabulary.indices(sentence.tokens)
    if len(ids) == 0:
        raise OutOfVocabularyError(f"sentence {sentence.source_id!r} has no in-vocabulary tokens")

    rng = np.random.default_rng(model.config.seed if seed is None else seed)
    vector = (rng.random(model.dim) - 0.5) / model.dim
    window = model.config.window

    for _ in range(steps):
        for position, target in enumerate(ids):
            radius = int(rng.integers(1, window + 1))
            context = window_context(ids, position, radius)
            example = example_gradient(model, context, int(target), rng, paragraph=vector)
            apply_gradient(model, example, learning_rate, paragraph=vector, update_model=False)
    return vector


def weak_labels(corpus: Sequence[Sentence], lexicon: CuewordLexicon) -> np.ndarray:
    """1 for sentences containing a cueword phrase, 0 otherwise."""
    return np.array([1 if lexicon.matches(sentence) else 0 for sentence in corpus], dtype=np.int64)


def train_bswe(
    corpus: Iterable[Sentence],
    vocabulary: Vocabulary,
    lexicon: CuewordLexicon,
    mix_alpha: float = DEFAULT_MIX_ALPHA,
    config: Optional[TrainingConfig] = None,
) -> EmbeddingModel:
    """
    Train category-specific word embeddings.

    Each sentence gets a weak binary label (contains a cueword of `lexicon` or not). SGD runs on
    `mix_alpha * L_lm + (1 - mix_alpha) * L_cat`, where L_lm is the word2vec loss and L_cat the log-loss of a linear
    softmax head predicting the weak label from the same projection h. `mix_alpha == 1` reproduces `train_word2vec`
    exactly for the same seed.

    Raises
    ------
    DegenerateLabelsError
        If the lexicon matches none or all of the sentences.
    """
    if not 0.0 <= mix_alpha <= 1.0:
        raise ConfigurationError(f"mix_alpha must lie in [0, 1], got {mix_alpha}")
    config = config or TrainingConfig()

    sentences, documents = _documents(corpus, vocabulary)
    labels = weak_labels(sentences, lexicon)
    positives = int(labels.sum())
    if positives == 0 or positives == len(labels):
        raise DegenerateLabelsError(
            f"cueword lexicon for {lexicon.category} matches {positives} of {len(labels)} sentences; "
            "weak labels need both classes"
        )
    for document, label in zip(documents, labels):
        document.weak_label = int(label)

    rng = np.random.default_rng(config.seed)
    model = initialize_model(vocabulary, config, ModelKind.category_specific, rng)
    logger.info(
        "training %s-specific embeddings on %i sentences (%i cueword sentences), mix_alpha=%g",
        lexicon.category,
        len(documents),
        positives,
        mix_alpha,
    )
    return _Trainer(model, documents, mix_alpha=mix_alpha).train(rng)


def category_probability(model: EmbeddingModel, sentence: Sentence) -> float:
    """Probability the category head assigns to the cueword class, reading the sentence's mean word vector."""
    if model.kind != ModelKind.category_specific or model.category_weights is None or model.category_bias is None:
        raise ModelMismatchError(f"no category head on a {model.kind.value} model")
    ids = model.vocabulary.indices(sentence.tokens)
    if len(ids) == 0:
        raise OutOfVocabularyError(f"sentence {sentence.source_id!r} has no in-vocabulary tokens")
    h = model.vectors[ids].mean(axis=0)
    return float(softmax(model.category_bias + model.category_weights @ h)[1])
