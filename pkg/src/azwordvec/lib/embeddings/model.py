import hashlib
import logging
from typing import Iterable, Optional

import numpy as np
from scipy.special import softmax

from azwordvec.lib.embeddings.objectives import hierarchical_softmax_distribution
from azwordvec.lib.exceptions import ConfigurationError, ModelMismatchError, OutOfVocabularyError
from azwordvec.lib.vocabulary import Vocabulary
from azwordvec.models.enums.embedding import ModelKind, OutputLayer
from azwordvec.models.sentence import Token
from azwordvec.view_models.training_config import TrainingConfig

logger = logging.getLogger(__name__)


class EmbeddingModel:
    """
    Input word vectors plus the output parameters they were trained against.

    `output_weights` holds U (V x d) for full softmax, the inner-node vectors ((V-1) x d) for hierarchical softmax,
    or per-word output vectors (V x d) for negative sampling; `output_bias` is b, present for full softmax only.
    Category-specific models also carry the binary category head (`category_weights` 2 x d, `category_bias` 2).
    Models loaded from the word2vec text format have vectors only.
    """

    def __init__(
        self,
        vocabulary: Vocabulary,
        vectors: np.ndarray,
        config: Optional[TrainingConfig],
        kind: ModelKind,
        output_weights: Optional[np.ndarray] = None,
        output_bias: Optional[np.ndarray] = None,
        category_weights: Optional[np.ndarray] = None,
        category_bias: Optional[np.ndarray] = None,
        epoch_losses: Optional[list[float]] = None,
    ):
        if vectors.shape[0] != len(vocabulary):
            raise ValueError(f"{vectors.shape[0]} vector rows for a vocabulary of {len(vocabulary)} words")

        self.vocabulary = vocabulary
        self.vectors = vectors
        self.config = config
        self.kind = kind
        self.output_weights = output_weights
        self.output_bias = output_bias
        self.category_weights = category_weights
        self.category_bias = category_bias
        self.epoch_losses: list[float] = epoch_losses if epoch_losses is not None else []

    @property
    def dim(self) -> int:
        return int(self.vectors.shape[1])

    @property
    def output(self) -> Optional[OutputLayer]:
        return self.config.output if self.config is not None else None

    def __contains__(self, word: object) -> bool:
        return word in self.vocabulary

    def __repr__(self) -> str:
        return f"EmbeddingModel(kind={self.kind.value}, vocabulary={len(self.vocabulary)}, dim={self.dim})"

    def index(self, word: Token) -> int:
        try:
            return self.vocabulary.index[word]
        except KeyError:
            raise OutOfVocabularyError(f"word {word!r} is not in the vocabulary")

    def vector(self, word: Token) -> np.ndarray:
        return self.vectors[self.index(word)]

    def checksum(self) -> str:
        """Digest of the input word vectors, for checking that they were not modified."""
        return hashlib.sha256(np.ascontiguousarray(self.vectors).tobytes()).hexdigest()


class ParagraphTable:
    """One trained vector per distinct training paragraph, keyed by the paragraph's source id."""

    def __init__(self, vectors: np.ndarray, id_map: dict[str, int]):
        if vectors.shape[0] != len(id_map):
            raise ValueError(f"{vectors.shape[0]} paragraph rows for {len(id_map)} paragraph ids")
        self.vectors = vectors
        self.id_map = id_map

    @property
    def dim(self) -> int:
        return int(self.vectors.shape[1])

    def __len__(self) -> int:
        return int(self.vectors.shape[0])

    def vector(self, source_id: str) -> np.ndarray:
        return self.vectors[self.id_map[source_id]]


def context_projection(model: EmbeddingModel, context: Iterable[Token]) -> np.ndarray:
    """Mean of the input vectors of the in-vocabulary context words."""
    ids = model.vocabulary.indices(context)
    if len(ids) == 0:
        raise OutOfVocabularyError("none of the context words are in the vocabulary")
    return model.vectors[ids].mean(axis=0)


def forward_predict(model: EmbeddingModel, context: Iterable[Token]) -> np.ndarray:
    """
    Probability of every vocabulary word given a context window under a full-softmax model.

    The projection h is the mean of the context input vectors, the un-normalized log probabilities are
    y = b + U h, and the result is softmax(y). Out-of-vocabulary context words are skipped.
    """
    if model.output != OutputLayer.full_softmax or model.output_weights is None or model.output_bias is None:
        raise ModelMismatchError("forward prediction needs a model trained with a full softmax output layer")

    h = context_projection(model, context)
    return softmax(model.output_bias + model.output_weights @ h)


def predict_distribution(model: EmbeddingModel, context: Iterable[Token]) -> np.ndarray:
    """
    Probability of every vocabulary word given a context window, for full or hierarchical softmax models.

    Under hierarchical softmax a word's probability is the product of the sigmoid decisions along its Huffman path.
    Negative-sampling models do not define a normalized distribution and are rejected.
    """
    if model.output == OutputLayer.full_softmax:
        return forward_predict(model, context)
    if model.output == OutputLayer.hierarchical_softmax and model.output_weights is not None:
        vocabulary = model.vocabulary.with_huffman()
        h = context_projection(model, context)
        return hierarchical_softmax_distribution(h, vocabulary.codes, vocabulary.points, model.output_weights)
    raise ModelMismatchError(f"no normalized output distribution for a {model.output} model")


def cosine_similarities(matrix: np.ndarray, query: np.ndarray) -> np.ndarray:
    norms = np.linalg.norm(matrix, axis=1) * np.linalg.norm(query)
    dots = matrix @ query
    return np.divide(dots, norms, out=np.zeros_like(dots), where=norms > 0)


def cosine(a: np.ndarray, b: np.ndarray) -> float:
    return float(cosine_similarities(a[np.newaxis, :], b)[0])


def nearest_neighbors(model: EmbeddingModel, word: Token, top_k: int = 10) -> list[tuple[Token, float]]:
    """
    The `top_k` words closest to `word` by cosine similarity of input vectors, most similar first.

    The query word itself is excluded and ties are broken by vocabulary index. Fewer than `top_k` entries are
    returned when the vocabulary is too small.
    """
    if top_k < 1:
        raise ConfigurationError(f"top_k must be at least 1, got {top_k}")

    query = model.index(word)
    similarities = cosine_similarities(model.vectors, model.vectors[query])
    order = np.lexsort((np.arange(len(similarities)), -similarities))
    neighbors = [i for i in order if i != query][:top_k]
    return [(model.vocabulary.words[i], float(similarities[i])) for i in neighbors]
