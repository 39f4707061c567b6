import logging
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np
import pandas as pd

from azwordvec.lib.embeddings.model import EmbeddingModel, ParagraphTable
from azwordvec.lib.embeddings.training import infer_paragraph_vector
from azwordvec.lib.exceptions import DimensionMismatchError, ModelMismatchError
from azwordvec.lib.logging import LogType, log_record
from azwordvec.lib.validation.corpus import validate_category
from azwordvec.lib.validation.exceptions import ValidationError
from azwordvec.models.enums.category import Category
from azwordvec.models.enums.embedding import ModelKind
from azwordvec.models.enums.evaluation import SentenceVectorMethod
from azwordvec.models.sentence import LabeledSentence, Sentence
from azwordvec.view_models.evaluation import VectorizerConfig

logger = logging.getLogger(__name__)

PathLike = Union[str, "os.PathLike[str]"]

# Model kinds each method accepts. Vectors read from a text file stand in for either averaging method.
ACCEPTED_MODEL_KINDS = {
    SentenceVectorMethod.avgwvec: {ModelKind.word2vec, ModelKind.vectors},
    SentenceVectorMethod.bswe: {ModelKind.category_specific, ModelKind.vectors},
    SentenceVectorMethod.paravec: {ModelKind.paragraph},
}


@dataclass
class FeatureMatrix:
    """
    Sentence vectors with their gold labels.

    `provenance[i]` is the dataset row that row i came from (for synthetic rows, the row of the seed it was
    interpolated from) and `synthetic[i]` marks rows created by oversampling.
    """

    rows: np.ndarray
    labels: list[Category]
    method: Optional[SentenceVectorMethod] = None
    zero_rows: list[int] = field(default_factory=list)
    provenance: np.ndarray = None  # type: ignore[assignment]
    synthetic: np.ndarray = None  # type: ignore[assignment]

    def __post_init__(self):
        if self.rows.ndim != 2:
            raise ValueError(f"feature rows must form a matrix, got shape {self.rows.shape}")
        if len(self.rows) != len(self.labels):
            raise ValueError(f"{len(self.rows)} feature rows for {len(self.labels)} labels")
        if self.provenance is None:
            self.provenance = np.arange(len(self.rows), dtype=np.int64)
        if self.synthetic is None:
            self.synthetic = np.zeros(len(self.rows), dtype=bool)

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def dim(self) -> int:
        return int(self.rows.shape[1])

    def subset(self, indices: Sequence[int]) -> "FeatureMatrix":
        """Rows at `indices`, in that order. Provenance and synthetic flags travel with their rows."""
        index = np.asarray(indices, dtype=np.int64)
        kept = set(int(i) for i in index)
        return FeatureMatrix(
            self.rows[index],
            [self.labels[i] for i in index],
            self.method,
            [i for i in self.zero_rows if i in kept],
            self.provenance[index],
            self.synthetic[index],
        )


def avg_sentence_vector(model: EmbeddingModel, sentence: Sentence) -> np.ndarray:
    """Mean input vector of the sentence's in-vocabulary tokens; the zero vector if there are none."""
    ids = model.vocabulary.indices(sentence.tokens)
    if len(ids) == 0:
        return np.zeros(model.dim)
    return model.vectors[ids].mean(axis=0)


def _check_model(model: EmbeddingModel, method: SentenceVectorMethod) -> None:
    if model.kind not in ACCEPTED_MODEL_KINDS[method]:
        accepted = ", ".join(sorted(kind.value for kind in ACCEPTED_MODEL_KINDS[method]))
        raise ModelMismatchError(f"{method.value} sentence vectors need a {accepted} model, got {model.kind.value}")


def vectorize_dataset(
    model: EmbeddingModel,
    data: Sequence[LabeledSentence],
    method: SentenceVectorMethod = SentenceVectorMethod.avgwvec,
    paravec_steps: int = 50,
    paragraphs: Optional[ParagraphTable] = None,
    config: Optional[VectorizerConfig] = None,
) -> FeatureMatrix:
    """
    Turn each labeled sentence into one feature row by the chosen method.

    AVGWVEC and BSWE average word vectors and differ only in the model supplied. PARAVEC infers a fresh paragraph
    vector per sentence with the model frozen; row i uses an RNG seeded from (seed, i), so the result does not
    depend on `workers`. Sentences with no in-vocabulary token become zero rows (averaging) and are listed in
    `zero_rows`; they are kept so the dataset size is unchanged.

    Raises
    ------
    ModelMismatchError
        If the model kind does not match the method, or PARAVEC is asked for without a paragraph table.
    """
    config = config or VectorizerConfig(method=method, paravec_steps=paravec_steps)
    method = config.method
    _check_model(model, method)
    if method == SentenceVectorMethod.paravec and paragraphs is None:
        raise ModelMismatchError("paravec sentence vectors need the PV-DM model's paragraph table")

    start = time.time_ns()
    rows = np.zeros((len(data), model.dim))
    zero_rows: list[int] = []

    if method == SentenceVectorMethod.paravec:
        assert paragraphs is not None and model.config is not None
        seed = config.seed if config.seed is not None else model.config.seed
        zero_rows = [i for i, record in enumerate(data) if len(model.vocabulary.indices(record.tokens)) == 0]
        empty = set(zero_rows)
        table, steps, rate = paragraphs, config.paravec_steps, config.paravec_learning_rate

        def infer(i: int) -> np.ndarray:
            sentence = data[i].sentence
            return infer_paragraph_vector(model, table, sentence, steps=steps, learning_rate=rate, seed=[seed, i])

        todo = [i for i in range(len(data)) if i not in empty]
        if config.workers > 1:
            with ThreadPoolExecutor(max_workers=config.workers) as pool:
                inferred = list(pool.map(infer, todo))
        else:
            inferred = [infer(i) for i in todo]
        for i, vector in zip(todo, inferred):
            rows[i] = vector
    else:
        for i, record in enumerate(data):
            ids = model.vocabulary.indices(record.tokens)
            if len(ids) == 0:
                zero_rows.append(i)
            else:
                rows[i] = model.vectors[ids].mean(axis=0)

    if zero_rows:
        logger.warning("%i of %i sentences have no in-vocabulary tokens; using zero vectors", len(zero_rows), len(data))
    log_record(LogType.vectorization, start, config=method.value, rows=len(data), zero_rows=len(zero_rows))
    return FeatureMatrix(rows, [record.category for record in data], method, zero_rows)


def save_feature_matrix(features: FeatureMatrix, path: PathLike) -> None:
    """Write `LABEL<TAB>v1<TAB>...<TAB>vd` per row, 6 decimals."""
    frame = pd.DataFrame(features.rows)
    frame.insert(0, "label", [category.value for category in features.labels])
    frame.to_csv(path, sep="\t", header=False, index=False, float_format="%.6f")


def load_feature_matrix(path: PathLike, dim: Optional[int] = None) -> FeatureMatrix:
    """
    Read a feature TSV written by `save_feature_matrix`.

    Raises
    ------
    ValidationError
        On an unknown label or a non-numeric value.
    DimensionMismatchError
        If `dim` is given and the rows have a different width.
    """
    try:
        frame = pd.read_csv(path, sep="\t", header=None, dtype={0: str})
    except pd.errors.EmptyDataError:
        return FeatureMatrix(np.zeros((0, dim or 0)), [])

    labels = [validate_category(label, line_number) for line_number, label in enumerate(frame[0], start=1)]
    values = frame.drop(columns=0)
    try:
        rows = values.to_numpy(dtype=np.float64)
    except ValueError as e:
        raise ValidationError(f"non-numeric feature value in {os.fspath(path)}: {e}", triggers=[e])
    if not np.isfinite(rows).all():
        raise ValidationError(f"missing or non-finite feature values in {os.fspath(path)}")
    if dim is not None and rows.shape[1] != dim:
        raise DimensionMismatchError(f"feature rows have dimension {rows.shape[1]}, expected {dim}")
    return FeatureMatrix(rows, labels)
