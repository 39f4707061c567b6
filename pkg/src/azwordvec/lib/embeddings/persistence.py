"""
Saving and loading embedding models.

Two formats are supported:

- the word2vec text format (`V d` header, then `word v1 ... vd` per line, 6 decimals), which carries the input word
  vectors only and is what other tools exchange;
- a numpy `.npz` archive carrying everything needed to resume work with a model: word vectors, output parameters,
  the category head, the paragraph table and a JSON metadata entry (model kind, training configuration, vocabulary
  words and counts, paragraph ids, epoch losses).
"""

import json
import logging
import os
from typing import Optional, Union

import numpy as np

from azwordvec.lib.embeddings.model import EmbeddingModel, ParagraphTable
from azwordvec.lib.validation.exceptions import ValidationError
from azwordvec.lib.vocabulary import Vocabulary
from azwordvec.models.enums.embedding import ModelKind, OutputLayer
from azwordvec.view_models.training_config import TrainingConfig

logger = logging.getLogger(__name__)

PathLike = Union[str, "os.PathLike[str]"]

METADATA_KEY = "metadata"
ARRAY_KEYS = ("vectors", "output_weights", "output_bias", "category_weights", "category_bias", "paragraphs")


def save_word2vec_text(model: EmbeddingModel, path: PathLike) -> None:
    with open(path, "w", encoding="utf-8") as vector_file:
        vector_file.write(f"{len(model.vocabulary)} {model.dim}\n")
        for word, row in zip(model.vocabulary.words, model.vectors):
            vector_file.write(word + " " + " ".join(f"{value:.6f}" for value in row) + "\n")


def load_word2vec_text(path: PathLike) -> EmbeddingModel:
    """
    Read vectors in the word2vec text format into a vectors-only model.

    Raises
    ------
    ValidationError
        If the header is malformed, a row has the wrong number of values, a value is not a number, a word repeats,
        or the number of rows disagrees with the header.
    """
    with open(path, encoding="utf-8") as vector_file:
        header = vector_file.readline().split()
        if len(header) != 2 or not all(part.isdigit() for part in header):
            raise ValidationError("line 1: expected a `V d` header of two integers", custom_loc=("line", 1))
        size, dim = int(header[0]), int(header[1])

        words: list[str] = []
        vectors = np.zeros((size, dim))
        for line_number, line in enumerate(vector_file, start=2):
            fields = line.split()
            if not fields:
                continue
            if len(words) == size:
                raise ValidationError(f"line {line_number}: more than the {size} rows the header announces")
            if len(fields) != dim + 1:
                raise ValidationError(
                    f"line {line_number}: expected a word and {dim} values, found {len(fields) - 1} values",
                    custom_loc=("line", line_number),
                )
            try:
                vectors[len(words)] = [float(value) for value in fields[1:]]
            except ValueError as e:
                raise ValidationError(f"line {line_number}: {e}", triggers=[e], custom_loc=("line", line_number))
            words.append(fields[0])

    if len(words) != size:
        raise ValidationError(f"the header announces {size} rows but the file has {len(words)}")
    if len(set(words)) != len(words):
        raise ValidationError("the vector file lists a word more than once")

    logger.info("loaded %i vectors of dimension %i from %s", size, dim, os.fspath(path))
    return EmbeddingModel(Vocabulary.from_words(words), vectors, None, ModelKind.vectors)


def save_model(model: EmbeddingModel, path: PathLike, paragraphs: Optional[ParagraphTable] = None) -> None:
    """Write a model, and the paragraph table of a PV-DM model, to one `.npz` archive."""
    metadata = {
        "kind": model.kind.value,
        "config": model.config.json() if model.config is not None else None,
        "words": list(model.vocabulary.words),
        "counts": [int(count) for count in model.vocabulary.counts],
        "min_count": model.vocabulary.min_count,
        "paragraph_ids": sorted(paragraphs.id_map, key=paragraphs.id_map.__getitem__) if paragraphs else None,
        "epoch_losses": model.epoch_losses,
    }
    arrays = {
        "vectors": model.vectors,
        "output_weights": model.output_weights,
        "output_bias": model.output_bias,
        "category_weights": model.category_weights,
        "category_bias": model.category_bias,
        "paragraphs": paragraphs.vectors if paragraphs is not None else None,
    }
    present = {key: value for key, value in arrays.items() if value is not None}

    with open(path, "wb") as model_file:
        np.savez(model_file, **present, **{METADATA_KEY: np.array(json.dumps(metadata))})
    logger.info("saved %r to %s", model, os.fspath(path))


def load_model(path: PathLike) -> tuple[EmbeddingModel, Optional[ParagraphTable]]:
    """
    Read a model written by `save_model`. The paragraph table is None unless the model is PV-DM.

    Raises
    ------
    ValidationError
        If the archive has no metadata entry.
    """
    with np.load(path, allow_pickle=False) as archive:
        if METADATA_KEY not in archive.files:
            raise ValidationError(f"{os.fspath(path)} is not a saved embedding model")
        metadata = json.loads(str(archive[METADATA_KEY]))
        arrays = {key: archive[key] for key in ARRAY_KEYS if key in archive.files}

    config = TrainingConfig.parse_raw(metadata["config"]) if metadata["config"] else None
    vocabulary = Vocabulary(metadata["words"], metadata["counts"], metadata["min_count"])
    if config is not None and config.output == OutputLayer.hierarchical_softmax:
        vocabulary = vocabulary.with_huffman()

    model = EmbeddingModel(
        vocabulary,
        arrays["vectors"],
        config,
        ModelKind(metadata["kind"]),
        output_weights=arrays.get("output_weights"),
        output_bias=arrays.get("output_bias"),
        category_weights=arrays.get("category_weights"),
        category_bias=arrays.get("category_bias"),
        epoch_losses=list(metadata["epoch_losses"]),
    )

    paragraphs = None
    if metadata["paragraph_ids"] is not None and "paragraphs" in arrays:
        id_map = {source_id: row for row, source_id in enumerate(metadata["paragraph_ids"])}
        paragraphs = ParagraphTable(arrays["paragraphs"], id_map)
    return model, paragraphs
