from unittest import TestCase

import numpy as np
import pytest

from azwordvec.lib.embeddings.model import EmbeddingModel
from azwordvec.lib.embeddings.training import train_pvdm
from azwordvec.lib.exceptions import DimensionMismatchError, ModelMismatchError
from azwordvec.lib.sentvec import (
    FeatureMatrix,
    avg_sentence_vector,
    load_feature_matrix,
    save_feature_matrix,
    vectorize_dataset,
)
from azwordvec.lib.validation.exceptions import ValidationError
from azwordvec.lib.vocabulary import Vocabulary, build_vocabulary
from azwordvec.models.enums.category import Category
from azwordvec.models.enums.embedding import ModelKind
from azwordvec.models.enums.evaluation import SentenceVectorMethod
from azwordvec.models.sentence import LabeledSentence, Sentence
from azwordvec.view_models.evaluation import VectorizerConfig
from azwordvec.view_models.training_config import TrainingConfig

from tests.helpers.util import sentence, write_lines


def fixed_model(kind: ModelKind = ModelKind.vectors) -> EmbeddingModel:
    vocabulary = Vocabulary.from_words(["a", "b", "c"])
    vectors = np.array([[1.0, 0.0], [0.0, 2.0], [3.0, 3.0]])
    return EmbeddingModel(vocabulary, vectors, None, kind)


def labeled(text: str, category: Category = Category.OWN, source_id: str = "") -> LabeledSentence:
    return LabeledSentence(sentence(text, source_id), category)


class TestAverageVectors(TestCase):
    def test_mean_of_in_vocabulary_words(self):
        np.testing.assert_allclose(avg_sentence_vector(fixed_model(), sentence("a b zzz")), [0.5, 1.0])

    def test_repeated_words_count_every_time(self):
        np.testing.assert_allclose(avg_sentence_vector(fixed_model(), sentence("a a b")), [2 / 3, 2 / 3])

    def test_unknown_sentence_is_the_zero_vector(self):
        np.testing.assert_array_equal(avg_sentence_vector(fixed_model(), sentence("x y")), [0.0, 0.0])


def test_vectorize_dataset_lists_zero_rows():
    data = [labeled("a c", Category.AIM), labeled("unknown words", Category.BAS), labeled("b")]
    features = vectorize_dataset(fixed_model(), data)

    assert features.labels == [Category.AIM, Category.BAS, Category.OWN]
    assert features.zero_rows == [1]
    assert features.method == SentenceVectorMethod.avgwvec
    np.testing.assert_allclose(features.rows, [[2.0, 1.5], [0.0, 0.0], [0.0, 2.0]])


def test_bswe_method_averages_a_category_model():
    features = vectorize_dataset(fixed_model(ModelKind.category_specific), [labeled("a b")], SentenceVectorMethod.bswe)
    np.testing.assert_allclose(features.rows, [[0.5, 1.0]])


@pytest.mark.parametrize(
    "kind,method",
    [
        (ModelKind.paragraph, SentenceVectorMethod.avgwvec),
        (ModelKind.word2vec, SentenceVectorMethod.bswe),
        (ModelKind.word2vec, SentenceVectorMethod.paravec),
        (ModelKind.vectors, SentenceVectorMethod.paravec),
    ],
)
def test_mismatched_model_kind(kind, method):
    with pytest.raises(ModelMismatchError):
        vectorize_dataset(fixed_model(kind), [labeled("a")], method)


@pytest.fixture(scope="module")
def pvdm():
    corpus = [sentence(text, str(i)) for i, text in enumerate(["a b c d", "d c b a", "b a d c", "c d a b"] * 5)]
    vocabulary = build_vocabulary(corpus, min_count=1)
    config = TrainingConfig(dim=6, window=2, min_count=1, epochs=3, workers=1, seed=31)
    return train_pvdm(corpus, vocabulary, config)


def test_paravec_needs_the_paragraph_table(pvdm):
    model, _ = pvdm
    with pytest.raises(ModelMismatchError):
        vectorize_dataset(model, [labeled("a b")], SentenceVectorMethod.paravec)


def test_paravec_rows_do_not_depend_on_workers(pvdm):
    model, table = pvdm
    data = [labeled("a b c"), labeled("zzz"), labeled("d a", Category.CTR), labeled("c c b")]

    single = vectorize_dataset(
        model, data, paragraphs=table, config=VectorizerConfig(method=SentenceVectorMethod.paravec, paravec_steps=5)
    )
    threaded = vectorize_dataset(
        model,
        data,
        paragraphs=table,
        config=VectorizerConfig(method=SentenceVectorMethod.paravec, paravec_steps=5, workers=3),
    )

    np.testing.assert_array_equal(single.rows, threaded.rows)
    assert single.zero_rows == [1]
    np.testing.assert_array_equal(single.rows[1], np.zeros(6))
    assert not np.array_equal(single.rows[0], single.rows[3])


def test_paravec_leaves_the_model_unchanged(pvdm):
    model, table = pvdm
    checksum = model.checksum()
    vectorize_dataset(model, [labeled("a b c d")], SentenceVectorMethod.paravec, paravec_steps=3, paragraphs=table)
    assert model.checksum() == checksum


def test_feature_matrix_subset_keeps_provenance():
    features = FeatureMatrix(np.arange(8.0).reshape(4, 2), [Category.AIM, Category.OWN, Category.BAS, Category.OWN])
    features.zero_rows = [2]
    subset = features.subset([2, 0])

    assert subset.labels == [Category.BAS, Category.AIM]
    np.testing.assert_array_equal(subset.provenance, [2, 0])
    np.testing.assert_array_equal(subset.rows, [[4.0, 5.0], [0.0, 1.0]])
    assert subset.zero_rows == [2]
    assert not subset.synthetic.any()


def test_feature_matrix_needs_one_label_per_row():
    with pytest.raises(ValueError):
        FeatureMatrix(np.zeros((2, 3)), [Category.AIM])


def test_saved_features_read_back(tmp_path):
    features = vectorize_dataset(fixed_model(), [labeled("a c", Category.TXT), labeled("b", Category.OTH)])
    path = tmp_path / "features.tsv"
    save_feature_matrix(features, path)
    loaded = load_feature_matrix(path, dim=2)

    assert path.read_text().splitlines()[0] == "TXT\t2.000000\t1.500000"
    assert loaded.labels == [Category.TXT, Category.OTH]
    np.testing.assert_allclose(loaded.rows, features.rows)


def test_features_with_unknown_label(tmp_path):
    path = write_lines(tmp_path / "features.tsv", ["AIM\t0.1\t0.2", "XYZ\t0.3\t0.4"])
    with pytest.raises(ValidationError, match="line 2"):
        load_feature_matrix(path)


def test_features_with_non_numeric_value(tmp_path):
    path = write_lines(tmp_path / "features.tsv", ["AIM\t0.1\tabc"])
    with pytest.raises(ValidationError):
        load_feature_matrix(path)


def test_features_of_the_wrong_dimension(tmp_path):
    path = write_lines(tmp_path / "features.tsv", ["AIM\t0.1\t0.2"])
    with pytest.raises(DimensionMismatchError):
        load_feature_matrix(path, dim=3)


def test_zero_step_paravec_rows_differ_for_identical_sentences(pvdm):
    model, table = pvdm
    data = [labeled("a b c"), labeled("a b c")]

    def rows(seed):
        config = VectorizerConfig(method=SentenceVectorMethod.paravec, paravec_steps=0, seed=seed)
        return vectorize_dataset(model, data, paragraphs=table, config=config).rows

    first, second = rows(1), rows(2)
    assert not np.array_equal(first[0], first[1])
    assert not np.array_equal(first[0], second[0])


def test_average_vectors_ignore_word_order():
    model = fixed_model()
    np.testing.assert_allclose(
        avg_sentence_vector(model, sentence("a b c b")), avg_sentence_vector(model, sentence("b c b a"))
    )


def test_average_vectors_lie_within_the_bounds_of_their_words():
    rng = np.random.default_rng(6)
    words = [f"w{i}" for i in range(20)]
    model = EmbeddingModel(Vocabulary.from_words(words), rng.normal(size=(20, 5)), None, ModelKind.vectors)
    data = [LabeledSentence(Sentence.of(rng.choice(words, size=6).tolist()), Category.OWN) for _ in range(30)]
    features = vectorize_dataset(model, data)

    for row, record in zip(features.rows, data):
        word_vectors = model.vectors[model.vocabulary.indices(record.tokens)]
        assert np.all(row >= word_vectors.min(axis=0) - 1e-12)
        assert np.all(row <= word_vectors.max(axis=0) + 1e-12)
