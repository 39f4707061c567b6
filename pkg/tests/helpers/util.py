from typing import Callable, Iterable, Mapping

import numpy as np

from azwordvec.lib.corpus import tokenize
from azwordvec.lib.vocabulary import Vocabulary
from azwordvec.models.enums.category import Category
from azwordvec.models.sentence import LabeledSentence, Sentence

from tests.helpers.constants import INTERCHANGEABLE_SENTENCES


def write_lines(path, lines: Iterable[str]) -> str:
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return str(path)


def sentence(text: str, source_id: str = "") -> Sentence:
    return Sentence.of(tokenize(text), source_id)


def interchangeable_corpus(repeats: int = 500) -> list[Sentence]:
    """b and c occur in identical contexts."""
    return [sentence(text) for _ in range(repeats) for text in INTERCHANGEABLE_SENTENCES]


def numbered_vocabulary(size: int) -> Vocabulary:
    return Vocabulary([f"w{i}" for i in range(size)], list(range(size * 3, size * 2, -1)), min_count=1)


def class_words(category: Category, count: int = 10) -> list[str]:
    return [f"{category.value.lower()}{i}" for i in range(count)]


def disjoint_vocabulary_dataset(
    counts: Mapping[Category, int], length: int = 8, words_per_class: int = 10, seed: int = 0
) -> list[LabeledSentence]:
    """Labelled sentences drawn from one private vocabulary per category, interleaved at random."""
    rng = np.random.default_rng(seed)
    records = []
    for category, count in counts.items():
        words = class_words(category, words_per_class)
        for i in range(count):
            tokens = rng.choice(words, size=length).tolist()
            records.append(LabeledSentence(Sentence.of(tokens, f"{category.value}:{i}"), category))
    order = rng.permutation(len(records))
    return [records[i] for i in order]


def marker_corpus(positives: int, negatives: int, seed: int, marker: str = "m") -> tuple[list[Sentence], list[int]]:
    """Three filler words plus a marker word for positives, four filler words for negatives."""
    rng = np.random.default_rng(seed)
    fillers = [f"f{i}" for i in range(20)]
    sentences, labels = [], []
    for i in range(positives + negatives):
        positive = i < positives
        tokens = rng.choice(fillers, size=3 if positive else 4).tolist()
        if positive:
            tokens.insert(int(rng.integers(0, 4)), marker)
        sentences.append(Sentence.of(tokens, f"s{seed}:{i}"))
        labels.append(1 if positive else 0)
    order = rng.permutation(len(sentences))
    return [sentences[i] for i in order], [labels[i] for i in order]


def numeric_gradient(loss: Callable[[], float], array: np.ndarray, eps: float = 1e-6) -> np.ndarray:
    """Central finite differences of `loss()` with respect to every entry of `array`, perturbed in place."""
    gradient = np.zeros_like(array)
    for index in np.ndindex(array.shape):
        original = array[index]
        array[index] = original + eps
        plus = loss()
        array[index] = original - eps
        minus = loss()
        array[index] = original
        gradient[index] = (plus - minus) / (2 * eps)
    return gradient


def relative_error(analytic: np.ndarray, numeric: np.ndarray) -> float:
    scale = np.linalg.norm(analytic) + np.linalg.norm(numeric)
    return float(np.linalg.norm(analytic - numeric) / scale) if scale > 0 else 0.0


def cosine(a: np.ndarray, b: np.ndarray) -> float:
    return float(a @ b / (np.linalg.norm(a) * np.linalg.norm(b)))
