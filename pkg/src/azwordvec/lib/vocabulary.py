import heapq
import logging
from collections import Counter
from typing import Iterable, NamedTuple, Optional, Sequence

import numpy as np

from azwordvec.lib.exceptions import ConfigurationError, EmptyVocabularyError
from azwordvec.models.sentence import Sentence, Token

logger = logging.getLogger(__name__)

NOISE_POWER = 0.75


class Vocabulary:
    """
    Word -> (index, count) map with a minimum-count cutoff.

    Indices are dense, assigned by descending count with ties broken lexicographically, so the same corpus always
    yields the same vocabulary and Huffman tree. Instances are not modified after construction.
    """

    def __init__(
        self,
        words: Sequence[Token],
        counts: Sequence[int],
        min_count: int,
        codes: Optional[list[np.ndarray]] = None,
        points: Optional[list[np.ndarray]] = None,
    ):
        if len(words) != len(counts):
            raise ValueError("words and counts must have the same length")

        self.words: tuple[Token, ...] = tuple(words)
        self.counts = np.asarray(counts, dtype=np.int64)
        self.min_count = min_count
        self.index: dict[Token, int] = {word: i for i, word in enumerate(self.words)}
        self.total_tokens = int(self.counts.sum())

        # Per-word Huffman code bits and inner-node path, root first. Present only for hierarchical softmax.
        self.codes = codes
        self.points = points

        self._noise_table: Optional[np.ndarray] = None

    @classmethod
    def from_words(cls, words: Sequence[Token]) -> "Vocabulary":
        """A vocabulary without frequency information, e.g. for vectors read from a text file."""
        return cls(words, [1] * len(words), min_count=1)

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word: object) -> bool:
        return word in self.index

    def __repr__(self) -> str:
        return f"Vocabulary(size={len(self)}, min_count={self.min_count}, total_tokens={self.total_tokens})"

    @property
    def has_huffman(self) -> bool:
        return self.codes is not None

    def count(self, word: Token) -> int:
        return int(self.counts[self.index[word]])

    def indices(self, tokens: Iterable[Token]) -> np.ndarray:
        """Indices of the in-vocabulary tokens, in order. Out-of-vocabulary tokens are skipped."""
        return np.fromiter((self.index[t] for t in tokens if t in self.index), dtype=np.int64)

    def with_huffman(self) -> "Vocabulary":
        """Return this vocabulary with Huffman codes attached, building them if needed."""
        if self.has_huffman:
            return self
        codes, points = build_huffman_codes(self.counts)
        logger.info(
            "built huffman tree over %i words with maximum depth %i", len(self), max((len(c) for c in codes), default=0)
        )
        return Vocabulary(self.words, self.counts, self.min_count, codes, points)

    def noise_table(self) -> np.ndarray:
        """Cumulative unigram^0.75 distribution used to draw negative samples."""
        if self._noise_table is None:
            weights = self.counts.astype(np.float64) ** NOISE_POWER
            table = np.cumsum(weights / weights.sum())
            table[-1] = 1.0
            self._noise_table = table
        return self._noise_table

    def keep_probabilities(self, threshold: float) -> np.ndarray:
        """Probability of keeping each word when frequent words are subsampled with the given threshold."""
        scaled = threshold * self.total_tokens
        counts = self.counts.astype(np.float64)
        return np.minimum((np.sqrt(counts / scaled) + 1.0) * scaled / counts, 1.0)


def build_huffman_codes(counts: np.ndarray) -> tuple[list[np.ndarray], list[np.ndarray]]:
    """
    Build a binary Huffman tree over the given counts.

    Leaves are nodes 0..V-1 and inner nodes V..2V-2; the two lightest nodes are merged first, with ties broken by
    node number. The lighter child gets code bit 0. Each word's path lists the inner nodes (numbered 0..V-2) from the
    root down, so path length always equals code length. A single word gets an empty code.
    """
    vocab_size = len(counts)
    heap = [(int(count), node) for node, count in enumerate(counts)]
    heapq.heapify(heap)

    parent = np.zeros(max(2 * vocab_size - 1, 1), dtype=np.int64)
    binary = np.zeros(max(2 * vocab_size - 1, 1), dtype=np.uint8)
    for inner in range(vocab_size - 1):
        count1, node1 = heapq.heappop(heap)
        count2, node2 = heapq.heappop(heap)
        node = vocab_size + inner
        parent[node1] = node
        parent[node2] = node
        binary[node2] = 1
        heapq.heappush(heap, (count1 + count2, node))

    root = 2 * vocab_size - 2
    codes: list[np.ndarray] = []
    points: list[np.ndarray] = []
    for word in range(vocab_size):
        code, point = [], []
        node = word
        while node != root:
            code.append(binary[node])
            point.append(parent[node] - vocab_size)
            node = parent[node]
        codes.append(np.array(code[::-1], dtype=np.uint8))
        points.append(np.array(point[::-1], dtype=np.int64))
    return codes, points


def build_vocabulary(sentences: Iterable[Sentence], min_count: int, huffman: bool = False) -> Vocabulary:
    """
    Count the corpus and keep exactly the words that occur at least `min_count` times.

    Raises
    ------
    ConfigurationError
        If `min_count` is below 1.
    EmptyVocabularyError
        If no word reaches the cutoff.
    """
    if min_count < 1:
        raise ConfigurationError(f"min_count must be at least 1, got {min_count}")

    counter: Counter[Token] = Counter()
    sentence_count = 0
    for sentence in sentences:
        counter.update(sentence.tokens)
        sentence_count += 1

    retained = sorted(((word, count) for word, count in counter.items() if count >= min_count), key=_frequency_order)
    if not retained:
        raise EmptyVocabularyError(
            f"no word occurs at least {min_count} times in {sentence_count} sentences ({len(counter)} distinct words)"
        )

    words, counts = zip(*retained)
    vocabulary = Vocabulary(words, counts, min_count)
    logger.info(
        "collected %i word types from %i sentences; %i reach min_count=%i (%i of %i tokens retained)",
        len(counter),
        sentence_count,
        len(vocabulary),
        min_count,
        vocabulary.total_tokens,
        sum(counter.values()),
    )
    return vocabulary.with_huffman() if huffman else vocabulary


def _frequency_order(item: tuple[Token, int]) -> tuple[int, Token]:
    word, count = item
    return -count, word


class VocabularySummary(NamedTuple):
    dim: int
    vocabulary_size: int
    retained_tokens: int
    min_count: int


def vocabulary_summary(vocabulary: Vocabulary, dim: int) -> VocabularySummary:
    return VocabularySummary(dim, len(vocabulary), vocabulary.total_tokens, vocabulary.min_count)
