"""
Cueword lexicons and token-sequence phrase matching.

Two file formats are read here:

- a single-category cueword list, one lowercase phrase per line (used to derive weak labels for category-specific
  embeddings);
- a multi-category lexicon, `CATEGORY<TAB>phrase` per line (used by the cueword baseline classifier).

In both, blank lines and lines starting with `#` are ignored and phrases are tokenized exactly like sentences, so a
phrase matches wherever its tokens occur contiguously in a sentence.
"""

import os
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence, Union

from azwordvec.lib.corpus import tokenize
from azwordvec.lib.validation.corpus import split_labeled_line, validate_category, validate_lexicon_phrase
from azwordvec.lib.validation.exceptions import ValidationError
from azwordvec.models.enums.category import CATEGORY_ORDER, Category
from azwordvec.models.sentence import Sentence, Token

Phrase = tuple[Token, ...]
PathLike = Union[str, "os.PathLike[str]"]


def contains_phrase(tokens: Sequence[Token], phrase: Phrase) -> bool:
    width = len(phrase)
    if width == 0 or width > len(tokens):
        return False
    return any(tuple(tokens[i : i + width]) == phrase for i in range(len(tokens) - width + 1))


def longest_match(tokens: Sequence[Token], phrases: Iterable[Phrase]) -> int:
    """Length of the longest phrase contained in `tokens`, or 0 if none is."""
    return max((len(phrase) for phrase in phrases if contains_phrase(tokens, phrase)), default=0)


def _unique(phrases: Iterable[Phrase]) -> tuple[Phrase, ...]:
    return tuple(dict.fromkeys(phrases))


def _lexicon_lines(path: PathLike) -> Iterator[tuple[int, str]]:
    with open(path, encoding="utf-8") as lexicon_file:
        for line_number, raw_line in enumerate(lexicon_file, start=1):
            line = raw_line.rstrip("\r\n")
            if line.strip() and not line.lstrip().startswith("#"):
                yield line_number, line


@dataclass(frozen=True)
class CuewordLexicon:
    """Cueword phrases signalling one target category."""

    category: Category
    phrases: tuple[Phrase, ...]

    def __post_init__(self):
        if not self.phrases:
            raise ValidationError(f"cueword lexicon for {self.category} has no phrases")
        if any(len(phrase) == 0 for phrase in self.phrases):
            raise ValidationError(f"cueword lexicon for {self.category} contains an empty phrase")

    @classmethod
    def from_phrases(cls, category: Category, phrases: Iterable[str]) -> "CuewordLexicon":
        return cls(category, _unique(tuple(tokenize(phrase)) for phrase in phrases))

    def matches(self, sentence: Sentence) -> bool:
        return any(contains_phrase(sentence.tokens, phrase) for phrase in self.phrases)


def load_cueword_lexicon(path: PathLike, category: Category = Category.BAS) -> CuewordLexicon:
    phrases = []
    for line_number, line in _lexicon_lines(path):
        phrase = tuple(tokenize(line))
        validate_lexicon_phrase(phrase, line_number)
        phrases.append(phrase)
    return CuewordLexicon(category, _unique(phrases))


@dataclass(frozen=True)
class CategoryLexicon:
    """Cueword phrases for several categories."""

    phrases: Mapping[Category, tuple[Phrase, ...]]

    def __post_init__(self):
        if not any(self.phrases.get(category) for category in CATEGORY_ORDER):
            raise ValidationError("category lexicon needs at least one phrase")

    @classmethod
    def from_phrases(cls, phrases: Mapping[Category, Iterable[str]]) -> "CategoryLexicon":
        return cls(
            {
                category: _unique(tuple(tokenize(phrase)) for phrase in category_phrases)
                for category, category_phrases in phrases.items()
            }
        )

    def for_category(self, category: Category) -> tuple[Phrase, ...]:
        return self.phrases.get(category, ())

    def extended(self, category: Category, phrases: Iterable[str]) -> "CategoryLexicon":
        """A copy with extra phrases added to one category."""
        merged = dict(self.phrases)
        merged[category] = _unique(self.for_category(category) + tuple(tuple(tokenize(p)) for p in phrases))
        return CategoryLexicon(merged)


def load_category_lexicon(path: PathLike) -> CategoryLexicon:
    phrases: dict[Category, list[Phrase]] = {}
    for line_number, line in _lexicon_lines(path):
        label, text = split_labeled_line(line, line_number)
        category = validate_category(label, line_number)
        phrase = tuple(tokenize(text))
        validate_lexicon_phrase(phrase, line_number)
        phrases.setdefault(category, []).append(phrase)
    return CategoryLexicon({category: _unique(category_phrases) for category, category_phrases in phrases.items()})
