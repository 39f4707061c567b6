from dataclasses import dataclass, field
from typing import Sequence

from azwordvec.models.enums.category import Category

# Lowercased, non-empty, whitespace-free surface form.
Token = str


@dataclass(frozen=True)
class Sentence:
    tokens: tuple[Token, ...]
    source_id: str = ""

    @classmethod
    def of(cls, tokens: Sequence[Token], source_id: str = "") -> "Sentence":
        return cls(tuple(tokens), source_id)

    def __len__(self) -> int:
        return len(self.tokens)

    def text(self) -> str:
        return " ".join(self.tokens)


@dataclass(frozen=True)
class LabeledSentence:
    sentence: Sentence
    category: Category

    # Number of input lines concatenated into this sentence.
    parts: int = field(default=1, compare=False)

    @property
    def tokens(self) -> tuple[Token, ...]:
        return self.sentence.tokens
