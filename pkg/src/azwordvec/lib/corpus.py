import logging
import os
import re
from collections import Counter
from typing import Iterable, Iterator, NamedTuple, Union

import pandas as pd

from azwordvec.lib.validation.corpus import is_continuation, split_labeled_line, validate_category
from azwordvec.lib.validation.exceptions import ValidationError
from azwordvec.models.enums.category import CATEGORY_ORDER, Category
from azwordvec.models.sentence import LabeledSentence, Sentence, Token

logger = logging.getLogger(__name__)

PathLike = Union[str, "os.PathLike[str]"]

# Leading or trailing runs of anything that is not a letter or digit.
EDGE_PUNCTUATION_RE = re.compile(r"^[\W_]+|[\W_]+$")


def tokenize(text: str) -> list[Token]:
    """
    Split raw text into lowercased tokens.

    Whitespace separates pieces; punctuation is stripped from both ends of each piece, so internal hyphens and
    apostrophes survive ("Kullback-Leibler" -> "kullback-leibler") and pieces that are nothing but punctuation are
    dropped. Digits are kept.
    """
    tokens = []
    for piece in text.lower().split():
        token = EDGE_PUNCTUATION_RE.sub("", piece)
        if token:
            tokens.append(token)
    return tokens


def load_training_corpus(path: PathLike) -> Iterator[Sentence]:
    """
    Stream a plain-text training corpus, one sentence per line. Blank lines are skipped.

    The stream can only be consumed once; wrap it in a list when several passes are needed.
    """
    name = os.path.basename(os.fspath(path))
    with open(path, encoding="utf-8") as corpus_file:
        for line_number, line in enumerate(corpus_file, start=1):
            tokens = tokenize(line)
            if tokens:
                yield Sentence(tuple(tokens), f"{name}:{line_number}")


def load_labeled_corpus(path: PathLike) -> list[LabeledSentence]:
    """
    Load an argumentative-zoning dataset of `CATEGORY<TAB>text` records.

    A record whose category column is `+` continues the previous record's sentence: its tokens are appended and
    the first record's category is kept.

    Raises
    ------
    ValidationError
        On a missing tab, an unknown category, or a continuation with nothing to continue. The message and
        `custom_loc` name the offending line.
    """
    name = os.path.basename(os.fspath(path))
    records: list[LabeledSentence] = []

    with open(path, encoding="utf-8") as labeled_file:
        for line_number, raw_line in enumerate(labeled_file, start=1):
            line = raw_line.rstrip("\r\n")
            if not line.strip():
                continue

            label, text = split_labeled_line(line, line_number)
            tokens = tuple(tokenize(text))

            if is_continuation(label):
                if not records:
                    raise ValidationError(
                        f"line {line_number}: continuation marker with no preceding sentence",
                        custom_loc=("line", line_number),
                    )
                previous = records[-1]
                records[-1] = LabeledSentence(
                    Sentence(previous.tokens + tokens, previous.sentence.source_id),
                    previous.category,
                    parts=previous.parts + 1,
                )
                continue

            category = validate_category(label, line_number)
            records.append(LabeledSentence(Sentence(tokens, f"{name}:{line_number}"), category))

    concatenated = sum(1 for record in records if record.parts > 1)
    logger.info("Loaded %i labeled sentences from %s (%i built from sub-sentences)", len(records), name, concatenated)
    return records


class CategoryShare(NamedTuple):
    count: int
    fraction: float


def class_distribution(data: Iterable[LabeledSentence]) -> dict[Category, CategoryShare]:
    """Count sentences per category. Every category is present in the result, with zeros for an empty dataset."""
    counts = Counter(record.category for record in data)
    total = sum(counts.values())
    return {
        category: CategoryShare(counts[category], counts[category] / total if total else 0.0)
        for category in CATEGORY_ORDER
    }


def distribution_frame(distribution: dict[Category, CategoryShare]) -> pd.DataFrame:
    """Tabulate a class distribution, most frequent category first."""
    frame = pd.DataFrame(
        [(category.value, share.count, share.fraction) for category, share in distribution.items()],
        columns=["category", "sentences", "fraction"],
    )
    return frame.sort_values(["sentences", "category"], ascending=[False, True]).reset_index(drop=True)
