from typing import Optional

from azwordvec.lib.validation.exceptions import ValidationError
from azwordvec.models.enums.category import CONTINUATION_MARKER, Category


def validate_category(value: str, line_number: Optional[int] = None) -> Category:
    """
    Validates a category column value and returns the matching category.

    Parameters
    __________
    value: str
        The category column, e.g. "AIM". Matching is exact: the seven labels are upper case.
    line_number: Optional[int]
        The 1-based line the value was read from, used in the error location.

    Raises
    ______
    ValidationError
        If the value is not one of the seven rhetorical categories.
    """
    try:
        return Category(value)
    except ValueError:
        location = f"line {line_number}: " if line_number is not None else ""
        raise ValidationError(
            f"{location}unknown category {value!r}; expected one of {', '.join(c.value for c in Category)}",
            custom_loc=("line", line_number),
        )


def split_labeled_line(line: str, line_number: int) -> tuple[str, str]:
    """
    Splits a `CATEGORY<TAB>text` record into its two columns.

    Raises
    ______
    ValidationError
        If the line has no tab separator.
    """
    if "\t" not in line:
        raise ValidationError(
            f"line {line_number}: missing tab between category and sentence text",
            custom_loc=("line", line_number),
        )
    label, text = line.split("\t", 1)
    return label.strip(), text


def is_continuation(label: str) -> bool:
    return label == CONTINUATION_MARKER


def validate_lexicon_phrase(phrase: tuple[str, ...], line_number: int) -> None:
    if not phrase:
        raise ValidationError(
            f"line {line_number}: lexicon phrase is empty after tokenization",
            custom_loc=("line", line_number),
        )
