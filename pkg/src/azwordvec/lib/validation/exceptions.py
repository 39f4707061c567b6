from typing import Optional, Sequence

Location = tuple[str, Optional[int]]


class ValidationError(ValueError, AssertionError):
    """
    Raised for malformed input files and values.

    `custom_loc` points at the offending input, e.g. ``("line", 12)``; `triggers` keeps the lower-level errors that
    caused this one.
    """

    def __init__(
        self, *args: object, triggers: Optional[Sequence[Exception]] = None, custom_loc: Optional[Location] = None
    ) -> None:
        super().__init__(*args)
        self.custom_loc = custom_loc

        self.triggering_exceptions = list(triggers or ())

    @property
    def line_number(self) -> Optional[int]:
        if self.custom_loc is not None and self.custom_loc[0] == "line":
            return self.custom_loc[1]
        return None
