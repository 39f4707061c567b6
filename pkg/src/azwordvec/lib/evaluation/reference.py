"""
Published per-category results for argumentative zoning on the AZ corpus, kept as static rows for side-by-side display.

Cells are the printed `precision/recall/F-measure` strings, verbatim; "-" marks a configuration that was not
reported for a category. None of these rows is a reproduction target: the published experiments concatenated
sub-sentences differently from the hand-crafted-feature results they are shown beside, and their training corpora,
classifier and cueword lists are not available.
"""

from dataclasses import dataclass
from typing import Mapping, Optional

from azwordvec.models.enums.category import Category

MISSING_CELL = "-"

CAVEAT = (
    "Reference rows are published figures on a differently segmented AZ corpus and are not directly comparable "
    "with the configurations evaluated here."
)


@dataclass(frozen=True)
class ReferenceRow:
    name: str
    cells: Mapping[Category, str]
    # Every reference row carries the caveat; nothing here was produced by this package.
    comparable: bool = False

    def cell(self, category: Category) -> str:
        return self.cells.get(category, MISSING_CELL)

    def scores(self, category: Category) -> Optional[tuple[float, float, float]]:
        """(precision, recall, F-measure) of a category, or None if it was not reported."""
        text = self.cell(category)
        if text == MISSING_CELL:
            return None
        precision, recall, f_measure = (float(part) for part in text.split("/"))
        return precision, recall, f_measure


def _row(name: str, aim: str, ctr: str, bkg: str, bas: str, txt: str, own: str, oth: str) -> ReferenceRow:
    cells = zip(
        (Category.AIM, Category.CTR, Category.BKG, Category.BAS, Category.TXT, Category.OWN, Category.OTH),
        (aim, ctr, bkg, bas, txt, own, oth),
    )
    return ReferenceRow(name, {category: cell for category, cell in cells if cell != MISSING_CELL})


PUBLISHED_EMBEDDING_ROWS: tuple[ReferenceRow, ...] = (
    _row(
        "AVGWVEC ACL+AZ 300",
        "0.29/0.82/0.43",
        "0.34/0.75/0.47",
        "0.36/0.72/0.48",
        "0.10/0.72/0.17",
        "0.51/0.87/0.64",
        "0.61/0.71/0.65",
        "0.49/0.65/0.56",
    ),
    _row(
        "AVGWVEC ACL+AZ 100",
        "0.29/0.85/0.43",
        "0.29/0.80/0.42",
        "0.36/0.68/0.47",
        "0.11/0.87/0.20",
        "0.47/0.88/0.61",
        "0.59/0.68/0.63",
        "0.49/0.69/0.57",
    ),
    _row(
        "PARAVEC ACL+AZ 100",
        "0.60/0.03/0.06",
        "0.20/0.004/0.009",
        "0.39/0.02/0.04",
        "0.00/0.00/0.00",
        "0.52/0.11/0.18",
        "0.62/0.98/0.76",
        "0.35/0.004/0.009",
    ),
    _row(
        "AVGWVEC MixedAbs 100",
        "0.11/0.73/0.19",
        "0.11/0.71/0.20",
        "0.14/0.62/0.23",
        "0.04/0.65/0.08",
        "0.15/0.75/0.25",
        "0.72/0.56/0.63",
        "0.21/0.61/0.31",
    ),
    _row(
        "AVGWVEC Brown model 100",
        "0.19/0.73/0.30",
        "0.38/0.56/0.45",
        "0.19/0.55/0.28",
        "0.05/0.72/0.10",
        "0.30/0.72/0.42",
        "0.56/0.52/0.54",
        "0.42/0.66/0.51",
    ),
    _row("AVGWVEC BSWE 100", "-", "-", "-", "0.14/0.63/0.23", "-", "-", "-"),
)

CUEWORDS_ROW = _row("Cuewords", "0.13/0.55/0.21", "0.33/0.20/0.25", "-", "0.08/0.36/0.13", "-", "-", "-")

TEUFEL_2002_ROW = _row(
    "Teufel 2002",
    "0.44/0.65/0.52",
    "0.34/0.20/0.26",
    "0.40/0.50/0.45",
    "0.37/0.40/0.38",
    "0.57/0.66/0.61",
    "0.84/0.88/0.86",
    "0.52/0.39/0.44",
)

BASELINE_ROW = _row(
    "Baseline",
    "0.30/0.07/0.11",
    "0.31/0.12/0.17",
    "0.32/0.17/0.22",
    "0.15/0.05/0.07",
    "0.56/0.15/0.23",
    "0.78/0.90/0.83",
    "0.47/0.42/0.44",
)

# Rows shown beside evaluated configurations by default.
COMPARISON_ROWS: tuple[ReferenceRow, ...] = (TEUFEL_2002_ROW, CUEWORDS_ROW, BASELINE_ROW)

ALL_REFERENCE_ROWS: tuple[ReferenceRow, ...] = PUBLISHED_EMBEDDING_ROWS + COMPARISON_ROWS


def reference_row(name: str) -> ReferenceRow:
    for row in ALL_REFERENCE_ROWS:
        if row.name == name:
            return row
    raise KeyError(f"no reference row named {name!r}")
