import enum


class Category(str, enum.Enum):
    """Rhetorical status of a sentence."""

    AIM = "AIM"
    CTR = "CTR"
    OWN = "OWN"
    BKG = "BKG"
    OTH = "OTH"
    BAS = "BAS"
    TXT = "TXT"

    def __str__(self) -> str:
        return self.value


# Fixed order used for every tie-break and for classifier rows.
CATEGORY_ORDER: tuple[Category, ...] = (
    Category.AIM,
    Category.CTR,
    Category.OWN,
    Category.BKG,
    Category.OTH,
    Category.BAS,
    Category.TXT,
)

# Column order of the per-category result tables.
REPORT_COLUMN_ORDER: tuple[Category, ...] = (
    Category.AIM,
    Category.CTR,
    Category.BKG,
    Category.BAS,
    Category.TXT,
    Category.OWN,
    Category.OTH,
)

MAJORITY_CATEGORY = Category.OWN

# Category column value marking a continuation line of the previous sentence.
CONTINUATION_MARKER = "+"
