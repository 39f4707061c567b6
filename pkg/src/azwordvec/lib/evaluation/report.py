"""
Result tables in the published layout: one row per configuration, one `P/R/F` cell per category.
"""

import os
from typing import NamedTuple, Optional, Sequence, Union

import pandas as pd

from azwordvec.lib.evaluation.reference import CAVEAT, MISSING_CELL, ReferenceRow
from azwordvec.lib.validation.corpus import validate_category
from azwordvec.lib.validation.exceptions import ValidationError
from azwordvec.models.enums.category import REPORT_COLUMN_ORDER, Category
from azwordvec.view_models.evaluation import EvaluationReport

PathLike = Union[str, "os.PathLike[str]"]

COLUMN_SEPARATOR = " | "
REFERENCE_MARKER = " *"
METHOD_HEADER = "Method"
TSV_COLUMNS = ["config", "category", "precision", "recall", "f1"]


class ParsedRow(NamedTuple):
    name: str
    reference: bool
    scores: dict[Category, Optional[tuple[float, float, float]]]


def report_cells(report: EvaluationReport) -> list[str]:
    cells = []
    for category in REPORT_COLUMN_ORDER:
        scores = report.averaged.get(category)
        cells.append(scores.cell() if scores is not None else MISSING_CELL)
    return cells


def report_tables(reports: Sequence[EvaluationReport], reference_rows: Sequence[ReferenceRow] = ()) -> str:
    """
    Format evaluated configurations, then static reference rows, as one aligned text table.

    Cells are `P/R/F` with two decimals. Reference rows are copied verbatim, marked with `*` and followed by a
    footnote saying they are not directly comparable.
    """
    rows = [[METHOD_HEADER] + [category.value for category in REPORT_COLUMN_ORDER]]
    rows += [[report.name] + report_cells(report) for report in reports]
    for row in reference_rows:
        rows.append([row.name + REFERENCE_MARKER] + [row.cell(category) for category in REPORT_COLUMN_ORDER])

    widths = [max(len(row[column]) for row in rows) for column in range(len(rows[0]))]
    lines = [COLUMN_SEPARATOR.join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in rows]
    lines.insert(1, "-" * len(lines[0]))
    if reference_rows:
        lines.append("")
        lines.append("*" + CAVEAT)
    return "\n".join(lines) + "\n"


def _parse_cell(cell: str, line_number: int) -> Optional[tuple[float, float, float]]:
    if cell == MISSING_CELL:
        return None
    parts = cell.split("/")
    try:
        precision, recall, f_measure = (float(part) for part in parts)
    except ValueError as e:
        raise ValidationError(
            f"line {line_number}: malformed cell {cell!r}", triggers=[e], custom_loc=("line", line_number)
        )
    return precision, recall, f_measure


def parse_report_table(text: str) -> list[ParsedRow]:
    """
    Read a table written by `report_tables` back into numbers.

    Raises
    ------
    ValidationError
        If the header is missing or a row or cell is malformed.
    """
    lines = text.splitlines()
    if not lines:
        raise ValidationError("empty report table")

    header = [cell.strip() for cell in lines[0].split(COLUMN_SEPARATOR.strip())]
    if header[0] != METHOD_HEADER:
        raise ValidationError(f"line 1: expected a {METHOD_HEADER!r} header", custom_loc=("line", 1))
    columns = [validate_category(value, 1) for value in header[1:]]

    rows = []
    for line_number, line in enumerate(lines[2:], start=3):
        if not line.strip() or line.startswith("*"):
            continue
        cells = [cell.strip() for cell in line.split(COLUMN_SEPARATOR.strip())]
        if len(cells) != len(columns) + 1:
            raise ValidationError(
                f"line {line_number}: expected {len(columns) + 1} cells, found {len(cells)}",
                custom_loc=("line", line_number),
            )
        name = cells[0]
        reference = name.endswith(REFERENCE_MARKER.strip())
        if reference:
            name = name[: -len(REFERENCE_MARKER.strip())].rstrip()
        scores = {category: _parse_cell(cell, line_number) for category, cell in zip(columns, cells[1:])}
        rows.append(ParsedRow(name, reference, scores))
    return rows


def report_frame(reports: Sequence[EvaluationReport]) -> pd.DataFrame:
    """One row per (configuration, category) that has scores."""
    records = [
        (report.name, category.value, scores.precision, scores.recall, scores.f_measure)
        for report in reports
        for category in REPORT_COLUMN_ORDER
        if (scores := report.averaged.get(category)) is not None
    ]
    return pd.DataFrame(records, columns=TSV_COLUMNS)


def write_report_tsv(reports: Sequence[EvaluationReport], path: PathLike) -> None:
    """`config<TAB>category<TAB>precision<TAB>recall<TAB>f1`, 4 decimals, with a header line."""
    report_frame(reports).to_csv(path, sep="\t", index=False, float_format="%.4f")


def write_report_json(report: EvaluationReport, path: PathLike) -> None:
    with open(path, "w", encoding="utf-8") as report_file:
        report_file.write(report.json(indent=2))


def read_report_json(path: PathLike) -> EvaluationReport:
    return EvaluationReport.parse_file(path)
