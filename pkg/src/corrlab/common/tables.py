"""Delimited text tables for curves, verdicts and the simulation-region table.

Layout::

    # <optional comment lines>
    col_a<TAB>col_b
    0.1<TAB>0.25

Numbers are written with :meth:`OutputConfig.format_number`; strings are
written unchanged.
"""

from __future__ import annotations

from collections.abc import Sequence
from typing import TextIO

from corrlab.config.property_groups.output_properties import OutputConfig

Cell = float | int | str | bool


def format_cell(value: Cell, output: OutputConfig) -> str:
    """Render one cell."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, str):
        return value
    return output.format_number(float(value))


def write_table(
    out: TextIO,
    columns: Sequence[str],
    rows: Sequence[Sequence[Cell]],
    output: OutputConfig | None = None,
    comments: Sequence[str] = (),
) -> None:
    """Write comment lines, a header row and data rows.

    Raises:
        ValueError: a row has a different number of cells than the header
    """
    output = output or OutputConfig()
    for line in comments:
        out.write(f"# {line}\n")
    out.write(output.join(list(columns)) + "\n")
    for row in rows:
        if len(row) != len(columns):
            raise ValueError(f"row has {len(row)} cells, header has {len(columns)}")
        out.write(output.join([format_cell(v, output) for v in row]) + "\n")


__all__ = ["format_cell", "write_table"]
