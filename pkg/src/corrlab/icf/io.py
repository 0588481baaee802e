"""Delimited curve files for C_beta.

Columns::

    beta  value_<unit>  raw_value_<unit>  constraint_residual
    monotone_adjusted  source  [closed_form_<unit>]  [witness]

``witness`` names a sidecar channel file written next to the curve.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import TextIO

from corrlab.common.tables import Cell, write_table
from corrlab.common.units import Unit, convert
from corrlab.config.property_groups.output_properties import OutputConfig
from corrlab.dist.io import dump_channel
from corrlab.icf.models import BetaCurve

logger = logging.getLogger(__name__)


def curve_columns(
    unit: Unit, closed_form: bool = False, witnesses: bool = False
) -> list[str]:
    """Header of a curve file."""
    u = unit.value
    columns = [
        "beta",
        f"value_{u}",
        f"raw_value_{u}",
        "constraint_residual",
        "monotone_adjusted",
        "source",
    ]
    if closed_form:
        columns.append(f"closed_form_{u}")
    if witnesses:
        columns.append("witness")
    return columns


def write_witnesses(curve: BetaCurve, directory: Path) -> list[str]:
    """Write one channel file per point; returns the file names."""
    directory.mkdir(parents=True, exist_ok=True)
    names = []
    for i, pt in enumerate(curve.points):
        name = f"witness_{i:03d}.json"
        (directory / name).write_text(dump_channel(pt.witness), encoding="utf-8")
        names.append(name)
    logger.info("wrote %d witness channels to %s", len(names), directory)
    return names


def write_curve(
    curve: BetaCurve,
    out: TextIO,
    unit: Unit = Unit.BITS,
    output: OutputConfig | None = None,
    comments: Sequence[str] = (),
    closed_form: Callable[[float], float] | None = None,
    witness_names: Sequence[str] | None = None,
) -> None:
    """Write a curve with values converted from bits to ``unit``.

    ``closed_form`` maps beta to a reference value already in ``unit``.
    """
    if witness_names is not None and len(witness_names) != len(curve.points):
        raise ValueError(
            f"{len(witness_names)} witness names for {len(curve.points)} points"
        )
    rows: list[list[Cell]] = []
    for i, pt in enumerate(curve.points):
        row: list[Cell] = [
            pt.beta,
            convert(pt.value, Unit.BITS, unit),
            convert(pt.raw_value, Unit.BITS, unit),
            pt.constraint_residual,
            pt.monotone_adjusted,
            pt.source.value,
        ]
        if closed_form is not None:
            row.append(closed_form(pt.beta))
        if witness_names is not None:
            row.append(witness_names[i])
        rows.append(row)
    columns = curve_columns(unit, closed_form is not None, witness_names is not None)
    write_table(out, columns, rows, output, comments)


__all__ = ["curve_columns", "write_curve", "write_witnesses"]
