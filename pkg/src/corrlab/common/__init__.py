"""Shared constants and units for corrlab."""

from corrlab.common.constants import (
    MASS_TOL,
    NEGATIVE_TOL,
    ORDER_TOL,
    VARIANCE_TOL,
)
from corrlab.common.units import Unit, convert

__all__ = [
    # Tolerances
    "MASS_TOL",
    "NEGATIVE_TOL",
    "ORDER_TOL",
    "VARIANCE_TOL",
    # Units
    "Unit",
    "convert",
]
