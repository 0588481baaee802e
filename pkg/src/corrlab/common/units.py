"""Information units.

Entropic quantities default to bits. The Gaussian closed forms default to
nats because their expressions carry natural logarithms (2*pi*e).
"""

import math
from enum import Enum


class Unit(str, Enum):
    """Logarithm base used for entropies and mutual informations."""

    BITS = "bits"
    NATS = "nats"

    @property
    def base(self) -> float:
        """Logarithm base of this unit."""
        return 2.0 if self is Unit.BITS else math.e


def convert(value: float, source: Unit, target: Unit) -> float:
    """Convert an information quantity between units.

    Conversions are exact factors of ln 2; infinities pass through.
    """
    if source is target:
        return value
    if source is Unit.NATS:
        return value / math.log(2.0)
    return value * math.log(2.0)


__all__ = ["Unit", "convert"]
