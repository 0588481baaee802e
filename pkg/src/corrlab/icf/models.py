"""Result models of the information-correlation function C_beta."""

from __future__ import annotations

from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from corrlab.dist.models import Channel, FloatArray

MONOTONE_TOL = 1e-6
"""Allowed increase of a curve between consecutive betas."""


class WitnessSource(str, Enum):
    """Stage of the search that produced a witness channel."""

    SHORT_CIRCUIT = "short_circuit"
    STRUCTURED = "structured"
    TWO_SLICE = "two_slice"
    SEARCH = "search"
    WARM_START = "warm_start"
    MONOTONE = "monotone"


class IcfPoint(BaseModel):
    """One evaluation of C_beta(X;Y) with the channel achieving it.

    ``value`` is an upper bound on the infimum: it is I(X,Y;W) of the
    witness, which satisfies rho_m(X;Y|W) <= beta + constraint_tol.
    ``raw_value`` is what the search returned at this beta before a curve
    applied its running-minimum repair; ``monotone_adjusted`` tells whether
    that repair replaced it.
    """

    model_config = ConfigDict(frozen=True)

    beta: float = Field(..., ge=0.0, le=1.0, description="Correlation level")
    value: float = Field(..., ge=0.0, description="I(X,Y;W) of the witness, bits")
    raw_value: float = Field(..., ge=0.0, description="Value before curve repair")
    witness: Channel = Field(..., description="Channel P_{W|X,Y} achieving value")
    constraint_residual: float = Field(
        ..., description="rho_m(X;Y|W) - beta of the witness"
    )
    monotone_adjusted: bool = Field(
        default=False, description="Value replaced by a smaller-beta point"
    )
    source: WitnessSource = Field(
        default=WitnessSource.SEARCH, description="Stage that found the witness"
    )

    @model_validator(mode="after")
    def validate_witness_size(self) -> IcfPoint:
        """Witness output alphabet is at most |X||Y|."""
        w = self.witness
        if w.output_size_w > w.input_size_x * w.input_size_y:
            raise ValueError(
                f"witness output size {w.output_size_w} exceeds "
                f"{w.input_size_x * w.input_size_y}"
            )
        return self


class BetaCurve(BaseModel):
    """C_beta over an increasing grid of betas."""

    model_config = ConfigDict(frozen=True)

    points: list[IcfPoint] = Field(..., description="Points by increasing beta")

    @model_validator(mode="after")
    def validate_order(self) -> BetaCurve:
        """Betas increase and values do not increase beyond 1e-6."""
        for prev, cur in zip(self.points, self.points[1:], strict=False):
            if cur.beta < prev.beta:
                raise ValueError(f"beta {cur.beta} follows {prev.beta}")
            if cur.value > prev.value + MONOTONE_TOL:
                raise ValueError(
                    f"C_beta increases from {prev.value} to {cur.value} "
                    f"at beta={cur.beta}"
                )
        return self

    @property
    def betas(self) -> FloatArray:
        """Grid of betas."""
        return np.array([pt.beta for pt in self.points], dtype=np.float64)

    @property
    def values(self) -> FloatArray:
        """Reported values in bits."""
        return np.array([pt.value for pt in self.points], dtype=np.float64)

    @property
    def adjusted_count(self) -> int:
        """Number of points replaced by the running-minimum repair."""
        return sum(pt.monotone_adjusted for pt in self.points)


class WitnessMinimality(BaseModel):
    """Check of a witness against channels that merge two of its outputs.

    A merge is a violation when it lowers rho_m(X;Y|W) by more than 1e-9
    without strictly lowering I(X,Y;W). Violations only indicate that the
    search stopped short of the optimum.
    """

    model_config = ConfigDict(frozen=True)

    objective: float = Field(..., ge=0.0, description="I(X,Y;W) of the witness")
    rho_w: float = Field(..., ge=0.0, le=1.0, description="rho_m(X;Y|W)")
    merges_checked: int = Field(..., ge=0, description="Output pairs merged")
    violations: list[tuple[int, int]] = Field(
        default_factory=list, description="Merged output pairs that violate"
    )

    @property
    def holds(self) -> bool:
        """True when no merge violates."""
        return not self.violations


__all__ = [
    "MONOTONE_TOL",
    "BetaCurve",
    "IcfPoint",
    "WitnessMinimality",
    "WitnessSource",
]
