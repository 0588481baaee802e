"""Jointly Gaussian pairs."""

from __future__ import annotations

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from corrlab.dist.models import FloatArray


class GaussianPair(BaseModel):
    """Standard bivariate normal (X, Y) with correlation coefficient rho0."""

    model_config = ConfigDict(frozen=True)

    rho0: float = Field(..., ge=-1.0, le=1.0, description="Correlation coefficient")

    @property
    def beta0(self) -> float:
        """|rho0|, the maximal correlation of the pair."""
        return abs(self.rho0)

    @property
    def covariance(self) -> FloatArray:
        """2x2 covariance matrix."""
        return np.array([[1.0, self.rho0], [self.rho0, 1.0]])


__all__ = ["GaussianPair"]
