"""Result models for correlation measures."""

from __future__ import annotations

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from corrlab.common.constants import ORDER_TOL
from corrlab.dist.models import FloatArray


class CorrelationReport(BaseModel):
    """Pearson correlation, both correlation ratios and maximal correlation.

    Used for unconditional, event-conditional and conditional measures
    alike; which one a report holds is up to the producer.
    """

    model_config = ConfigDict(frozen=True)

    pearson: float = Field(..., ge=-1.0, le=1.0, description="rho(X;Y)")
    theta_xy: float = Field(..., ge=0.0, le=1.0, description="theta(X;Y)")
    theta_yx: float = Field(..., ge=0.0, le=1.0, description="theta(Y;X)")
    maxcorr: float = Field(..., ge=0.0, le=1.0, description="rho_m(X;Y)")

    def satisfies_ordering(self, tol: float = ORDER_TOL) -> bool:
        """Check 0 <= |rho| <= theta <= rho_m <= 1 for both ratios."""
        return all(
            abs(self.pearson) <= theta + tol and theta <= self.maxcorr + tol
            for theta in (self.theta_xy, self.theta_yx)
        ) and self.maxcorr <= 1.0 + tol


class EventConditionalRow(BaseModel):
    """Measures of the slice P_{X,Y|U=u} together with P_U(u)."""

    model_config = ConfigDict(frozen=True)

    u: int = Field(..., ge=0, description="Index of the conditioning value")
    label: float = Field(..., description="Label of the conditioning value")
    mass: float = Field(..., ge=0.0, le=1.0, description="P_U(u)")
    report: CorrelationReport = Field(..., description="Measures of the slice")


class QMatrix(BaseModel):
    """Normalized joint matrix Q(x, y) = P(x, y) / sqrt(P(x) P(y)).

    Rows and columns of zero marginal mass are removed; ``rows`` and
    ``cols`` keep the original indices of the surviving ones.
    """

    model_config = ConfigDict(frozen=True)

    entries: list[list[float]] = Field(..., description="Q restricted to support")
    rows: list[int] = Field(..., description="Original X indices kept")
    cols: list[int] = Field(..., description="Original Y indices kept")

    @property
    def array(self) -> FloatArray:
        """Entries as a float array."""
        return np.asarray(self.entries, dtype=np.float64).reshape(
            len(self.rows), len(self.cols)
        )


__all__ = ["CorrelationReport", "EventConditionalRow", "QMatrix"]
