"""Verdicts of the non-interactive simulation bounds."""

from __future__ import annotations

import math
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field

from corrlab.dist.models import ProductChannelPair


class Verdict(str, Enum):
    """Outcome of an outer-bound check."""

    PASS = "pass"
    FAIL = "fail"


class InnerVerdict(str, Enum):
    """Outcome of the inner-bound search."""

    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


class CheckResult(BaseModel):
    """An outer check comparing one quantity of source and target."""

    model_config = ConfigDict(frozen=True)

    verdict: Verdict = Field(..., description="pass iff margin >= -1e-9")
    margin: float = Field(..., description="Source quantity minus target quantity")

    @property
    def passed(self) -> bool:
        """True on pass."""
        return self.verdict is Verdict.PASS


class IcfCheckResult(BaseModel):
    """Comparison of the C_beta curves of source and target.

    ``margin`` is the smallest C_beta(src) - C_beta(tgt) over the grid, in
    bits, and ``worst_beta`` the beta attaining it. ``zero_set_violation``
    is set when the target's maximal correlation exceeds the source's: the
    source curve is then exactly 0 at beta = rho_m(src) while the target's
    is positive, and the check fails regardless of the slack.
    """

    model_config = ConfigDict(frozen=True)

    verdict: Verdict = Field(..., description="Outcome of the comparison")
    margin: float = Field(..., description="Worst C_beta(src) - C_beta(tgt), bits")
    worst_beta: float = Field(..., ge=0.0, le=1.0, description="Beta of the margin")
    slack: float = Field(..., ge=0.0, description="Tolerated excess of the target")
    zero_set_violation: bool = Field(
        default=False, description="Target positive where the source is zero"
    )
    betas: list[float] = Field(default_factory=list, description="Compared betas")
    src_values: list[float] = Field(default_factory=list, description="C_beta(src)")
    tgt_values: list[float] = Field(default_factory=list, description="C_beta(tgt)")

    @property
    def passed(self) -> bool:
        """True on pass."""
        return self.verdict is Verdict.PASS


class InnerResult(BaseModel):
    """Result of the product-channel search for a binary target."""

    model_config = ConfigDict(frozen=True)

    verdict: InnerVerdict = Field(..., description="Whether the target is reached")
    witness: ProductChannelPair | None = Field(
        default=None, description="(P_{U|X}, P_{V|Y}) reaching the target"
    )
    achieved_q: float | None = Field(
        default=None, description="P_UV(0,0) of the witness"
    )
    q_min: float | None = Field(
        default=None, description="Smallest reachable P_UV(0,0) on the grid"
    )
    q_max: float | None = Field(
        default=None, description="Largest reachable P_UV(0,0) on the grid"
    )


class BoundVerdict(BaseModel):
    """All four bounds for one (source, target) pair."""

    model_config = ConfigDict(frozen=True)

    mc_outer: CheckResult = Field(..., description="rho_m(U;V) <= rho_m(X;Y)")
    mi_outer: CheckResult = Field(..., description="I(U;V) <= I(X;Y)")
    icf_outer: IcfCheckResult = Field(
        ..., description="C_beta(U;V) <= C_beta(X;Y) for every beta"
    )
    inner: InnerResult = Field(..., description="Product-channel achievability")

    @property
    def outer_passed(self) -> bool:
        """True when all three outer checks pass."""
        return self.mc_outer.passed and self.mi_outer.passed and self.icf_outer.passed

    @property
    def consistent(self) -> bool:
        """An achievable target passes every outer check."""
        return self.inner.verdict is not InnerVerdict.YES or self.outer_passed


class Fig1Row(BaseModel):
    """q-intervals of the binary simulation example at one value of p.

    The source has P_X(0) = P_Y(0) = 1/4 and P_XY(0,0) = p, the target
    P_U(0) = P_V(0) = 1/2 and P_UV(0,0) = q. Empty intervals are NaN.
    """

    model_config = ConfigDict(frozen=True)

    p: float = Field(..., ge=0.0, le=0.25, description="P_XY(0,0) of the source")
    q_inner_lo: float = Field(..., description="Inner bound, lower end")
    q_inner_hi: float = Field(..., description="Inner bound, upper end")
    q_icf_lo: float = Field(..., description="C_beta outer bound, lower end")
    q_icf_hi: float = Field(..., description="C_beta outer bound, upper end")
    q_mc_lo: float = Field(..., description="rho_m outer bound, lower end")
    q_mc_hi: float = Field(..., description="rho_m outer bound, upper end")
    q_mi_lo: float = Field(..., description="I outer bound, lower end")
    q_mi_hi: float = Field(..., description="I outer bound, upper end")

    @staticmethod
    def columns() -> list[str]:
        """Column names in table order."""
        return list(Fig1Row.model_fields)

    def cells(self) -> list[float]:
        """Values in table order."""
        return [float(getattr(self, name)) for name in Fig1Row.model_fields]

    def interval(self, bound: str) -> tuple[float, float] | None:
        """(lo, hi) of ``inner``, ``icf``, ``mc`` or ``mi``; None when empty."""
        lo = float(getattr(self, f"q_{bound}_lo"))
        hi = float(getattr(self, f"q_{bound}_hi"))
        if math.isnan(lo) or math.isnan(hi):
            return None
        return lo, hi


__all__ = [
    "BoundVerdict",
    "CheckResult",
    "Fig1Row",
    "IcfCheckResult",
    "InnerResult",
    "InnerVerdict",
    "Verdict",
]
