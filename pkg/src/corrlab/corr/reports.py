"""Bundled reports of all correlation measures."""

from __future__ import annotations

from corrlab.corr.maxcorr import cond_maxcorr, maxcorr_svd
from corrlab.corr.measures import (
    cond_corr_ratio,
    cond_corr_ratio_yx,
    cond_pearson,
    corr_ratio,
    pearson,
)
from corrlab.corr.models import CorrelationReport, EventConditionalRow
from corrlab.dist.models import JointDist2, JointDist3
from corrlab.dist.operations import (
    condition_on_u,
    marginal_u,
    supported_u,
    transpose,
)


def correlation_report(d: JointDist2) -> CorrelationReport:
    """rho, theta(X;Y), theta(Y;X) and rho_m of a pair."""
    return CorrelationReport(
        pearson=pearson(d),
        theta_xy=corr_ratio(d),
        theta_yx=corr_ratio(transpose(d)),
        maxcorr=maxcorr_svd(d),
    )


def conditional_report(d: JointDist3) -> CorrelationReport:
    """Conditional versions of every measure given U."""
    return CorrelationReport(
        pearson=cond_pearson(d),
        theta_xy=cond_corr_ratio(d),
        theta_yx=cond_corr_ratio_yx(d),
        maxcorr=cond_maxcorr(d),
    )


def event_conditional(d: JointDist3, u: int) -> CorrelationReport:
    """Report of the slice P_{X,Y|U=u}.

    Raises:
        ZeroConditioningMass: P_U(u) <= 1e-12
    """
    return correlation_report(condition_on_u(d, u))


def event_conditional_table(d: JointDist3) -> list[EventConditionalRow]:
    """One row per supported u."""
    mass = marginal_u(d)
    return [
        EventConditionalRow(
            u=u,
            label=d.alphabet_u.labels[u],
            mass=float(min(mass[u], 1.0)),
            report=event_conditional(d, u),
        )
        for u in supported_u(d)
    ]


__all__ = [
    "conditional_report",
    "correlation_report",
    "event_conditional",
    "event_conditional_table",
]
