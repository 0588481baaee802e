"""Closed forms for jointly Gaussian pairs.

For a bivariate normal with correlation coefficient rho0, Pearson
correlation, both correlation ratios and maximal correlation all equal
|rho0|, and

    C_beta = 1/2 log+ [((1 + b0) / (1 - b0)) / ((1 + beta) / (1 - beta))]

with b0 = |rho0|. Quantities here default to nats.
"""

from __future__ import annotations

import math

from corrlab.common.units import Unit, convert
from corrlab.corr.models import CorrelationReport
from corrlab.errors import OutOfRange
from corrlab.gaussian.models import GaussianPair

TWO_PI_E = 2.0 * math.pi * math.e


def _check_beta(beta: float) -> None:
    if not 0.0 <= beta <= 1.0:
        raise OutOfRange(f"beta={beta} not in [0, 1]")


def _log_odds(r: float) -> float:
    return math.log((1.0 + r) / (1.0 - r))


def gaussian_maxcorr(g: GaussianPair) -> float:
    """rho_m(X;Y) = |rho0|."""
    return g.beta0


def gaussian_report(g: GaussianPair) -> CorrelationReport:
    """rho = rho0 and theta(X;Y) = theta(Y;X) = rho_m = |rho0|."""
    return CorrelationReport(
        pearson=g.rho0, theta_xy=g.beta0, theta_yx=g.beta0, maxcorr=g.beta0
    )


def gaussian_icf(g: GaussianPair, beta: float, unit: Unit = Unit.NATS) -> float:
    """C_beta(X;Y) of the pair; infinite when |rho0| = 1 and beta < 1.

    Raises:
        OutOfRange: beta outside [0, 1]
    """
    _check_beta(beta)
    b0 = g.beta0
    if beta >= b0:
        return 0.0
    if b0 >= 1.0:
        return math.inf
    nats = 0.5 * (_log_odds(b0) - _log_odds(beta))
    return convert(max(nats, 0.0), Unit.NATS, unit)


def gaussian_joint_entropy(rho0: float, unit: Unit = Unit.NATS) -> float:
    """h(X, Y) = ln(2 pi e) + 1/2 ln(1 - rho0^2); -inf when |rho0| = 1.

    Raises:
        OutOfRange: |rho0| > 1
    """
    if abs(rho0) > 1.0:
        raise OutOfRange(f"correlation {rho0} not in [-1, 1]")
    if abs(rho0) == 1.0:
        return -math.inf
    return convert(math.log(TWO_PI_E) + 0.5 * math.log1p(-rho0 * rho0), Unit.NATS, unit)


def continuous_icf_lower(
    h_joint: float, rho0: float, beta: float, unit: Unit = Unit.NATS
) -> float:
    """Lower bound on C_beta for a continuous pair with h(X, Y) = h_joint nats.

    max(0, h_joint - 1/2 ln[(2 pi e (1 - b0))^2 (1 + beta) / (1 - beta)])
    for beta < b0 = |rho0|, and 0 otherwise. Equals :func:`gaussian_icf`
    when h_joint is the joint entropy of the Gaussian pair.

    Raises:
        OutOfRange: beta outside [0, 1] or |rho0| > 1
    """
    _check_beta(beta)
    b0 = abs(rho0)
    if b0 > 1.0:
        raise OutOfRange(f"correlation {rho0} not in [-1, 1]")
    if beta >= b0:
        return 0.0
    if b0 >= 1.0:
        return math.inf
    nats = h_joint - math.log(TWO_PI_E * (1.0 - b0)) - 0.5 * _log_odds(beta)
    return convert(max(nats, 0.0), Unit.NATS, unit)


__all__ = [
    "continuous_icf_lower",
    "gaussian_icf",
    "gaussian_joint_entropy",
    "gaussian_maxcorr",
    "gaussian_report",
]
