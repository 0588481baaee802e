"""Discretization of a standard bivariate normal on a quantile grid."""

from __future__ import annotations

import numpy as np
from scipy.stats import multivariate_normal, norm

from corrlab.dist.models import JointDist2
from corrlab.errors import OutOfRange
from corrlab.gaussian.models import GaussianPair

EDGE = 10.0
"""Finite stand-in for +-infinity in the CDF grid."""


def quantize_gaussian(g: GaussianPair, bins: int) -> JointDist2:
    """Cell masses of (X, Y) on ``bins`` equiprobable intervals per axis.

    Labels are the mid-quantiles of each interval. The pair (X cell, Y
    cell) is a function of (X, Y), so its maximal correlation is at most
    |rho0|.

    Raises:
        OutOfRange: bins < 1
    """
    if bins < 1:
        raise OutOfRange(f"bins={bins} must be positive")
    labels = norm.ppf((np.arange(bins) + 0.5) / bins).tolist()
    if bins == 1:
        return JointDist2.from_array([[1.0]], labels, labels)
    if g.beta0 >= 1.0 - 1e-12:
        p = np.eye(bins) if g.rho0 > 0 else np.fliplr(np.eye(bins))
        return JointDist2.from_array(p / bins, labels, labels)
    if g.rho0 == 0.0:
        p = np.full((bins, bins), 1.0 / bins**2)
        return JointDist2.from_array(p, labels, labels)

    edges = norm.ppf(np.linspace(0.0, 1.0, bins + 1))
    edges[0], edges[-1] = -EDGE, EDGE
    gx, gy = np.meshgrid(edges, edges, indexing="ij")
    cdf = multivariate_normal.cdf(
        np.stack([gx, gy], axis=-1),
        mean=[0.0, 0.0],
        cov=g.covariance,
        abseps=1e-12,
        releps=1e-10,
    )
    cdf = np.asarray(cdf, dtype=np.float64)
    cells = np.diff(np.diff(cdf, axis=0), axis=1)
    cells = np.clip(cells, 0.0, None)
    return JointDist2.from_array(cells / cells.sum(), labels, labels)


__all__ = ["EDGE", "quantize_gaussian"]
