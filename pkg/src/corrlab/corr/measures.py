"""Pearson correlation and correlation ratios, unconditional and conditional.

Conditional quantities follow the variance characterizations::

    rho(X;Y|U)   = E[cov(X,Y|U)] / sqrt(E[var(X|U)] E[var(Y|U)])
    theta(X;Y|U) = sqrt(1 - E[var(X|Y,U)] / E[var(X|U)])

All expectations are exact sums over the pmf. Conditioning events of mass
at most 1e-12 contribute nothing.
"""

from __future__ import annotations

import numpy as np

from corrlab.common.constants import MASS_TOL, VARIANCE_TOL
from corrlab.dist.models import FloatArray, JointDist2, JointDist3

# =============================================================================
# Array kernels
# =============================================================================


def expected_cond_var(q: FloatArray, labels: FloatArray) -> float:
    """E[var(X|C)] for a joint array q[x, c] and X-labels.

    Columns of mass at most 1e-12 are skipped.
    """
    mass = q.sum(axis=0)
    keep = mass > MASS_TOL
    if not np.any(keep):
        return 0.0
    qk = q[:, keep]
    mean = (labels @ qk) / mass[keep]
    dev = labels[:, None] - mean[None, :]
    return float(np.sum(qk * dev * dev))


def expected_cond_cov(p: FloatArray, lx: FloatArray, ly: FloatArray) -> float:
    """E[cov(X,Y|U)] for a joint array p[x, y, u]."""
    mass = p.sum(axis=(0, 1))
    keep = mass > MASS_TOL
    if not np.any(keep):
        return 0.0
    pk = p[:, :, keep]
    mx = np.einsum("x,xyu->u", lx, pk) / mass[keep]
    my = np.einsum("y,xyu->u", ly, pk) / mass[keep]
    dx = lx[:, None] - mx[None, :]
    dy = ly[:, None] - my[None, :]
    return float(np.einsum("xu,yu,xyu->", dx, dy, pk))


def cond_pearson_array(p: FloatArray, lx: FloatArray, ly: FloatArray) -> float:
    """Conditional Pearson correlation of an array p[x, y, u]."""
    evx = expected_cond_var(p.sum(axis=1), lx)
    evy = expected_cond_var(p.sum(axis=0), ly)
    if evx * evy <= VARIANCE_TOL:
        return 0.0
    rho = expected_cond_cov(p, lx, ly) / np.sqrt(evx * evy)
    return float(np.clip(rho, -1.0, 1.0))


def cond_corr_ratio_array(p: FloatArray, lx: FloatArray) -> float:
    """theta(X;Y|U) of an array p[x, y, u] (only X-labels matter)."""
    evx = expected_cond_var(p.sum(axis=1), lx)
    if evx <= VARIANCE_TOL:
        return 0.0
    nx = p.shape[0]
    evxy = expected_cond_var(p.reshape(nx, -1), lx)
    return float(np.sqrt(np.clip(1.0 - evxy / evx, 0.0, 1.0)))


def _as_tensor(d: JointDist2) -> FloatArray:
    return d.array[:, :, None]


# =============================================================================
# Public measures
# =============================================================================


def pearson(d: JointDist2) -> float:
    """Pearson correlation of the labels; 0 if either variance is degenerate."""
    return cond_pearson_array(_as_tensor(d), d.alphabet_x.values, d.alphabet_y.values)


def cond_pearson(d: JointDist3) -> float:
    """Conditional Pearson correlation rho(X;Y|U)."""
    return cond_pearson_array(d.array, d.alphabet_x.values, d.alphabet_y.values)


def corr_ratio(d: JointDist2) -> float:
    """Correlation ratio theta(X;Y) = sqrt(var(E[X|Y]) / var(X)).

    theta(Y;X) is ``corr_ratio(transpose(d))``.
    """
    return cond_corr_ratio_array(_as_tensor(d), d.alphabet_x.values)


def cond_corr_ratio(d: JointDist3) -> float:
    """Conditional correlation ratio theta(X;Y|U)."""
    return cond_corr_ratio_array(d.array, d.alphabet_x.values)


def cond_corr_ratio_yx(d: JointDist3) -> float:
    """theta(Y;X|U), the reverse conditional correlation ratio."""
    return cond_corr_ratio_array(
        np.transpose(d.array, (1, 0, 2)), d.alphabet_y.values
    )


def expected_var_x(d: JointDist3) -> float:
    """E[var(X|U)]."""
    return expected_cond_var(d.array.sum(axis=1), d.alphabet_x.values)


def mmse(d: JointDist3) -> float:
    """Minimum mean square error of estimating X from (Y, U).

    Computed directly as E[var(X|Y,U)]; it equals
    E[var(X|U)] (1 - theta^2(X;Y|U)).
    """
    p = d.array
    return expected_cond_var(p.reshape(p.shape[0], -1), d.alphabet_x.values)


def covariance_gap(d: JointDist3) -> float:
    """sqrt(E var(X|U) E var(Y|U)) - E cov(X,Y|U).

    Conditioning never increases this gap relative to the unconditional
    sqrt(var X var Y) - cov(X, Y).
    """
    p = d.array
    lx, ly = d.alphabet_x.values, d.alphabet_y.values
    evx = expected_cond_var(p.sum(axis=1), lx)
    evy = expected_cond_var(p.sum(axis=0), ly)
    return float(np.sqrt(evx * evy) - expected_cond_cov(p, lx, ly))


__all__ = [
    "cond_corr_ratio",
    "cond_corr_ratio_array",
    "cond_corr_ratio_yx",
    "cond_pearson",
    "cond_pearson_array",
    "corr_ratio",
    "covariance_gap",
    "expected_cond_cov",
    "expected_cond_var",
    "expected_var_x",
    "mmse",
    "pearson",
]
