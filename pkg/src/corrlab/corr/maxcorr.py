"""Maximal correlation of finite distributions.

For finite alphabets the maximal correlation equals the second largest
singular value of Q(x, y) = P(x, y) / sqrt(P(x) P(y)); the largest is 1
with singular vectors sqrt(P(x)), sqrt(P(y)). For discrete U the
conditional maximal correlation is the largest per-slice value over u of
positive mass.

An alternating-maximization oracle over score functions (f, g) gives an
independent check of the singular-value route.
"""

from __future__ import annotations

import logging

import numpy as np

from corrlab.common.constants import MASS_TOL
from corrlab.corr.models import QMatrix
from corrlab.dist.models import FloatArray, JointDist2, JointDist3
from corrlab.errors import DegenerateSupport, NotBinary

logger = logging.getLogger(__name__)

DEFAULT_RESTARTS = 8
DEFAULT_ITERS = 200
CONVERGENCE_TOL = 1e-12


# =============================================================================
# Array kernels
# =============================================================================


def maxcorr_array(p: FloatArray) -> float:
    """Second singular value of the Q-matrix of p[x, y] (any total mass > 0)."""
    px = p.sum(axis=1)
    py = p.sum(axis=0)
    total = px.sum()
    rows = px > MASS_TOL * total
    cols = py > MASS_TOL * total
    if rows.sum() <= 1 or cols.sum() <= 1:
        return 0.0
    sub = p[np.ix_(rows, cols)] / total
    q = sub / np.sqrt(np.outer(px[rows], py[cols]) / (total * total))
    s = np.linalg.svd(q, compute_uv=False)
    return float(np.clip(s[1], 0.0, 1.0))


def maxcorr_slices_array(p: FloatArray) -> FloatArray:
    """Per-slice maximal correlation of p[x, y, u]; NaN where P_U(u) <= 1e-12.

    Slices are handled in one batched SVD. Rows and columns of zero
    conditional mass are zeroed instead of removed, which leaves the second
    singular value unchanged.
    """
    mass = p.sum(axis=(0, 1))
    out = np.full(p.shape[2], np.nan)
    keep = mass > MASS_TOL
    if not np.any(keep):
        return out
    s = np.moveaxis(p[:, :, keep], 2, 0) / mass[keep][:, None, None]
    px = s.sum(axis=2)
    py = s.sum(axis=1)
    rx = np.where(px > MASS_TOL, 1.0 / np.sqrt(np.where(px > MASS_TOL, px, 1.0)), 0.0)
    ry = np.where(py > MASS_TOL, 1.0 / np.sqrt(np.where(py > MASS_TOL, py, 1.0)), 0.0)
    q = s * rx[:, :, None] * ry[:, None, :]
    if min(q.shape[1], q.shape[2]) < 2:
        out[keep] = 0.0
        return out
    sv = np.linalg.svd(q, compute_uv=False)
    lam = np.clip(sv[:, 1], 0.0, 1.0)
    single = ((px > MASS_TOL).sum(axis=1) <= 1) | ((py > MASS_TOL).sum(axis=1) <= 1)
    lam[single] = 0.0
    out[keep] = lam
    return out


def cond_maxcorr_array(p: FloatArray) -> float:
    """max over supported u of the slice maximal correlation."""
    lam = maxcorr_slices_array(p)
    if np.all(np.isnan(lam)):
        return 0.0
    return float(np.nanmax(lam))


# =============================================================================
# Public operations
# =============================================================================


def q_matrix(d: JointDist2) -> QMatrix:
    """Normalized joint matrix restricted to rows/columns of positive mass.

    Raises:
        DegenerateSupport: no row or no column of positive mass remains
    """
    p = d.array
    px = p.sum(axis=1)
    py = p.sum(axis=0)
    rows = np.flatnonzero(px > MASS_TOL)
    cols = np.flatnonzero(py > MASS_TOL)
    if rows.size < 1 or cols.size < 1:
        raise DegenerateSupport("distribution has no supported row or column")
    q = p[np.ix_(rows, cols)] / np.sqrt(np.outer(px[rows], py[cols]))
    return QMatrix(entries=q.tolist(), rows=rows.tolist(), cols=cols.tolist())


def maxcorr_svd(d: JointDist2) -> float:
    """Maximal correlation rho_m(X;Y) as the second singular value of Q."""
    return maxcorr_array(d.array)


def maxcorr_binary_formula(d: JointDist2) -> float:
    """rho_m for binary pairs via rho_m^2 = sum_xy P(x,y)^2/(P(x)P(y)) - 1.

    Raises:
        NotBinary: an alphabet is not of size 2 or a marginal mass is zero
    """
    if d.shape != (2, 2):
        raise NotBinary(f"expected a 2x2 distribution, got {d.shape}")
    p = d.array
    px = p.sum(axis=1)
    py = p.sum(axis=0)
    if px.min() <= MASS_TOL or py.min() <= MASS_TOL:
        raise NotBinary("binary formula needs all four marginal masses positive")
    chi2 = float(np.sum(p * p / np.outer(px, py))) - 1.0
    return float(np.sqrt(np.clip(chi2, 0.0, 1.0)))


def cond_maxcorr(d: JointDist3) -> float:
    """rho_m(X;Y|U) = max over u with P_U(u) > 0 of rho_m(X;Y|U=u)."""
    return cond_maxcorr_array(d.array)


def cond_maxcorr_slices(d: JointDist3) -> list[float | None]:
    """Per-u maximal correlations; None for unsupported u."""
    return [None if np.isnan(v) else float(v) for v in maxcorr_slices_array(d.array)]


def _standardize(f: FloatArray, w: FloatArray) -> FloatArray | None:
    centered = f - w @ f
    var = w @ (centered * centered)
    if var <= 1e-300:
        return None
    return centered / np.sqrt(var)


def maxcorr_bruteforce(
    d: JointDist2,
    restarts: int = DEFAULT_RESTARTS,
    iters: int = DEFAULT_ITERS,
    seed: int = 0,
) -> float:
    """Maximal correlation by alternating maximization over score vectors.

    Given g, the best f is E[g(Y)|X] standardized under P_X, and vice versa.
    Each restart starts from a random g and stops when the correlation
    improves by less than 1e-12; the best restart wins.
    """
    p = d.array
    px = p.sum(axis=1)
    py = p.sum(axis=0)
    rows = px > MASS_TOL
    cols = py > MASS_TOL
    if rows.sum() <= 1 or cols.sum() <= 1:
        return 0.0
    p = p[np.ix_(rows, cols)]
    px, py = px[rows], py[cols]
    rng = np.random.default_rng(seed)
    best = 0.0
    for restart in range(restarts):
        g = _standardize(rng.standard_normal(py.size), py)
        if g is None:
            continue
        corr = -np.inf
        it = 0
        for it in range(iters):
            f = _standardize((p @ g) / px, px)
            if f is None:
                corr = 0.0
                break
            g_next = _standardize((p.T @ f) / py, py)
            if g_next is None:
                corr = 0.0
                break
            g = g_next
            value = float(f @ p @ g)
            if value - corr < CONVERGENCE_TOL:
                corr = max(corr, value)
                break
            corr = value
        logger.debug(
            "restart %d stopped after %d iterations at %.15f", restart, it, corr
        )
        best = max(best, corr)
    return float(np.clip(best, 0.0, 1.0))


__all__ = [
    "cond_maxcorr",
    "cond_maxcorr_array",
    "cond_maxcorr_slices",
    "maxcorr_array",
    "maxcorr_binary_formula",
    "maxcorr_bruteforce",
    "maxcorr_slices_array",
    "maxcorr_svd",
    "q_matrix",
]
