"""Outer and inner bounds for non-interactive simulation.

A target P_UV can be simulated from a source P_XY when U is produced from
X alone and V from Y alone. Necessary conditions (outer bounds) compare
maximal correlations, mutual informations and C_beta curves of source and
target. For binary pairs a sufficient condition (inner bound) is the
existence of a pair of binary channels reaching the target, found by an
exhaustive grid sweep.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence

import numpy as np

from corrlab.common.constants import MASS_TOL
from corrlab.config.property_groups.optimizer_properties import OptimizerConfig
from corrlab.corr.maxcorr import maxcorr_svd
from corrlab.dist.models import Channel, FloatArray, JointDist2, ProductChannelPair
from corrlab.dist.operations import canonical_key
from corrlab.errors import NotBinary, OutOfRange
from corrlab.icf.optimizer import beta_grid, icf_curve
from corrlab.info.entropy import mutual_information
from corrlab.nisim.models import (
    BoundVerdict,
    CheckResult,
    IcfCheckResult,
    InnerResult,
    InnerVerdict,
    Verdict,
)

logger = logging.getLogger(__name__)

MARGIN_TOL = 1e-9
ICF_SLACK = 0.02
INNER_TOL = 1e-3
DEFAULT_GRID_STEP = 1e-3


def default_betas() -> list[float]:
    """0, 0.05, ..., 1."""
    return beta_grid(0.0, 0.05, 1.0)


def _check(margin: float) -> CheckResult:
    verdict = Verdict.PASS if margin >= -MARGIN_TOL else Verdict.FAIL
    return CheckResult(verdict=verdict, margin=margin)


def mc_outer_check(src: JointDist2, tgt: JointDist2) -> CheckResult:
    """rho_m(tgt) <= rho_m(src); margin is the difference."""
    return _check(maxcorr_svd(src) - maxcorr_svd(tgt))


def mi_outer_check(src: JointDist2, tgt: JointDist2) -> CheckResult:
    """I(tgt) <= I(src) in bits; margin is the difference."""
    return _check(mutual_information(src) - mutual_information(tgt))


# =============================================================================
# C_beta comparison
# =============================================================================


class IcfCache:
    """C_beta values keyed by relabeling-invariant distribution and beta.

    C_beta does not depend on symbol labels or on swapping X and Y, so
    targets that are relabelings of each other share one curve.
    """

    def __init__(self, cfg: OptimizerConfig | None = None) -> None:
        self.cfg = cfg or OptimizerConfig()
        self._values: dict[tuple[tuple[float, ...], float], float] = {}

    def __len__(self) -> int:
        return len(self._values)

    def values(self, d: JointDist2, betas: Sequence[float]) -> list[float]:
        """C_beta(d) in bits for each beta, computing missing ones as a curve."""
        key = canonical_key(d)
        grid = sorted({round(float(b), 12) for b in betas})
        missing = [b for b in grid if (key, b) not in self._values]
        if missing:
            curve = icf_curve(d, missing, self.cfg)
            for pt in curve.points:
                self._values[(key, round(pt.beta, 12))] = pt.value
        return [self._values[(key, round(float(b), 12))] for b in betas]


def icf_outer_check(
    src: JointDist2,
    tgt: JointDist2,
    betas: Sequence[float] | None = None,
    cfg: OptimizerConfig | None = None,
    slack: float = ICF_SLACK,
    cache: IcfCache | None = None,
) -> IcfCheckResult:
    """C_beta(tgt) <= C_beta(src) on a beta grid, with slack for both estimates.

    beta = rho_m(src) is added to the grid. The source curve is exactly 0
    from there on while the target's is positive below rho_m(tgt), so a
    target with larger maximal correlation fails without slack.
    """
    cache = cache or IcfCache(cfg)
    rho_src = maxcorr_svd(src)
    rho_tgt = maxcorr_svd(tgt)
    base = default_betas() if betas is None else betas
    grid = sorted({round(float(b), 12) for b in base} | {round(rho_src, 12)})
    src_values = cache.values(src, grid)
    tgt_values = cache.values(tgt, grid)
    diffs = np.asarray(src_values) - np.asarray(tgt_values)

    zero_violation = rho_tgt > rho_src + MARGIN_TOL
    if zero_violation:
        worst = grid.index(round(rho_src, 12))
    else:
        worst = int(np.argmin(diffs))
    margin = float(diffs[worst])
    passed = not zero_violation and margin >= -slack
    logger.debug(
        "icf check: worst beta=%.6g margin=%.6g zero-set violation=%s",
        grid[worst],
        margin,
        zero_violation,
    )
    return IcfCheckResult(
        verdict=Verdict.PASS if passed else Verdict.FAIL,
        margin=margin,
        worst_beta=min(grid[worst], 1.0),
        slack=slack,
        zero_set_violation=zero_violation,
        betas=grid,
        src_values=src_values,
        tgt_values=tgt_values,
    )


# =============================================================================
# Binary inner bound
# =============================================================================


def _matching_channels(px: FloatArray, target: float, step: float) -> FloatArray:
    """Rows (P(0|0), P(0|1)) of binary channels whose output has P(0) = target.

    The first parameter is swept on the grid and the second solved from the
    marginal constraint. If one input has no mass both parameters equal the
    target.
    """
    if px.min() <= MASS_TOL:
        return np.array([[target, target]])
    first = np.linspace(0.0, 1.0, int(round(1.0 / step)) + 1)
    second = (target - px[0] * first) / px[1]
    keep = (second >= -MASS_TOL) & (second <= 1.0 + MASS_TOL)
    if not np.any(keep):
        return np.array([[target, target]])
    return np.stack([first[keep], np.clip(second[keep], 0.0, 1.0)], axis=1)


def _binary_channel(params: FloatArray) -> Channel:
    return Channel.from_array(np.stack([params, 1.0 - params], axis=1))


def _check_binary(src: JointDist2, pu0: float, pv0: float) -> None:
    if src.shape != (2, 2):
        raise NotBinary(f"inner search needs a 2x2 source, got {src.shape}")
    for m in (pu0, pv0):
        if not 0.0 <= m <= 1.0:
            raise OutOfRange(f"target marginal {m} not in [0, 1]")


def _reachable(
    src: JointDist2, pu0: float, pv0: float, step: float
) -> tuple[FloatArray, FloatArray, FloatArray]:
    p = src.array
    alphas = _matching_channels(p.sum(axis=1), pu0, step)
    gammas = _matching_channels(p.sum(axis=0), pv0, step)
    return alphas, gammas, alphas @ p @ gammas.T


def inner_range_binary(
    src: JointDist2, pu0: float, pv0: float, grid_step: float = DEFAULT_GRID_STEP
) -> tuple[float, float]:
    """Smallest and largest P_UV(0,0) reachable by product binary channels.

    Raises:
        NotBinary: src is not 2x2
        OutOfRange: a target marginal outside [0, 1]
    """
    _check_binary(src, pu0, pv0)
    _, _, q = _reachable(src, pu0, pv0, grid_step)
    return float(q.min()), float(q.max())


def inner_search_binary(
    src: JointDist2,
    target_marginals: tuple[float, float],
    q: float,
    grid_step: float = DEFAULT_GRID_STEP,
) -> InnerResult:
    """Whether binary channels U|X and V|Y reach P_UV(0,0) = q within 1e-3.

    Both channels are constrained to produce the target marginals exactly,
    which leaves one free parameter per channel; the two are swept on a
    grid of ``grid_step``.

    Raises:
        NotBinary: src is not 2x2
        OutOfRange: a target marginal outside [0, 1]
    """
    pu0, pv0 = target_marginals
    _check_binary(src, pu0, pv0)
    alphas, gammas, reach = _reachable(src, pu0, pv0, grid_step)
    i, j = np.unravel_index(int(np.argmin(np.abs(reach - q))), reach.shape)
    best = float(reach[i, j])
    q_min, q_max = float(reach.min()), float(reach.max())
    if abs(best - q) > INNER_TOL:
        return InnerResult(verdict=InnerVerdict.NO, q_min=q_min, q_max=q_max)
    witness = ProductChannelPair(
        chan_u_given_x=_binary_channel(alphas[i]),
        chan_v_given_y=_binary_channel(gammas[j]),
    )
    return InnerResult(
        verdict=InnerVerdict.YES,
        witness=witness,
        achieved_q=best,
        q_min=q_min,
        q_max=q_max,
    )


def evaluate_bounds(
    src: JointDist2,
    tgt: JointDist2,
    betas: Sequence[float] | None = None,
    cfg: OptimizerConfig | None = None,
    grid_step: float = DEFAULT_GRID_STEP,
) -> BoundVerdict:
    """All outer checks and, for binary pairs, the inner search."""
    if src.shape == (2, 2) and tgt.shape == (2, 2):
        t = tgt.array
        inner = inner_search_binary(
            src,
            (float(t[0].sum()), float(t[:, 0].sum())),
            float(t[0, 0]),
            grid_step,
        )
    else:
        inner = InnerResult(verdict=InnerVerdict.UNKNOWN)
    return BoundVerdict(
        mc_outer=mc_outer_check(src, tgt),
        mi_outer=mi_outer_check(src, tgt),
        icf_outer=icf_outer_check(src, tgt, betas, cfg),
        inner=inner,
    )


__all__ = [
    "DEFAULT_GRID_STEP",
    "ICF_SLACK",
    "INNER_TOL",
    "IcfCache",
    "default_betas",
    "evaluate_bounds",
    "icf_outer_check",
    "inner_range_binary",
    "inner_search_binary",
    "mc_outer_check",
    "mi_outer_check",
]
