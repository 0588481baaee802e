"""Simulation regions of a binary source and a binary symmetric target.

The source has P_X(0) = P_Y(0) = 1/4 and P_XY(0,0) = p; the target has
P_U(0) = P_V(0) = 1/2 and P_UV(0,0) = q. For every p the q-interval
allowed by each outer bound and the q-interval reached by product binary
channels is recorded. Targets at q and 1/2 - q are relabelings of each
other, so every interval is symmetric about q = 1/4 and the two ends of
the C_beta interval share their curves through the cache.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from itertools import repeat
from typing import TextIO

from corrlab.common.tables import write_table
from corrlab.config.property_groups.optimizer_properties import OptimizerConfig
from corrlab.config.property_groups.output_properties import OutputConfig
from corrlab.dist.generators import make_binary
from corrlab.dist.models import JointDist2
from corrlab.errors import OutOfRange
from corrlab.nisim.bounds import (
    DEFAULT_GRID_STEP,
    ICF_SLACK,
    IcfCache,
    icf_outer_check,
    inner_range_binary,
    mc_outer_check,
    mi_outer_check,
)
from corrlab.nisim.models import Fig1Row

logger = logging.getLogger(__name__)

SRC_MARGINAL = 0.25
TGT_MARGINAL = 0.5
CENTRE = 0.25
Q_STEP = 1e-3
ICF_Q_STEP = 2e-2

DEFAULT_P_GRID: tuple[float, ...] = tuple(round(0.025 * i, 12) for i in range(11))
"""p = 0, 0.025, ..., 0.25."""

FIG1_OPTIMIZER = OptimizerConfig(restarts=2, max_evals=5000)
"""Search settings used when none are given; binary targets are settled
by the two-slice sweep, so a small budget suffices."""


def fig1_source(p: float) -> JointDist2:
    """Source pair with P_X(0) = P_Y(0) = 1/4 and P_XY(0,0) = p.

    Raises:
        OutOfRange: p outside [0, 1/4]
    """
    if not 0.0 <= p <= SRC_MARGINAL:
        raise OutOfRange(f"p={p} not in [0, 1/4]")
    return make_binary(SRC_MARGINAL, SRC_MARGINAL, p)


def fig1_target(q: float) -> JointDist2:
    """Target pair with P_U(0) = P_V(0) = 1/2 and P_UV(0,0) = q."""
    if not 0.0 <= q <= TGT_MARGINAL:
        raise OutOfRange(f"q={q} not in [0, 1/2]")
    return make_binary(TGT_MARGINAL, TGT_MARGINAL, q)


def centred_grid(step: float, lo: float = 0.0, hi: float = TGT_MARGINAL) -> list[float]:
    """1/4 +- k*step inside [lo, hi], plus both end points."""
    if step <= 0.0:
        raise OutOfRange(f"grid step {step} must be positive")
    k = int(math.floor((CENTRE - lo) / step + 1e-9))
    points = {round(CENTRE + s * i * step, 12) for i in range(k + 1) for s in (-1, 1)}
    points |= {lo, hi}
    return sorted(q for q in points if lo <= q <= hi)


def _central_run(
    qs: Sequence[float], passes: Callable[[float], bool]
) -> tuple[float, float]:
    """Ends of the run of passing grid points around 1/4; NaN if 1/4 fails."""
    centre = qs.index(CENTRE)
    if not passes(qs[centre]):
        return math.nan, math.nan
    lo = hi = centre
    while lo > 0 and passes(qs[lo - 1]):
        lo -= 1
    while hi < len(qs) - 1 and passes(qs[hi + 1]):
        hi += 1
    return qs[lo], qs[hi]


def _icf_end(
    passes: Callable[[float], bool],
    step: float,
    refine_step: float | None,
    upward: bool,
) -> float:
    """One end of the C_beta interval, walking away from 1/4.

    The boundary between the last passing and the first failing grid point
    is refined by bisection down to ``refine_step``.
    """
    grid = centred_grid(step)
    if upward:
        qs = [q for q in grid if q >= CENTRE]
    else:
        qs = [q for q in grid if q <= CENTRE][::-1]
    if not passes(qs[0]):
        return math.nan
    last = qs[0]
    for q in qs[1:]:
        if passes(q):
            last = q
            continue
        fail = q
        while refine_step is not None and abs(last - fail) > refine_step:
            mid = 0.5 * (last + fail)
            if passes(mid):
                last = mid
            else:
                fail = mid
        return last
    return last



def fig1_row(
    p: float,
    q_step: float = Q_STEP,
    icf_q_step: float = ICF_Q_STEP,
    betas: Sequence[float] | None = None,
    cfg: OptimizerConfig | None = None,
    grid_step: float = DEFAULT_GRID_STEP,
    slack: float = ICF_SLACK,
    refine: bool = True,
    cache: IcfCache | None = None,
) -> Fig1Row:
    """All four q-intervals at one p."""
    src = fig1_source(p)
    cache = cache or IcfCache(cfg or FIG1_OPTIMIZER)
    qs = centred_grid(q_step)

    q_mc = _central_run(qs, lambda q: mc_outer_check(src, fig1_target(q)).passed)
    q_mi = _central_run(qs, lambda q: mi_outer_check(src, fig1_target(q)).passed)
    q_inner = inner_range_binary(src, TGT_MARGINAL, TGT_MARGINAL, grid_step)

    def icf_passes(q: float) -> bool:
        return icf_outer_check(
            src, fig1_target(q), betas, slack=slack, cache=cache
        ).passed

    refine_step = q_step if refine else None
    icf_lo = _icf_end(icf_passes, icf_q_step, refine_step, upward=False)
    icf_hi = _icf_end(icf_passes, icf_q_step, refine_step, upward=True)
    logger.info(
        "p=%.6g: mc [%.4g, %.4g] icf [%.4g, %.4g] inner [%.4g, %.4g]",
        p,
        *q_mc,
        icf_lo,
        icf_hi,
        *q_inner,
    )
    return Fig1Row(
        p=p,
        q_inner_lo=q_inner[0],
        q_inner_hi=q_inner[1],
        q_icf_lo=icf_lo,
        q_icf_hi=icf_hi,
        q_mc_lo=q_mc[0],
        q_mc_hi=q_mc[1],
        q_mi_lo=q_mi[0],
        q_mi_hi=q_mi[1],
    )


def fig1_rows(
    p_grid: Sequence[float] = DEFAULT_P_GRID,
    q_step: float = Q_STEP,
    cfg: OptimizerConfig | None = None,
    icf_q_step: float = ICF_Q_STEP,
    betas: Sequence[float] | None = None,
    grid_step: float = DEFAULT_GRID_STEP,
    slack: float = ICF_SLACK,
    refine: bool = True,
    workers: int = 1,
) -> list[Fig1Row]:
    """One row per p.

    Rows are independent; with ``workers > 1`` they are computed in
    separate processes, otherwise in order with one shared cache of target
    curves.
    """
    cfg = (cfg or FIG1_OPTIMIZER).model_copy(update={"workers": 1})
    ps = [float(p) for p in p_grid]
    for p in ps:
        fig1_source(p)
    if workers > 1 and len(ps) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(
                pool.map(
                    fig1_row,
                    ps,
                    repeat(q_step),
                    repeat(icf_q_step),
                    repeat(betas),
                    repeat(cfg),
                    repeat(grid_step),
                    repeat(slack),
                    repeat(refine),
                )
            )
    cache = IcfCache(cfg)
    return [
        fig1_row(p, q_step, icf_q_step, betas, cfg, grid_step, slack, refine, cache)
        for p in ps
    ]


def write_fig1_table(
    rows: Sequence[Fig1Row],
    out: TextIO,
    output: OutputConfig | None = None,
    comments: Sequence[str] = (),
) -> None:
    """Header plus one delimited line per row; empty intervals as ``nan``."""
    write_table(out, Fig1Row.columns(), [r.cells() for r in rows], output, comments)


__all__ = [
    "DEFAULT_P_GRID",
    "FIG1_OPTIMIZER",
    "ICF_Q_STEP",
    "Q_STEP",
    "centred_grid",
    "fig1_row",
    "fig1_rows",
    "fig1_source",
    "fig1_target",
    "write_fig1_table",
]
