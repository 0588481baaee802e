"""Numerical search for the information-correlation function.

C_beta(X;Y) is the infimum of I(X,Y;W) over channels P_{W|X,Y} with
rho_m(X;Y|W) <= beta. Channels have |W| = |X||Y| outputs and are
parameterized by one softmax logit vector per input cell. The search:

1. returns 0 with a constant channel when beta >= rho_m(X;Y) - 1e-9;
2. evaluates structured channels (constant, W=(X,Y), W=X, W=Y, W=common
   part) and an optional warm-start channel;
3. for 2x2 inputs, sweeps the two-slice family P +- t*D with W uniform
   and refines the first feasible t with Brent's method;
4. runs Nelder-Mead on I + penalty * max(0, rho - beta)^2 from the best
   channel so far, the warm start, the two-slice channels and
   ``cfg.restarts`` random logit vectors drawn from ``cfg.seed``, and
   projects each end point onto the feasible set by mixing it with W=(X,Y).

Every evaluation of a channel counts against ``max_evals``. The best
feasible channel seen anywhere is returned, so the value is an upper bound
on the infimum.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from itertools import repeat

import numpy as np
from scipy.optimize import brentq, minimize
from scipy.special import softmax

from corrlab.common.constants import MASS_TOL, NEGATIVE_TOL, VARIANCE_TOL
from corrlab.config.property_groups.optimizer_properties import OptimizerConfig
from corrlab.corr.common_info import common_part
from corrlab.corr.maxcorr import cond_maxcorr_array, maxcorr_svd
from corrlab.dist.models import Channel, FloatArray, JointDist2
from corrlab.dist.operations import attach_channel
from corrlab.errors import (
    NotBinary,
    OptimizerBudgetExceeded,
    OutOfRange,
    ShapeMismatch,
)
from corrlab.icf.models import BetaCurve, IcfPoint, WitnessSource
from corrlab.info.entropy import mi_pair_output_array, mutual_information_array

logger = logging.getLogger(__name__)

SHORT_CIRCUIT_TOL = 1e-9
PROJECTION_STEPS = 40
SIMPLEX_SCALE = 1.0
LOGIT_FLOOR = 1e-6

TWO_SLICE_DIRECTIONS: tuple[FloatArray, ...] = (
    np.array([[1.0, 0.0], [0.0, -1.0]]),
    np.array([[0.0, 1.0], [-1.0, 0.0]]),
)
"""Perturbation directions D of the two-slice family (diagonal, anti-diagonal)."""


def icf_evaluate(d: JointDist2, ch: Channel) -> tuple[float, float]:
    """(I(X,Y;W), rho_m(X;Y|W)) of a channel, in bits.

    Raises:
        ShapeMismatch: channel inputs do not match the distribution
    """
    p = attach_channel(d, ch).array
    return mi_pair_output_array(p), cond_maxcorr_array(p)


# =============================================================================
# Two-slice family
# =============================================================================


def _signed_maxcorr_2x2(s: FloatArray) -> FloatArray:
    """det / sqrt(product of marginals) for 2x2 pmfs stacked on axis 0."""
    det = s[:, 0, 0] * s[:, 1, 1] - s[:, 0, 1] * s[:, 1, 0]
    px = s.sum(axis=2)
    py = s.sum(axis=1)
    den = np.sqrt(np.clip(px[:, 0] * px[:, 1] * py[:, 0] * py[:, 1], 0.0, None))
    ok = den > VARIANCE_TOL
    return np.where(ok, det / np.where(ok, den, 1.0), 0.0)


def two_slice_limit(d: JointDist2, direction: int = 0) -> float:
    """Largest t for which both P + t*D and P - t*D are pmfs."""
    if d.shape != (2, 2):
        raise NotBinary(f"two-slice channels need a 2x2 distribution, got {d.shape}")
    p = d.array
    mask = TWO_SLICE_DIRECTIONS[direction] != 0
    return float(p[mask].min())


def _two_slice_kernel(p: FloatArray, direction: FloatArray, t: float) -> FloatArray:
    plus = np.clip(p + t * direction, 0.0, None)
    k0 = np.where(p > MASS_TOL, 0.5 * plus / np.where(p > MASS_TOL, p, 1.0), 0.5)
    k0 = np.clip(k0, 0.0, 1.0)
    return np.stack([k0, 1.0 - k0], axis=2)


def two_slice_channel(d: JointDist2, t: float, direction: int = 0) -> Channel:
    """Binary-output channel splitting P into P + t*D and P - t*D.

    W is uniform and P_{X,Y|W=0,1} = P +- t*D with D = diag(1, -1) for
    ``direction=0`` or D = [[0, 1], [-1, 0]] for ``direction=1``. On a
    doubly symmetric binary source with D diagonal this is the channel
    behind the closed-form upper bound of :func:`dsbs_icf_upper`.

    Raises:
        NotBinary: d is not 2x2
        OutOfRange: t outside [0, two_slice_limit(d, direction)]
    """
    limit = two_slice_limit(d, direction)
    if not 0.0 <= t <= limit + NEGATIVE_TOL:
        raise OutOfRange(f"t={t} not in [0, {limit}]")
    return Channel.from_array(
        _two_slice_kernel(d.array, TWO_SLICE_DIRECTIONS[direction], t)
    )


def _two_slice_roots(
    p: FloatArray, beta: float, step: float, tol: float
) -> list[tuple[float, int]]:
    """Smallest feasible t per direction on a grid of the given step."""
    found: list[tuple[float, int]] = []
    for idx, direction in enumerate(TWO_SLICE_DIRECTIONS):
        limit = float(p[direction != 0].min())
        if limit <= 0.0:
            continue
        grid = np.linspace(0.0, limit, int(np.ceil(limit / step)) + 1)

        def signed(t: float, sign: float, dd: FloatArray = direction) -> float:
            return float(_signed_maxcorr_2x2((p + sign * t * dd)[None])[0])

        def excess(t: float, dd: FloatArray = direction) -> float:
            s = _signed_maxcorr_2x2(np.stack([p + t * dd, p - t * dd]))
            return float(np.abs(s).max()) - beta

        plus = _signed_maxcorr_2x2(p[None] + grid[:, None, None] * direction)
        minus = _signed_maxcorr_2x2(p[None] - grid[:, None, None] * direction)
        gap = np.maximum(np.abs(plus), np.abs(minus)) - beta
        feasible = np.flatnonzero(gap <= tol)
        if feasible.size:
            i = int(feasible[0])
            t = float(grid[i])
            if i > 0 and gap[i] <= 0.0 < gap[i - 1]:
                t = float(brentq(excess, grid[i - 1], grid[i], xtol=1e-15))
            found.append((t, idx))
            continue
        # beta below the dip of the sweep: the dip is a zero of one slice
        i = int(np.argmin(gap))
        lo, hi = float(grid[max(i - 1, 0)]), float(grid[min(i + 1, grid.size - 1)])
        for sign in (1.0, -1.0):
            a, b = signed(lo, sign), signed(hi, sign)
            if a * b >= 0.0:
                continue
            root = float(brentq(signed, lo, hi, args=(sign,), xtol=1e-15))
            if excess(root) <= tol:
                found.append((root, idx))
                break
    return found


# =============================================================================
# Search state
# =============================================================================


class _BudgetSpent(Exception):
    """Raised by an evaluation once ``max_evals`` have been used."""


class _Search:
    """Evaluation counter and best feasible channel for one beta."""

    def __init__(self, d: JointDist2, beta: float, cfg: OptimizerConfig) -> None:
        self.p = d.array
        self.nx, self.ny = d.shape
        self.n = self.nx * self.ny
        self.beta = beta
        self.cfg = cfg
        self.evals = 0
        self.best_value = np.inf
        self.best_rho = np.inf
        self.best_kernel: FloatArray | None = None
        self.best_source = WitnessSource.SEARCH
        self.identity = np.eye(self.n)

    @property
    def remaining(self) -> int:
        return self.cfg.max_evals - self.evals

    def feasible(self, rho: float) -> bool:
        return rho <= self.beta + self.cfg.constraint_tol

    def evaluate(self, k: FloatArray, source: WitnessSource) -> tuple[float, float]:
        """I(X,Y;W) and rho_m(X;Y|W) of k[(x, y), w]; keeps the best feasible."""
        if self.evals >= self.cfg.max_evals:
            raise _BudgetSpent
        self.evals += 1
        joint = self.p.reshape(-1, 1) * k
        obj = mutual_information_array(joint)
        rho = cond_maxcorr_array(joint.reshape(self.nx, self.ny, -1))
        if self.feasible(rho) and obj < self.best_value - 1e-15:
            self.best_value, self.best_rho = obj, rho
            self.best_kernel = k.copy()
            self.best_source = source
        return obj, rho

    def penalized(self, z: FloatArray) -> float:
        k = softmax(z.reshape(self.n, self.n), axis=1)
        obj, rho = self.evaluate(k, WitnessSource.SEARCH)
        return obj + self.cfg.penalty_weight * max(0.0, rho - self.beta) ** 2

    def project(self, k: FloatArray) -> None:
        """Bisect the smallest mixing weight with W=(X,Y) that is feasible."""
        _, rho = self.evaluate(k, WitnessSource.SEARCH)
        if self.feasible(rho):
            return
        lo, hi = 0.0, 1.0
        for _ in range(PROJECTION_STEPS):
            mid = 0.5 * (lo + hi)
            _, rho = self.evaluate(
                (1.0 - mid) * k + mid * self.identity, WitnessSource.SEARCH
            )
            if self.feasible(rho):
                hi = mid
            else:
                lo = mid
        logger.debug("projected onto the feasible set with weight %.3g", hi)

    def descend(self, z0: FloatArray, share: int) -> None:
        """One Nelder-Mead run from logits z0 followed by projection."""
        dim = z0.size
        simplex = np.vstack([z0, z0 + SIMPLEX_SCALE * np.eye(dim)])
        res = minimize(
            self.penalized,
            z0,
            method="Nelder-Mead",
            options={
                "maxfev": max(share, dim + 2),
                "initial_simplex": simplex,
                "xatol": 1e-9,
                "fatol": 1e-13,
            },
        )
        self.project(softmax(res.x.reshape(self.n, self.n), axis=1))


def _pad(k: FloatArray, n: int) -> FloatArray:
    out = np.zeros((k.shape[0], n))
    out[:, : k.shape[1]] = k
    return out


def _deterministic(cells: FloatArray | list[int], n: int) -> FloatArray:
    k = np.zeros((n, n))
    k[np.arange(n), np.asarray(cells, dtype=np.int64)] = 1.0
    return k


def structured_kernels(d: JointDist2) -> list[tuple[str, FloatArray]]:
    """Named deterministic channels tried before any search, as k[(x, y), w]."""
    nx, ny = d.shape
    n = nx * ny
    xs, ys = np.divmod(np.arange(n), ny)
    x_part, _ = common_part(d)
    common = np.maximum(np.asarray(x_part, dtype=np.int64), 0)[xs]
    return [
        ("constant", _deterministic(np.zeros(n, dtype=np.int64), n)),
        ("identity", _deterministic(np.arange(n), n)),
        ("x", _deterministic(xs, n)),
        ("y", _deterministic(ys, n)),
        ("common_part", _deterministic(common, n)),
    ]


def _logits(k: FloatArray) -> FloatArray:
    return np.log(np.clip(k, LOGIT_FLOOR, None)).ravel()


# =============================================================================
# Public operations
# =============================================================================


def _short_circuit(d: JointDist2, beta: float, rho: float) -> IcfPoint:
    nx, ny = d.shape
    logger.debug("beta=%.6g >= rho_m=%.6g: C_beta = 0", beta, rho)
    return IcfPoint(
        beta=beta,
        value=0.0,
        raw_value=0.0,
        witness=Channel.constant(nx, ny, 1),
        constraint_residual=rho - beta,
        source=WitnessSource.SHORT_CIRCUIT,
    )


def _check_warm_start(d: JointDist2, ch: Channel) -> None:
    nx, ny = d.shape
    if (ch.input_size_x, ch.input_size_y) != (nx, ny):
        raise ShapeMismatch("warm start does not match the distribution")
    if ch.output_size_w > nx * ny:
        raise ShapeMismatch(
            f"warm start has {ch.output_size_w} outputs, the search uses {nx * ny}"
        )


def icf_minimize(
    d: JointDist2,
    beta: float,
    cfg: OptimizerConfig | None = None,
    warm_start: Channel | None = None,
) -> IcfPoint:
    """Best channel found for C_beta(X;Y), with its value in bits.

    Raises:
        OutOfRange: beta outside [0, 1]
        ShapeMismatch: warm start does not take (X, Y) as input or has more
            than |X||Y| outputs
        OptimizerBudgetExceeded: no feasible channel within ``max_evals``
    """
    cfg = cfg or OptimizerConfig()
    if not 0.0 <= beta <= 1.0:
        raise OutOfRange(f"beta={beta} not in [0, 1]")
    if warm_start is not None:
        _check_warm_start(d, warm_start)
    rho = maxcorr_svd(d)
    if beta >= rho - SHORT_CIRCUIT_TOL:
        return _short_circuit(d, beta, rho)

    search = _Search(d, beta, cfg)
    starts: list[FloatArray] = []
    try:
        for name, k in structured_kernels(d):
            obj, rho_w = search.evaluate(k, WitnessSource.STRUCTURED)
            logger.debug("structured %s: I=%.6g rho=%.6g", name, obj, rho_w)
        if warm_start is not None:
            k = _pad(warm_start.array.reshape(search.n, -1), search.n)
            search.evaluate(k, WitnessSource.WARM_START)
            starts.append(_logits(k))
        if d.shape == (2, 2):
            for t, idx in _two_slice_roots(
                search.p, beta, cfg.ansatz_step, cfg.constraint_tol
            ):
                k = _two_slice_kernel(search.p, TWO_SLICE_DIRECTIONS[idx], t)
                k = _pad(k.reshape(4, 2), 4)
                search.evaluate(k, WitnessSource.TWO_SLICE)
                starts.append(_logits(k))
    except _BudgetSpent:
        pass
    if search.best_kernel is None:
        raise OptimizerBudgetExceeded(
            f"no feasible channel for beta={beta} within {cfg.max_evals} evaluations"
        )
    best_start = _logits(search.best_kernel)
    if not any(np.array_equal(best_start, z) for z in starts):
        starts.insert(0, best_start)
    rng = np.random.default_rng(cfg.seed)
    runs = [*starts, *(2.0 * rng.standard_normal((cfg.restarts, search.n**2)))]

    for i, z0 in enumerate(runs):
        if search.remaining <= 0:
            logger.warning(
                "evaluation budget spent after %d of %d descents at beta=%.6g",
                i,
                len(runs),
                beta,
            )
            break
        share = search.remaining // (len(runs) - i)
        try:
            search.descend(z0, share)
        except _BudgetSpent:
            break
        logger.debug(
            "descent %d at beta=%.6g: best I=%.9g after %d evaluations",
            i,
            beta,
            search.best_value,
            search.evals,
        )

    kernel = search.best_kernel
    if kernel is None:
        raise OptimizerBudgetExceeded(f"search for beta={beta} lost its best channel")
    nx, ny = d.shape
    value = float(max(search.best_value, 0.0))
    return IcfPoint(
        beta=beta,
        value=value,
        raw_value=value,
        witness=Channel.from_array(kernel.reshape(nx, ny, search.n)),
        constraint_residual=float(search.best_rho - beta),
        source=search.best_source,
    )


def _running_minimum(points: list[IcfPoint]) -> list[IcfPoint]:
    """Replace every point above an earlier one by that earlier witness.

    A channel feasible at some beta stays feasible at every larger beta.
    """
    out: list[IcfPoint] = []
    best: IcfPoint | None = None
    for pt in points:
        if best is not None and pt.value > best.value:
            logger.info(
                "C_beta rose from %.6g to %.6g at beta=%.6g; using the witness "
                "of beta=%.6g",
                best.value,
                pt.value,
                pt.beta,
                best.beta,
            )
            rho_w = best.constraint_residual + best.beta
            pt = IcfPoint(
                beta=pt.beta,
                value=best.value,
                raw_value=pt.raw_value,
                witness=best.witness,
                constraint_residual=rho_w - pt.beta,
                monotone_adjusted=True,
                source=WitnessSource.MONOTONE,
            )
        else:
            best = pt
        out.append(pt)
    return out


def icf_curve(
    d: JointDist2,
    betas: Sequence[float],
    cfg: OptimizerConfig | None = None,
) -> BetaCurve:
    """C_beta over a sorted grid of betas, repaired to be non-increasing.

    Point ``i`` is searched with seed ``cfg.seed ^ i``, in worker processes
    when ``cfg.workers > 1`` and in order otherwise; both give the same
    curve. The previous point's witness then enters every point as a
    candidate: it stays feasible at larger beta, so a point above it takes
    it over (source ``monotone``).

    Raises:
        OutOfRange: a beta outside [0, 1] or the grid not sorted
        OptimizerBudgetExceeded: propagated from :func:`icf_minimize`
    """
    cfg = cfg or OptimizerConfig()
    grid = [float(b) for b in betas]
    if any(not 0.0 <= b <= 1.0 for b in grid):
        raise OutOfRange("betas must lie in [0, 1]")
    if any(b < a for a, b in zip(grid, grid[1:], strict=False)):
        raise OutOfRange("betas must be sorted")

    configs = [
        cfg.model_copy(update={"seed": cfg.seed ^ i, "workers": 1})
        for i in range(len(grid))
    ]
    raw: list[IcfPoint]
    if cfg.workers > 1 and len(grid) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            raw = list(pool.map(icf_minimize, repeat(d), grid, configs))
    else:
        raw = [icf_minimize(d, b, c) for b, c in zip(grid, configs, strict=True)]
    return BetaCurve(points=_running_minimum(raw))


def beta_grid(start: float, step: float, end: float) -> list[float]:
    """Inclusive grid start, start+step, ..., end with rounding to 12 digits.

    Raises:
        OutOfRange: step not positive or end before start
    """
    if step <= 0.0 or end < start:
        raise OutOfRange(f"malformed grid {start}:{step}:{end}")
    count = int(np.floor((end - start) / step + 1e-9)) + 1
    grid = [round(start + i * step, 12) for i in range(count)]
    if end - grid[-1] > 1e-9:
        grid.append(end)
    return grid


__all__ = [
    "TWO_SLICE_DIRECTIONS",
    "beta_grid",
    "icf_curve",
    "icf_evaluate",
    "icf_minimize",
    "structured_kernels",
    "two_slice_channel",
    "two_slice_limit",
]
