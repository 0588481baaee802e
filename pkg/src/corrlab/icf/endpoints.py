"""Endpoints, closed forms and structural checks of C_beta.

At beta = 0 the constraint asks for conditional independence, so C_0 is
Wyner's common information. As beta approaches 1 from below, C_beta tends
to the Gács-Körner common information. For the doubly symmetric binary
source a two-slice channel gives a closed-form upper bound.
"""

from __future__ import annotations

import logging
import math
from itertools import combinations

import numpy as np

from corrlab.common.units import Unit, convert
from corrlab.config.property_groups.optimizer_properties import OptimizerConfig
from corrlab.corr.common_info import gk_common_info
from corrlab.dist.models import Channel, JointDist2
from corrlab.dist.operations import product_channel, product_pair
from corrlab.errors import OutOfRange
from corrlab.icf.models import IcfPoint, WitnessMinimality
from corrlab.icf.optimizer import icf_evaluate, icf_minimize
from corrlab.info.entropy import h2, h4, mi_xy_w

logger = logging.getLogger(__name__)

GK_EPSILONS = (0.1, 0.01, 0.001)


def wyner_common_info(d: JointDist2, cfg: OptimizerConfig | None = None) -> float:
    """C_W(X;Y) = C_0(X;Y) in bits, as found by :func:`icf_minimize`."""
    return icf_minimize(d, 0.0, cfg).value


def gk_endpoint_check(
    d: JointDist2, cfg: OptimizerConfig | None = None
) -> tuple[float, float]:
    """(C_beta at beta = 0.999, C_GK(X;Y)), both in bits.

    C_beta is also evaluated at 0.9 and 0.99 and logged so the approach to
    the endpoint is visible at DEBUG level.
    """
    value = 0.0
    for eps in GK_EPSILONS:
        value = icf_minimize(d, 1.0 - eps, cfg).value
        logger.debug("C_beta at beta=%.3f: %.9g", 1.0 - eps, value)
    return value, gk_common_info(d)


def dsbs_slice_masses(p0: float, beta: float) -> tuple[float, float]:
    """Diagonal masses (a, b) of the two-slice channel reaching rho_m = beta.

    Raises:
        OutOfRange: p0 outside [0, 1/2], beta outside [0, 1 - 2*p0)
    """
    if not 0.0 <= p0 <= 0.5:
        raise OutOfRange(f"crossover probability {p0} not in [0, 1/2]")
    if not 0.0 <= beta < 1.0 - 2.0 * p0:
        raise OutOfRange(f"beta={beta} not in [0, {1.0 - 2.0 * p0})")
    root = math.sqrt((1.0 - 2.0 * p0 - beta) / (1.0 - beta))
    return 0.5 * (1.0 - p0 + root), 0.5 * (1.0 - p0 - root)


def dsbs_icf_upper(p0: float, beta: float, unit: Unit = Unit.BITS) -> float:
    """Upper bound on C_beta of DSBS(p0).

    1 + H2(p0) - H4(a, b, p0/2, p0/2) bits for beta < 1 - 2*p0 and 0
    otherwise.

    Raises:
        OutOfRange: p0 outside [0, 1/2] or beta outside [0, 1]
    """
    if not 0.0 <= p0 <= 0.5:
        raise OutOfRange(f"crossover probability {p0} not in [0, 1/2]")
    if not 0.0 <= beta <= 1.0:
        raise OutOfRange(f"beta={beta} not in [0, 1]")
    if beta >= 1.0 - 2.0 * p0:
        return 0.0
    a, b = dsbs_slice_masses(p0, beta)
    bits = 1.0 + h2(p0) - h4(a, b, p0 / 2.0, p0 / 2.0)
    return convert(max(bits, 0.0), Unit.BITS, unit)


def icf_additivity_upper(
    d1: JointDist2,
    d2: JointDist2,
    beta: float,
    cfg: OptimizerConfig | None = None,
) -> float:
    """I of the product of the two per-pair witnesses on d1 x d2, in bits.

    The product channel is feasible at ``beta`` for the pair of pairs, so
    this is an upper bound on C_beta of the product that equals the sum of
    the per-pair values.
    """
    w1 = icf_minimize(d1, beta, cfg).witness
    w2 = icf_minimize(d2, beta, cfg).witness
    return mi_xy_w(product_pair(d1, d2), product_channel(w1, w2))


def _merge_outputs(ch: Channel, i: int, j: int) -> Channel:
    k = ch.array
    merged = np.delete(k, j, axis=2)
    merged[:, :, i if i < j else i - 1] += k[:, :, j]
    return Channel.from_array(merged)


def witness_minimality(d: JointDist2, point: IcfPoint) -> WitnessMinimality:
    """Merge every pair of used witness outputs and record violations.

    Merging outputs never raises I(X,Y;W). A merge that lowers the
    conditional maximal correlation by more than 1e-9 while keeping I
    unchanged would give a strictly better witness.
    """
    obj, rho = icf_evaluate(d, point.witness)
    used = np.flatnonzero(
        (d.array[:, :, None] * point.witness.array).sum(axis=(0, 1)) > 1e-12
    )
    violations: list[tuple[int, int]] = []
    checked = 0
    for i, j in combinations(used.tolist(), 2):
        obj_v, rho_v = icf_evaluate(d, _merge_outputs(point.witness, i, j))
        checked += 1
        if rho_v < rho - 1e-9 and obj_v >= obj - 1e-12:
            violations.append((i, j))
    return WitnessMinimality(
        objective=obj,
        rho_w=min(rho, 1.0),
        merges_checked=checked,
        violations=violations,
    )


__all__ = [
    "GK_EPSILONS",
    "dsbs_icf_upper",
    "dsbs_slice_masses",
    "gk_endpoint_check",
    "icf_additivity_upper",
    "witness_minimality",
    "wyner_common_info",
]
