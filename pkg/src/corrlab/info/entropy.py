"""Entropies and mutual informations of finite pmfs.

Quantities are in bits unless a :class:`~corrlab.common.units.Unit` is
passed. The convention 0 log 0 = 0 is applied throughout through
``scipy.special.entr``.
"""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike
from scipy.special import entr

from corrlab.common.units import Unit
from corrlab.dist.models import Channel, FloatArray, JointDist2, JointDist3
from corrlab.dist.operations import attach_channel
from corrlab.errors import OutOfRange

# =============================================================================
# Entropy functions
# =============================================================================


def entropy(pmf: ArrayLike, unit: Unit = Unit.BITS) -> float:
    """Shannon entropy of a pmf of any shape."""
    p = np.asarray(pmf, dtype=np.float64).ravel()
    if p.size == 0 or p.sum() <= 0:
        return 0.0
    p = np.clip(p, 0.0, None)
    return float(entr(p / p.sum()).sum() / np.log(unit.base))


def h2(p: float, unit: Unit = Unit.BITS) -> float:
    """Binary entropy function.

    Raises:
        OutOfRange: p outside [0, 1]
    """
    if not 0.0 <= p <= 1.0:
        raise OutOfRange(f"binary entropy argument {p} not in [0, 1]")
    return entropy([p, 1.0 - p], unit)


def h4(a: float, b: float, c: float, d: float, unit: Unit = Unit.BITS) -> float:
    """Quaternary entropy function.

    Raises:
        OutOfRange: an argument outside [0, 1] or a sum off 1 by more than 1e-9
    """
    args = (a, b, c, d)
    if any(not 0.0 <= t <= 1.0 for t in args):
        raise OutOfRange(f"quaternary entropy arguments {args} not in [0, 1]")
    if abs(sum(args) - 1.0) > 1e-9:
        raise OutOfRange(f"quaternary entropy arguments sum to {sum(args)}")
    return float(entr(np.asarray(args, dtype=np.float64)).sum() / np.log(unit.base))


# =============================================================================
# Mutual informations
# =============================================================================


def mutual_information_array(p: FloatArray, unit: Unit = Unit.BITS) -> float:
    """I(A;B) of a joint array p[a, b] as H(A) + H(B) - H(A,B), clamped at 0."""
    value = (
        entropy(p.sum(axis=1), unit) + entropy(p.sum(axis=0), unit) - entropy(p, unit)
    )
    return max(value, 0.0)


def joint_entropy(d: JointDist2, unit: Unit = Unit.BITS) -> float:
    """H(X, Y)."""
    return entropy(d.array, unit)


def mutual_information(d: JointDist2, unit: Unit = Unit.BITS) -> float:
    """I(X;Y)."""
    return mutual_information_array(d.array, unit)


def cond_mutual_information(d: JointDist3, unit: Unit = Unit.BITS) -> float:
    """I(X;Y|U) = H(X,U) + H(Y,U) - H(X,Y,U) - H(U), clamped at 0."""
    p = d.array
    value = (
        entropy(p.sum(axis=1), unit)
        + entropy(p.sum(axis=0), unit)
        - entropy(p, unit)
        - entropy(p.sum(axis=(0, 1)), unit)
    )
    return max(value, 0.0)


def mi_pair_output_array(p: FloatArray, unit: Unit = Unit.BITS) -> float:
    """I((X,Y);W) of a joint array p[x, y, w]."""
    return mutual_information_array(p.reshape(-1, p.shape[2]), unit)


def mi_xy_w(d: JointDist2, ch: Channel, unit: Unit = Unit.BITS) -> float:
    """I(X,Y;W) when W is produced from (X, Y) by ``ch``.

    Raises:
        ShapeMismatch: channel inputs do not match the distribution
    """
    return mi_pair_output_array(attach_channel(d, ch).array, unit)


__all__ = [
    "cond_mutual_information",
    "entropy",
    "h2",
    "h4",
    "joint_entropy",
    "mi_pair_output_array",
    "mi_xy_w",
    "mutual_information",
    "mutual_information_array",
]
