"""Entropies and mutual informations of finite pmfs."""

from corrlab.info.entropy import (
    cond_mutual_information,
    entropy,
    h2,
    h4,
    joint_entropy,
    mi_pair_output_array,
    mi_xy_w,
    mutual_information,
    mutual_information_array,
)

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
