"""Closed forms for jointly Gaussian pairs."""

from corrlab.gaussian.closed_forms import (
    continuous_icf_lower,
    gaussian_icf,
    gaussian_joint_entropy,
    gaussian_maxcorr,
    gaussian_report,
)
from corrlab.gaussian.models import GaussianPair
from corrlab.gaussian.quantize import quantize_gaussian

__all__ = [
    "GaussianPair",
    "continuous_icf_lower",
    "gaussian_icf",
    "gaussian_joint_entropy",
    "gaussian_maxcorr",
    "gaussian_report",
    "quantize_gaussian",
]
