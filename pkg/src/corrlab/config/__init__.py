"""Configuration for corrlab."""

from .corrlab_properties import CorrlabProperties
from .property_groups import (
    LoggingConfig,
    OptimizerConfig,
    OutputConfig,
    ParallelConfig,
)

__all__ = [
    "CorrlabProperties",
    "LoggingConfig",
    "OptimizerConfig",
    "OutputConfig",
    "ParallelConfig",
]
