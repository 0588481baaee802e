"""Property groups for corrlab configuration.

This package organizes configuration properties into themed groups:
- logging_properties: CLI logging settings
- optimizer_properties: channel search settings
- output_properties: number formatting
- parallel_properties: worker cap for sweeps
"""

from .logging_properties import LoggingConfig
from .optimizer_properties import OptimizerConfig
from .output_properties import OutputConfig
from .parallel_properties import ParallelConfig

__all__ = [
    "LoggingConfig",
    "OptimizerConfig",
    "OutputConfig",
    "ParallelConfig",
]
