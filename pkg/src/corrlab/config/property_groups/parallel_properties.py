"""Parallelism settings for grid sweeps."""

from pydantic import BaseModel, ConfigDict, Field


class ParallelConfig(BaseModel):
    """Upper bound on worker processes for grid sweeps.

    ``CORRLAB_THREADS`` overrides the value; the CLI copies it into
    :attr:`OptimizerConfig.workers` for curves and uses it directly for the
    region table.
    """

    model_config = ConfigDict(validate_assignment=True)

    threads: int = Field(default=1, ge=1, description="Maximum worker processes")
