"""Optimizer configuration for the information-correlation function."""

from pydantic import BaseModel, ConfigDict, Field


class OptimizerConfig(BaseModel):
    """Settings of the penalized multi-start channel search.

    ``max_evals`` is the total number of objective evaluations allowed for
    one value of beta, shared by all descents. The ``restarts`` random
    starts are drawn from ``seed``; point ``i`` of a curve uses
    ``seed ^ i`` whether or not it runs in a worker process.
    """

    model_config = ConfigDict(frozen=True)

    restarts: int = Field(default=16, gt=0, description="Random starts per beta")
    max_evals: int = Field(
        default=200_000, gt=0, description="Objective evaluations per beta"
    )
    penalty_weight: float = Field(
        default=100.0, gt=0, description="Weight of the squared constraint violation"
    )
    constraint_tol: float = Field(
        default=1e-6, gt=0, description="Accepted excess of rho_m(X;Y|W) over beta"
    )
    seed: int = Field(default=0, ge=0, description="Base random seed")
    ansatz_step: float = Field(
        default=1e-4, gt=0, le=0.5, description="Grid step of the two-slice sweep"
    )
    workers: int = Field(
        default=1, gt=0, description="Processes used to evaluate curve points"
    )
