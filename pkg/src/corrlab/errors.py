"""Exception hierarchy for corrlab.

Distribution and shape problems derive from ``ValueError`` as well as
``CorrlabError`` so callers that only catch ``ValueError`` keep working.
"""


class CorrlabError(Exception):
    """Base class for every error raised by corrlab."""


class DistributionError(CorrlabError, ValueError):
    """A distribution, channel or argument violates its invariants."""


class NegativeMass(DistributionError):
    """An entry of a pmf or kernel is below -1e-12."""


class NotNormalized(DistributionError):
    """A pmf (or a kernel row) does not sum to 1 within 1e-12."""


class ShapeMismatch(DistributionError):
    """Array dimensions disagree with alphabet sizes or channel inputs."""


class ZeroConditioningMass(DistributionError):
    """Conditioning on an event whose probability is at most 1e-12."""


class OutOfRange(DistributionError):
    """A scalar parameter lies outside its admissible interval."""


class Infeasible(DistributionError):
    """Requested marginals and cell mass do not define a distribution."""


class DegenerateSupport(DistributionError):
    """No row or column of positive marginal mass remains."""


class NotBinary(DistributionError):
    """An operation restricted to 2x2 distributions got something else."""


class OptimizerBudgetExceeded(CorrlabError, RuntimeError):
    """The ICF search ran out of evaluations before finding a feasible channel."""


__all__ = [
    "CorrlabError",
    "DistributionError",
    "NegativeMass",
    "NotNormalized",
    "ShapeMismatch",
    "ZeroConditioningMass",
    "OutOfRange",
    "Infeasible",
    "DegenerateSupport",
    "NotBinary",
    "OptimizerBudgetExceeded",
]
