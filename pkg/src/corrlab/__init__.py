"""Corrlab - correlation measures and the information-correlation function.

This package computes dependence measures of finite joint distributions and
applies them to non-interactive simulation of one correlated pair from
another. Numerical work uses numpy and scipy; models are pydantic.

Modules:
- dist: joint distributions, channels, generators and JSON files
- info: entropies and mutual informations
- corr: Pearson, correlation ratios, maximal correlation, Gács-Körner
- icf: C_beta channel search, curves and endpoints
- gaussian: closed forms for jointly Gaussian pairs
- nisim: outer and inner simulation bounds, binary region table
- config: properties for logging, optimizer, output and parallelism

Usage:
    from corrlab import make_dsbs, correlation_report, icf_curve

    d = make_dsbs(0.1)
    print(correlation_report(d).maxcorr)
    curve = icf_curve(d, [0.0, 0.4, 0.8])
"""

__version__ = "0.1.0"

from corrlab.config import CorrlabProperties, OptimizerConfig  # noqa: F401
from corrlab.corr import (  # noqa: F401
    CorrelationReport,
    conditional_report,
    correlation_report,
    gk_common_info,
    maxcorr_svd,
)
from corrlab.dist import (  # noqa: F401
    Channel,
    JointDist2,
    JointDist3,
    load_dist,
    make_binary,
    make_dsbs,
)
from corrlab.errors import (  # noqa: F401
    CorrlabError,
    DistributionError,
    OptimizerBudgetExceeded,
)
from corrlab.gaussian import GaussianPair, gaussian_icf  # noqa: F401
from corrlab.icf import BetaCurve, IcfPoint, icf_curve, icf_minimize  # noqa: F401
from corrlab.info import mutual_information  # noqa: F401
from corrlab.nisim import BoundVerdict, evaluate_bounds, fig1_rows  # noqa: F401
