"""Dependence measures: Pearson, correlation ratio, maximal correlation.

Key concepts:
- Unconditional, event-conditional (given U=u) and conditional (given U)
  versions of every measure
- Maximal correlation through the singular values of the Q-matrix, with an
  alternating-maximization oracle
- Gács-Körner common information from the support graph

Example usage:
    from corrlab.corr import correlation_report
    from corrlab.dist import make_dsbs

    report = correlation_report(make_dsbs(0.1))
    assert abs(report.maxcorr - 0.8) < 1e-9
"""

from corrlab.corr.common_info import common_part, common_part_masses, gk_common_info
from corrlab.corr.maxcorr import (
    cond_maxcorr,
    cond_maxcorr_array,
    cond_maxcorr_slices,
    maxcorr_array,
    maxcorr_binary_formula,
    maxcorr_bruteforce,
    maxcorr_slices_array,
    maxcorr_svd,
    q_matrix,
)
from corrlab.corr.measures import (
    cond_corr_ratio,
    cond_corr_ratio_yx,
    cond_pearson,
    corr_ratio,
    covariance_gap,
    expected_var_x,
    mmse,
    pearson,
)
from corrlab.corr.models import CorrelationReport, EventConditionalRow, QMatrix
from corrlab.corr.reports import (
    conditional_report,
    correlation_report,
    event_conditional,
    event_conditional_table,
)

__all__ = [
    # Models
    "CorrelationReport",
    "EventConditionalRow",
    "QMatrix",
    # Measures
    "cond_corr_ratio",
    "cond_corr_ratio_yx",
    "cond_pearson",
    "corr_ratio",
    "covariance_gap",
    "expected_var_x",
    "mmse",
    "pearson",
    # Maximal correlation
    "cond_maxcorr",
    "cond_maxcorr_array",
    "cond_maxcorr_slices",
    "maxcorr_array",
    "maxcorr_binary_formula",
    "maxcorr_bruteforce",
    "maxcorr_slices_array",
    "maxcorr_svd",
    "q_matrix",
    # Common information
    "common_part",
    "common_part_masses",
    "gk_common_info",
    # Reports
    "conditional_report",
    "correlation_report",
    "event_conditional",
    "event_conditional_table",
]
