"""Non-interactive simulation: outer bounds, binary inner bound, region table.

Key concepts:
- Outer bounds: maximal correlation, mutual information and C_beta of the
  target may not exceed those of the source
- Inner bound: product binary channels reaching a binary target
- Fig1Row: q-intervals of each bound for the binary example at one p
"""

from corrlab.nisim.bounds import (
    IcfCache,
    default_betas,
    evaluate_bounds,
    icf_outer_check,
    inner_range_binary,
    inner_search_binary,
    mc_outer_check,
    mi_outer_check,
)
from corrlab.nisim.fig1 import (
    DEFAULT_P_GRID,
    FIG1_OPTIMIZER,
    centred_grid,
    fig1_row,
    fig1_rows,
    fig1_source,
    fig1_target,
    write_fig1_table,
)
from corrlab.nisim.models import (
    BoundVerdict,
    CheckResult,
    Fig1Row,
    IcfCheckResult,
    InnerResult,
    InnerVerdict,
    Verdict,
)

__all__ = [
    # Models
    "BoundVerdict",
    "CheckResult",
    "Fig1Row",
    "IcfCheckResult",
    "InnerResult",
    "InnerVerdict",
    "Verdict",
    # Bounds
    "IcfCache",
    "default_betas",
    "evaluate_bounds",
    "icf_outer_check",
    "inner_range_binary",
    "inner_search_binary",
    "mc_outer_check",
    "mi_outer_check",
    # Region table
    "DEFAULT_P_GRID",
    "FIG1_OPTIMIZER",
    "centred_grid",
    "fig1_row",
    "fig1_rows",
    "fig1_source",
    "fig1_target",
    "write_fig1_table",
]
