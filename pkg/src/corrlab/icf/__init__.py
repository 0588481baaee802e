"""The information-correlation function C_beta(X;Y).

Key concepts:
- C_beta: minimum of I(X,Y;W) over channels with rho_m(X;Y|W) <= beta
- IcfPoint / BetaCurve: values with the witness channels achieving them
- Endpoints: Wyner common information at beta = 0, Gács-Körner as beta -> 1

Example usage:
    from corrlab.dist import make_dsbs
    from corrlab.icf import dsbs_icf_upper, icf_minimize

    point = icf_minimize(make_dsbs(0.1), 0.3)
    assert point.value <= dsbs_icf_upper(0.1, 0.3) + 0.02
"""

from corrlab.config.property_groups.optimizer_properties import OptimizerConfig
from corrlab.icf.endpoints import (
    dsbs_icf_upper,
    dsbs_slice_masses,
    gk_endpoint_check,
    icf_additivity_upper,
    witness_minimality,
    wyner_common_info,
)
from corrlab.icf.io import curve_columns, write_curve, write_witnesses
from corrlab.icf.models import BetaCurve, IcfPoint, WitnessMinimality, WitnessSource
from corrlab.icf.optimizer import (
    beta_grid,
    icf_curve,
    icf_evaluate,
    icf_minimize,
    structured_kernels,
    two_slice_channel,
    two_slice_limit,
)
from corrlab.info.entropy import h2, h4, mi_xy_w, mutual_information

__all__ = [
    # Models
    "BetaCurve",
    "IcfPoint",
    "OptimizerConfig",
    "WitnessMinimality",
    "WitnessSource",
    # Information quantities
    "h2",
    "h4",
    "mi_xy_w",
    "mutual_information",
    # Optimizer
    "beta_grid",
    "icf_curve",
    "icf_evaluate",
    "icf_minimize",
    "structured_kernels",
    "two_slice_channel",
    "two_slice_limit",
    # Endpoints
    "dsbs_icf_upper",
    "dsbs_slice_masses",
    "gk_endpoint_check",
    "icf_additivity_upper",
    "witness_minimality",
    "wyner_common_info",
    # Curve files
    "curve_columns",
    "write_curve",
    "write_witnesses",
]
