"""Numerical tolerances shared across corrlab.

All thresholds are absolute and apply to probabilities or to moments
computed from them.
"""

# =============================================================================
# Probability masses
# =============================================================================

MASS_TOL = 1e-12
"""Normalization tolerance; masses at or below this are treated as zero."""

NEGATIVE_TOL = 1e-12
"""Entries below ``-NEGATIVE_TOL`` are rejected as negative mass."""

# =============================================================================
# Moments
# =============================================================================

VARIANCE_TOL = 1e-14
"""Variances (or variance products) at or below this count as degenerate."""

ORDER_TOL = 1e-9
"""Slack for the ordering chain |rho| <= theta <= rho_m <= 1."""
