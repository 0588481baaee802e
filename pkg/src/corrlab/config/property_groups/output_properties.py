"""Output configuration properties.

Numeric output of every table and curve file goes through
:meth:`OutputConfig.format_number`.
"""

import math

from pydantic import BaseModel, ConfigDict, Field


class OutputConfig(BaseModel):
    """Formatting of delimited output files."""

    model_config = ConfigDict(validate_assignment=True)

    digits: int = Field(
        default=12, ge=1, le=17, description="Significant digits of numbers"
    )
    delimiter: str = Field(
        default="\t", min_length=1, max_length=1, description="Column delimiter"
    )

    def format_number(self, value: float) -> str:
        """Render a number with the configured significant digits.

        NaN is written as ``nan`` and infinities as ``inf``/``-inf``.
        """
        if math.isnan(value):
            return "nan"
        return f"{value:.{self.digits}g}"

    def join(self, fields: list[str]) -> str:
        """Join fields into one line without the trailing newline."""
        return self.delimiter.join(fields)
