"""Logging configuration properties.

The library only emits records; the CLI installs a coloredlogs handler on
stderr using these settings.
"""

from pydantic import BaseModel, ConfigDict, Field


class LoggingConfig(BaseModel):
    """Log level and handler formatting for the command line."""

    model_config = ConfigDict(validate_assignment=True)

    level: str = Field(
        default="WARNING",
        pattern="^(ERROR|WARNING|INFO|DEBUG)$",
        description="Root log level",
    )
    colored: bool = Field(default=True, description="Colorize stderr output")
    fmt: str = Field(
        default="%(asctime)s %(name)s %(levelname)s %(message)s",
        description="Record format passed to coloredlogs",
    )
