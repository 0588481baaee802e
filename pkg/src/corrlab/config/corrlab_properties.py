"""Corrlab properties - configuration framework using Pydantic.

Centralized configuration using Pydantic for type safety and validation.
Properties are organized into themed groups; the CLI resolves them as
defaults, then an optional YAML file, then environment variables, then
explicit flags.
"""

import os
from collections.abc import Mapping
from pathlib import Path
from typing import Any

import yaml
from pydantic import BaseModel, ConfigDict, Field

from .property_groups.logging_properties import LoggingConfig
from .property_groups.optimizer_properties import OptimizerConfig
from .property_groups.output_properties import OutputConfig
from .property_groups.parallel_properties import ParallelConfig

ENV_PREFIX = "CORRLAB"
THREADS_ENV = "CORRLAB_THREADS"


def _parse_env_value(value: str) -> Any:
    lowered = value.lower()
    if lowered in ("true", "false"):
        return lowered == "true"
    try:
        return int(value)
    except ValueError:
        pass
    try:
        return float(value)
    except ValueError:
        return value


class CorrlabProperties(BaseModel):
    """Centralized configuration properties for corrlab.

    Property Groups:
    - Logging: CLI log level and format (logging)
    - Optimizer: ICF channel search (optimizer)
    - Output: number formatting of tables and curves (output)
    - Parallel: worker cap for grid sweeps (parallel)

    Example usage:
        # Defaults overridden by CORRLAB__* variables
        config = CorrlabProperties.from_env()

        # Load from YAML
        config = CorrlabProperties.from_yaml(Path("corrlab.yaml"))

        # Access nested properties
        print(config.optimizer.restarts)
    """

    model_config = ConfigDict(validate_assignment=True)

    logging: LoggingConfig = Field(
        default_factory=LoggingConfig, description="Logging configuration"
    )
    optimizer: OptimizerConfig = Field(
        default_factory=OptimizerConfig, description="Channel search settings"
    )
    output: OutputConfig = Field(
        default_factory=OutputConfig, description="Output formatting"
    )
    parallel: ParallelConfig = Field(
        default_factory=ParallelConfig, description="Parallelism cap"
    )

    def to_yaml(self, path: Path | None = None) -> str:
        """Export configuration to YAML format.

        Args:
            path: Optional path to save YAML file

        Returns:
            YAML string representation
        """
        yaml_str = yaml.safe_dump(self.model_dump(), default_flow_style=False)

        if path:
            path.write_text(yaml_str, encoding="utf-8")

        return str(yaml_str)

    def to_env(self) -> dict[str, str]:
        """Flatten the configuration into ``CORRLAB__GROUP__KEY`` variables."""
        env: dict[str, str] = {}

        def flatten_dict(d: dict[str, Any], prefix: str = ENV_PREFIX) -> None:
            for key, value in d.items():
                env_key = f"{prefix}__{key.upper()}"
                if isinstance(value, dict):
                    flatten_dict(value, env_key)
                else:
                    env[env_key] = str(value)

        flatten_dict(self.model_dump())
        return env

    @classmethod
    def from_yaml(cls, path: Path) -> "CorrlabProperties":
        """Load configuration from YAML file.

        Args:
            path: Path to YAML file

        Returns:
            CorrlabProperties instance
        """
        with open(path, encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
        return cls(**data)

    @classmethod
    def from_env(
        cls,
        environ: Mapping[str, str] | None = None,
        base: "CorrlabProperties | None" = None,
    ) -> "CorrlabProperties":
        """Apply environment variables on top of ``base`` (or the defaults).

        ``CORRLAB__OPTIMIZER__RESTARTS=4`` sets ``optimizer.restarts``;
        ``CORRLAB_THREADS`` sets ``parallel.threads``.

        Args:
            environ: Variables to read, ``os.environ`` when omitted
            base: Properties the variables override

        Returns:
            CorrlabProperties instance
        """
        env = os.environ if environ is None else environ
        config: dict[str, Any] = (base or cls()).model_dump()
        for key, value in env.items():
            if not key.startswith(f"{ENV_PREFIX}__"):
                continue
            parts = key[len(ENV_PREFIX) + 2 :].lower().split("__")
            current = config
            for part in parts[:-1]:
                current = current.setdefault(part, {})
            current[parts[-1]] = _parse_env_value(value)
        if THREADS_ENV in env:
            config["parallel"]["threads"] = int(env[THREADS_ENV])
        return cls(**config)
