"""Shared fixtures."""

from pathlib import Path

import numpy as np
import pytest

from corrlab.config import OptimizerConfig

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator so property suites are reproducible."""
    return np.random.default_rng(20240611)


@pytest.fixture
def light_cfg() -> OptimizerConfig:
    """Small search budget for unit tests."""
    return OptimizerConfig(restarts=1, max_evals=2000)


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES
