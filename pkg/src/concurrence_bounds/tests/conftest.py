"""Pytest config"""

import logging
from pathlib import Path

import numpy as np
import pytest

from concurrence_bounds.linalg import DensityMatrix
from concurrence_bounds.states import max_entangled

BASE_DIR = Path(__file__).parent.absolute()
TEST_DATA_DIR = BASE_DIR / ".." / "test_data"


def pytest_addoption(parser):
    """Pytest hook that adds command line options"""
    parser.addoption(
        "--disable-logging",
        action="store_true",
        default=False,
        help="Disable all logging during test run",
    )
    parser.addoption(
        "--error-log-only",
        action="store_true",
        default=False,
        help="Disable all logging output below 'error' level during test run",
    )


def pytest_configure(config):
    """Pytest hook that runs after command line options have been parsed"""
    if config.getoption("--disable-logging"):
        logging.disable(logging.CRITICAL)
    elif config.getoption("--error-log-only"):
        logging.disable(logging.WARNING)


@pytest.fixture()
def test_data_dir():
    """Directory holding the reference state files"""
    return TEST_DATA_DIR


@pytest.fixture()
def bell_state():
    """Bell state Phi+ as a density matrix"""
    return max_entangled(2).density()


@pytest.fixture()
def maximally_mixed():
    """Factory for I / (d1 d2)"""

    def _maximally_mixed(d1, d2):
        return DensityMatrix(d1, d2, np.eye(d1 * d2) / (d1 * d2))

    return _maximally_mixed


@pytest.fixture()
def rng():
    """Seeded generator for ad hoc random matrices"""
    return np.random.default_rng(1234)
