import os
import sys
from pathlib import Path

import pytest
from click.testing import CliRunner

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from hstrata.app import reset_context
from hstrata.models.fields import PrimeField, RationalField
from hstrata.models.forms import BinaryForm, FormSpace
from hstrata.utils.common import set_debug_checks

DATA = Path(__file__).parent / 'data'


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full-size Monte Carlo runs")


@pytest.fixture
def qq():
    return RationalField()


@pytest.fixture
def fp():
    return PrimeField()


@pytest.fixture
def small_fp():
    return PrimeField(101)


@pytest.fixture(autouse=True)
def clean_context(monkeypatch):
    for name in ('HSTRATA_PRIME', 'HSTRATA_DEBUG', 'HSTRATA_LOG_LEVEL', 'HSTRATA_MAX_RESAMPLES'):
        monkeypatch.delenv(name, raising=False)
    reset_context()
    set_debug_checks(True)
    yield
    set_debug_checks(False)
    reset_context()


@pytest.fixture
def runner():
    return CliRunner()


def space(field, j, rows):
    """Span of integer coefficient rows in R_j."""
    return FormSpace.span(field, j, [BinaryForm.from_ints(field, r) for r in rows])


def monomials(field, j, y_powers):
    return FormSpace.span(field, j, [BinaryForm.monomial(field, j, t) for t in y_powers])
