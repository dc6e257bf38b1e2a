""" Test fixtures """

import numpy as np

from fermiqs.quantum import Grid1D, OscillatorSpec, build_grid_operators

from ...global_test_imports import pytest
from ...shared.constants import GRID, OSCILLATOR


@pytest.fixture
def flat_grid():
    """ Test fixture: 2001 points over [-10, 10], flat measure """
    return Grid1D(GRID['N_POINTS'], GRID['X_MIN'], GRID['X_MAX'])


@pytest.fixture
def flat_operators(flat_grid):
    """ Test fixture: default order operators on the flat grid """
    return build_grid_operators(flat_grid)


@pytest.fixture
def unit_oscillator():
    """ Test fixture: m = 1, omega = 1 """
    return OscillatorSpec(OSCILLATOR['M'], OSCILLATOR['OMEGA'])


@pytest.fixture
def gaussian():
    """ Test fixture: normalized oscillator ground state """
    return lambda x: np.pi ** -0.25 * np.exp(-0.5 * np.asarray(x) ** 2)
