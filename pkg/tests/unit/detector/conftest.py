""" Test fixtures """

from fermiqs.detector import GaussianSwitching, UDWDetector
from fermiqs.quantum import OscillatorSpec

from ...global_test_imports import pytest
from ...shared.constants import KMS


@pytest.fixture
def wide_switching():
    """ Test fixture: Gaussian switching, T = 20 """
    return GaussianSwitching(KMS['WIDTH'])


@pytest.fixture
def unit_switching():
    """ Test fixture: Gaussian switching, T = 1 """
    return GaussianSwitching(1.0)


@pytest.fixture
def thermal_detector(wide_switching):
    """ Test fixture: gap 1, coupling 0.01, T = 20 """
    return UDWDetector(1.0, 0.01, wide_switching)


@pytest.fixture
def oscillator_detector(unit_switching):
    """ Test fixture: T = 1 probe with a unit internal oscillator """
    return UDWDetector(1.0, 1.0, unit_switching, internal=OscillatorSpec(1.0, 1.0))
