""" Test fixtures """

import numpy as np

from fermiqs.geometry import FermiFrameSample

from ...global_test_imports import pytest


@pytest.fixture
def rng():
    """ Test fixture: seeded random generator """
    return np.random.default_rng(20200521)


@pytest.fixture
def rindler_frame():
    """ Test fixture: uniformly accelerated frame, a = 1 """
    return FermiFrameSample.uniform_acceleration(1.0)


@pytest.fixture
def curved_frame():
    """ Test fixture: static frame in constant curvature, alpha = 0.04 """
    return FermiFrameSample.constant_curvature(0.04)
