"""Module for Wightman functions pulled back to stationary worldlines

Vacuum two-point functions of a massless scalar in Minkowski spacetime,
regularized with a finite i epsilon:

- inertial: W(u) = -1 / (4 pi^2 (u - i eps)^2)
- uniform acceleration a: W(u) = -a^2 / (16 pi^2 sinh^2(a (u - i eps) / 2))
"""

import math
from enum import Enum

import numpy as np

from fermiqs.constants import QUADRATURE
from fermiqs.exceptions import DomainError, NonStationaryFrameError
from fermiqs.geometry import TrajectoryKind


class WightmanKind(Enum):
    """ Trajectories with closed form Wightman functions """
    INERTIAL_MINKOWSKI = 'inertial'
    RINDLER_MINKOWSKI = 'rindler'


class WightmanSpec(object):
    """Two-point function along a stationary trajectory

    Attributes
    ----------
    kind : WightmanKind
        the trajectory
    epsilon : float
        regulator (proper time)
    a : float
        acceleration for Rindler trajectories
    """

    def __init__(self, kind, epsilon, a=None):
        self.kind = WightmanKind(kind)
        if not (math.isfinite(epsilon) and epsilon > 0):
            raise DomainError('epsilon must be finite and positive')
        if self.kind == WightmanKind.RINDLER_MINKOWSKI:
            if a is None or not (math.isfinite(a) and a > 0):
                raise DomainError('Rindler Wightman functions need a > 0')
            a = float(a)
        else:
            a = None
        self.epsilon = float(epsilon)
        self.a = a

    def __repr__(self):
        return 'WightmanSpec(%s, epsilon=%r, a=%r)' % (self.kind.value, self.epsilon, self.a)

    @classmethod
    def inertial(cls, epsilon):
        """ Inertial worldline """
        return cls(WightmanKind.INERTIAL_MINKOWSKI, epsilon)

    @classmethod
    def rindler(cls, a, epsilon):
        """ Uniformly accelerated worldline """
        return cls(WightmanKind.RINDLER_MINKOWSKI, epsilon, a=a)

    @classmethod
    def from_trajectory(cls, trajectory, epsilon):
        """Wightman spec for a flat spacetime trajectory model

        Raises
        ------
        NonStationaryFrameError
            if the frame changes with tau
        DomainError
            for curved backgrounds, which have no closed form here
        """

        if not trajectory.is_stationary():
            raise NonStationaryFrameError('Field response needs a stationary trajectory')

        frame = trajectory.frame_at(trajectory.tau_range[0]
                                    if math.isfinite(trajectory.tau_range[0]) else 0.0)
        curved = np.any(frame.r0i0j) or np.any(frame.r0jik) or np.any(frame.rikjl)
        if trajectory.kind == TrajectoryKind.CONSTANT_CURVATURE_STATIC or curved:
            raise DomainError('No closed form Wightman function in curved spacetime')
        if frame.acceleration_norm() == 0.0:
            return cls.inertial(epsilon)
        return cls.rindler(frame.acceleration_norm(), epsilon)

    def with_epsilon(self, epsilon):
        """ Copy with another regulator """
        return WightmanSpec(self.kind, epsilon, a=self.a)


def regulator(switching, a=None, **kwargs):
    """Regulator epsilon = factor * min(T, 1/a)

    Parameters
    ----------
    switching : GaussianSwitching
        detector switching
    a : float
        acceleration (none or zero for inertial)
    **kwargs :
        optional keyword arguments

    Keyword Arguments
    -----------------
    epsilon_factor : float
        the factor (default constants value)

    Returns
    -------
    float
        the regulator
    """

    factor = kwargs.pop('epsilon_factor', QUADRATURE['EPSILON_FACTOR'])
    scale = switching.width if not a else min(switching.width, 1.0 / a)
    return factor * scale


def _inverse_sinh_squared(z):
    """ 1/sinh(z)^2 via 4 e^-2z / (1 - e^-2z)^2 with Re z >= 0 """

    z = np.where(np.real(z) < 0, -z, z)
    decay = np.exp(-2.0 * z)
    return 4.0 * decay / np.expm1(-2.0 * z) ** 2


def pulled_back_wightman(spec, u):
    """Evaluate the regularized Wightman function

    Parameters
    ----------
    spec : WightmanSpec
        trajectory and regulator
    u : float, ndarray
        proper time difference

    Returns
    -------
    complex, ndarray
        W(u - i epsilon)
    """

    shifted = np.asarray(u, dtype=float) - 1j * spec.epsilon
    if spec.kind == WightmanKind.INERTIAL_MINKOWSKI:
        value = -1.0 / (4.0 * math.pi ** 2 * shifted ** 2)
    else:
        value = -spec.a ** 2 / (16.0 * math.pi ** 2) * _inverse_sinh_squared(0.5 * spec.a * shifted)
    return value[()] if np.ndim(value) == 0 else value
