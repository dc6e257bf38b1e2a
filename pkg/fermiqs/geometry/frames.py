"""Module for Fermi-frame data along a worldline"""

import math
from enum import Enum

import numpy as np

from fermiqs.constants import SPATIAL_DIMENSION, UNBOUNDED
from fermiqs.exceptions import DomainError, InputRequiredError, SymmetryError

DIM = SPATIAL_DIMENSION


def _as_array(value, shape, name):
    """ Convert input to a read-only float array of the given shape """

    if value is None:
        array = np.zeros(shape)
    else:
        array = np.array(value, dtype=float)
    if array.shape != shape:
        raise DomainError('%s must have shape %s, got %s' % (name, shape, array.shape))
    if not np.all(np.isfinite(array)):
        raise DomainError('%s contains non-finite entries' % name)
    array.setflags(write=False)
    return array


def constant_curvature_riemann(alpha):
    """Spatial Riemann components of a constant curvature spacetime

    Parameters
    ----------
    alpha : float
        curvature constant (R/12)

    Returns
    -------
    ndarray
        R_ikjl = alpha (d_ij d_kl - d_il d_kj)
    """

    delta = np.eye(DIM)
    return alpha * (np.einsum('ij,kl->ikjl', delta, delta) - np.einsum('il,kj->ikjl', delta, delta))


class FermiFrameSample(object):
    """Acceleration and curvature components in the Fermi frame at one proper time

    Attributes
    ----------
    tau : float
        proper time
    a : ndarray
        acceleration a_i, shape (3,)
    r0i0j : ndarray
        tidal components R_0i0j, shape (3, 3), symmetric
    r0jik : ndarray
        components R_0jik, shape (3, 3, 3)
    rikjl : ndarray
        spatial components R_ikjl, shape (3, 3, 3, 3)

    Methods
    -------
    acceleration_norm()
        Refer to method documentation
    constant_curvature()
        Refer to method documentation
    uniform_acceleration()
        Refer to method documentation
    """

    def __init__(self, tau=0.0, **kwargs):
        """Class initialization

        Parameters
        ----------
        tau : float
            proper time of the sample
        **kwargs :
            optional keyword arguments

        Keyword Arguments
        -----------------
        a : list
            acceleration 3-vector (default zero)
        r0i0j : list
            symmetric 3x3 tidal matrix (default zero)
        r0jik : list
            3x3x3 array (default zero)
        rikjl : list
            3x3x3x3 array with Riemann symmetries (default zero)

        Returns
        -------
        None

        Raises
        ------
        DomainError
            if any component is non-finite or mis-shaped
        SymmetryError
            if R_0i0j is not symmetric or R_ikjl lacks its pair symmetry and
            antisymmetry, compared exactly as stored
        """

        if not math.isfinite(tau):
            raise DomainError('tau must be finite')
        self.tau = float(tau)
        self.a = _as_array(kwargs.pop('a', None), (DIM,), 'a')
        self.r0i0j = _as_array(kwargs.pop('r0i0j', None), (DIM, DIM), 'r0i0j')
        self.r0jik = _as_array(kwargs.pop('r0jik', None), (DIM, DIM, DIM), 'r0jik')
        self.rikjl = _as_array(kwargs.pop('rikjl', None), (DIM, DIM, DIM, DIM), 'rikjl')

        if not np.array_equal(self.r0i0j, self.r0i0j.T):
            raise SymmetryError('r0i0j must be symmetric')
        if not np.array_equal(self.rikjl, self.rikjl.transpose(2, 3, 0, 1)):
            raise SymmetryError('rikjl must satisfy pair symmetry R_ikjl = R_jlik')
        if not np.array_equal(self.rikjl, -self.rikjl.transpose(1, 0, 2, 3)):
            raise SymmetryError('rikjl must be antisymmetric under i <-> k')

    def __repr__(self):
        return 'FermiFrameSample(tau=%r, a=%r)' % (self.tau, self.a.tolist())

    def acceleration_norm(self):
        """ Euclidean norm of a_i """
        return float(np.linalg.norm(self.a))

    def same_components(self, other):
        """ True when two samples carry identical frame components """
        return (np.array_equal(self.a, other.a) and
                np.array_equal(self.r0i0j, other.r0i0j) and
                np.array_equal(self.r0jik, other.r0jik) and
                np.array_equal(self.rikjl, other.rikjl))

    @classmethod
    def constant_curvature(cls, alpha, a=None, tau=0.0):
        """Frame of a static observer in a constant curvature spacetime

        Parameters
        ----------
        alpha : float
            curvature constant, R_0i0j = -alpha delta_ij
        a : list
            acceleration 3-vector (default zero)
        tau : float
            proper time

        Returns
        -------
        FermiFrameSample
            the frame sample
        """

        return cls(tau,
                   a=a,
                   r0i0j=-alpha * np.eye(DIM),
                   rikjl=constant_curvature_riemann(alpha))

    @classmethod
    def uniform_acceleration(cls, a, tau=0.0):
        """ Rindler frame in flat spacetime, acceleration along the first axis """
        return cls(tau, a=[a, 0.0, 0.0])


class TrajectoryKind(Enum):
    """ Kinds of worldline descriptions """
    INERTIAL = 'inertial'
    UNIFORM_ACCELERATION = 'uniform_acceleration'
    CONSTANT_CURVATURE_STATIC = 'constant_curvature'
    TABULATED = 'tabulated'


class TrajectoryModel(object):
    """A worldline described by its Fermi-frame components

    Attributes
    ----------
    kind : TrajectoryKind
        the trajectory kind
    tau_range : tuple
        (tau_min, tau_max) where the model is defined

    Methods
    -------
    frame_at()
        Refer to method documentation
    is_stationary()
        Refer to method documentation
    """

    def __init__(self, kind, **kwargs):
        """Class initialization

        Parameters
        ----------
        kind : TrajectoryKind
            the trajectory kind
        **kwargs :
            optional keyword arguments

        Keyword Arguments
        -----------------
        a : float, list
            acceleration (scalar along the first axis for uniform acceleration,
            3-vector for constant curvature)
        alpha : float
            curvature constant for constant curvature trajectories
        samples : list
            FermiFrameSample objects for tabulated trajectories
        tau_range : tuple
            interval where the model is defined (default unbounded,
            sample range for tabulated trajectories)

        Returns
        -------
        None
        """

        self.kind = TrajectoryKind(kind)
        self.alpha = float(kwargs.pop('alpha', 0.0))
        a = kwargs.pop('a', 0.0)
        self._samples = list(kwargs.pop('samples', []))

        if self.kind == TrajectoryKind.TABULATED:
            if not self._samples:
                raise InputRequiredError('Tabulated trajectories need at least one sample')
            self._samples.sort(key=lambda sample: sample.tau)
            self._taus = np.array([sample.tau for sample in self._samples])
            dfl_range = (self._taus[0], self._taus[-1])
        else:
            dfl_range = (-UNBOUNDED, UNBOUNDED)
            if self.kind == TrajectoryKind.INERTIAL:
                a = None
            elif np.ndim(a) == 0:
                a = [a, 0.0, 0.0]
            self._constant = FermiFrameSample(
                0.0,
                a=a,
                r0i0j=-self.alpha * np.eye(DIM) if self.alpha else None,
                rikjl=constant_curvature_riemann(self.alpha) if self.alpha else None)

        self.tau_range = tuple(kwargs.pop('tau_range', dfl_range))

    def __repr__(self):
        return 'TrajectoryModel(%s)' % self.kind.value

    @classmethod
    def inertial(cls):
        """ Inertial worldline in flat spacetime """
        return cls(TrajectoryKind.INERTIAL)

    @classmethod
    def uniform_acceleration(cls, a):
        """ Uniformly accelerated (Rindler) worldline in flat spacetime """
        return cls(TrajectoryKind.UNIFORM_ACCELERATION, a=a)

    @classmethod
    def constant_curvature_static(cls, alpha, a=None):
        """ Static worldline in a constant curvature spacetime """
        return cls(TrajectoryKind.CONSTANT_CURVATURE_STATIC, alpha=alpha,
                   a=a if a is not None else [0.0, 0.0, 0.0])

    @classmethod
    def tabulated(cls, samples):
        """ Worldline given by externally computed frame samples """
        return cls(TrajectoryKind.TABULATED, samples=samples)

    def frame_at(self, tau):
        """Get the frame components at a proper time

        Parameters
        ----------
        tau : float
            proper time

        Returns
        -------
        FermiFrameSample
            the frame at tau; tabulated trajectories return the nearest sample

        Raises
        ------
        DomainError
            if tau lies outside tau_range
        """

        if not self.tau_range[0] <= tau <= self.tau_range[1]:
            raise DomainError('tau=%s outside trajectory range %s' % (tau, self.tau_range))

        if self.kind != TrajectoryKind.TABULATED:
            frame = self._constant
            return FermiFrameSample(tau, a=frame.a, r0i0j=frame.r0i0j,
                                    r0jik=frame.r0jik, rikjl=frame.rikjl)

        index = int(np.argmin(np.abs(self._taus - tau)))
        return self._samples[index]

    def is_stationary(self):
        """ True when the frame components do not depend on tau """

        if self.kind != TrajectoryKind.TABULATED:
            return True
        first = self._samples[0]
        return all(first.same_components(sample) for sample in self._samples[1:])
