"""Module for the tidal eigenvalue and Fermi bound estimates"""

import collections
import math

import numpy as np
from scipy import linalg

from fermiqs.constants import TOLERANCES, UNBOUNDED
from fermiqs.decorators import check_finite
from fermiqs.exceptions import DomainError, InputRequiredError, SymmetryError
from fermiqs.logger import Logger

logger = Logger(__name__).get_logger()  # pylint: disable=invalid-name

BoundSample = collections.namedtuple('BoundSample', ['tau', 'a', 'lambda_r', 'ell'])


@check_finite
def lambda_r(r0i0j):
    """Largest positive eigenvalue of -R_0i0j, floored at zero

    Parameters
    ----------
    r0i0j : list
        symmetric 3x3 tidal matrix

    Returns
    -------
    float
        max(0, largest eigenvalue of -R_0i0j), i.e. the maximum of
        -R_0i0j x^i x^j over the unit sphere

    Raises
    ------
    SymmetryError
        if the input is not symmetric
    """

    matrix = np.asarray(r0i0j, dtype=float)
    if matrix.shape != (3, 3):
        raise DomainError('r0i0j must be 3x3')
    scale = max(1.0, float(np.max(np.abs(matrix))))
    if np.max(np.abs(matrix - matrix.T)) > TOLERANCES['SYMMETRY'] * scale:
        raise SymmetryError('r0i0j must be symmetric')

    largest = linalg.eigvalsh(-0.5 * (matrix + matrix.T))[-1]
    return max(0.0, float(largest))


def ell_estimate(a_norm, lambda_value):
    """ 1 / (a + sqrt(lambda_R)), unbounded when both vanish """

    denominator = a_norm + math.sqrt(lambda_value)
    if denominator == 0.0:
        return UNBOUNDED
    return 1.0 / denominator


def fermi_bound_profile(traj, tau_samples):
    """Per-sample Fermi bound data

    Parameters
    ----------
    traj : TrajectoryModel
        the worldline
    tau_samples : list
        proper times to sample

    Returns
    -------
    list
        BoundSample(tau, a, lambda_r, ell) for each sample, in input order

    Raises
    ------
    InputRequiredError
        if tau_samples is empty
    """

    tau_samples = list(tau_samples)
    if not tau_samples:
        raise InputRequiredError('At least one tau sample must be provided')

    profile = []
    for tau in tau_samples:
        frame = traj.frame_at(tau)
        a_norm = frame.acceleration_norm()
        lam = lambda_r(frame.r0i0j)
        profile.append(BoundSample(float(tau), a_norm, lam, ell_estimate(a_norm, lam)))
        logger.trace('tau=%s a=%s lambda_r=%s', tau, a_norm, lam)
    return profile


def fermi_bound(traj, tau_samples):
    """Estimate of the Fermi bound of a worldline

    Parameters
    ----------
    traj : TrajectoryModel
        the worldline
    tau_samples : list
        proper times to sample; the infimum is taken over these samples only,
        so grid density is the caller's responsibility

    Returns
    -------
    float
        inf over samples of 1 / (a + sqrt(lambda_R)), or UNBOUNDED
    """

    return min(sample.ell for sample in fermi_bound_profile(traj, tau_samples))


@check_finite
def degeneracy_radius(frame, direction):
    """Radius along a direction where the truncated g_tautau first vanishes

    Parameters
    ----------
    frame : FermiFrameSample
        the frame components
    direction : list
        non-zero 3-vector, normalized internally

    Returns
    -------
    float
        smallest r > 0 with (1 + r b)^2 + r^2 c = 0, where b = a.n and
        c = n.R_0i0j.n, or UNBOUNDED if there is none

    Notes
    -----
    The Fermi bound estimate never exceeds this radius in any direction
    """

    direction = np.asarray(direction, dtype=float)
    norm = np.linalg.norm(direction)
    if norm == 0.0:
        raise DomainError('direction must be non-zero')
    unit = direction / norm

    b = float(frame.a.dot(unit))
    c = float(unit.dot(frame.r0i0j).dot(unit))
    if c > 0.0:
        return UNBOUNDED

    # roots of (1 + r b)^2 = -c r^2 are r = -1 / (b + s) and r = -1 / (b - s)
    s = math.sqrt(-c)
    roots = [-1.0 / d for d in (b + s, b - s) if d < 0.0]
    return min(roots) if roots else UNBOUNDED
